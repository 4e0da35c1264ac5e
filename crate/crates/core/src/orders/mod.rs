//! Truncated induction: `⇝_L`, families, the preorder `⪯` on irreducibles and the
//! order it induces on families.

mod poset;
mod relation;
mod special;
pub mod suite;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::chartab::{character_table, induction_matrix, CharacterTable, InductionMatrix, IrrLabel};
use crate::coxeter::{CoxeterType, ParabolicSubset};
use crate::error::{Error, Result};
use crate::invariants::{AFunction, EqualParameter};

pub use poset::{family_poset, FamilyNode, FamilyPoset, PosetEdge, POSET_SCHEMA};
pub use poset::family_relation;
pub use relation::Relation;
pub use special::{check_spaltenstein, j_induce, preceq_s, special_dual, SpaltensteinReport, SpecialOrder};

/// Which subsets `I ⊊ S` the recursions range over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Scope {
    /// `|I| = |S| - 1`.
    Maximal,
    AllProper,
}

impl Scope {
    pub fn subsets(self, t: &CoxeterType) -> Vec<ParabolicSubset> {
        match self {
            Scope::Maximal => t.maximal_parabolics(),
            Scope::AllProper => t.proper_parabolics(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Clause {
    /// `E` is a constituent of `Ind(M')` and `M'' ⇝_L E'`.
    Direct,
    /// `E' ⊗ sgn` is a constituent of `Ind(M')` and `M'' ⇝_L E ⊗ sgn`.
    SignTwisted,
}

/// Why `E ⪯ E'` holds in one step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub nodes: Vec<usize>,
    pub sub_type: String,
    /// `M'` and `M''` as indices into the table of the canonical parabolic type.
    pub m1: usize,
    pub m2: usize,
    pub clause: Clause,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub members: Vec<usize>,
    pub a: u32,
    pub special: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyPartition {
    pub families: Vec<Family>,
    pub family_of: Vec<usize>,
}

/// Everything the recursion produces for one type.
pub struct OrderData {
    pub ty: CoxeterType,
    pub scope: Scope,
    pub table: Arc<CharacterTable>,
    pub a: Arc<Vec<u32>>,
    pub b: Vec<u32>,
    /// `E ↦ E ⊗ sgn` on indices.
    pub sign: Vec<usize>,
    /// One-step relations with a witness each: the elementary step graph.
    pub steps: HashMap<(usize, usize), Witness>,
    /// `leq.get(e, f)` is `E ⪯ F`.
    pub leq: Relation,
    pub families: FamilyPartition,
}

impl OrderData {
    pub fn preceq(&self, e: usize, f: usize) -> bool {
        self.leq.get(e, f)
    }

    pub fn is_special(&self, e: usize) -> bool {
        self.a[e] == self.b[e]
    }

    pub fn label(&self, e: usize) -> &IrrLabel {
        &self.table.irreps[e]
    }

    /// Step edges sorted by endpoints.
    pub fn step_edges(&self) -> Vec<(usize, usize, &Witness)> {
        let mut v: Vec<_> = self.steps.iter().map(|(&(e, f), w)| (e, f, w)).collect();
        v.sort_by_key(|x| (x.0, x.1));
        v
    }
}

type Key = (&'static str, Scope, CoxeterType);
type Memo = Mutex<HashMap<Key, Arc<OrderData>>>;

fn memo() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(Default::default)
}

/// Equal-parameter order data over maximal parabolics.
pub fn order_data(t: &CoxeterType) -> Result<Arc<OrderData>> {
    order_data_with(t, &EqualParameter, Scope::Maximal)
}

pub fn order_data_with(t: &CoxeterType, afn: &dyn AFunction, scope: Scope) -> Result<Arc<OrderData>> {
    let key = (afn.id(), scope, t.clone());
    if let Some(d) = memo().lock().unwrap().get(&key) {
        return Ok(d.clone());
    }
    let d = Arc::new(compute(t, afn, scope)?);
    Ok(memo().lock().unwrap().entry(key).or_insert(d).clone())
}

pub fn families(t: &CoxeterType) -> Result<FamilyPartition> {
    Ok(order_data(t)?.families.clone())
}

/// `E ⪯ E'` as a relation on table indices.
pub fn preceq(t: &CoxeterType) -> Result<Relation> {
    Ok(order_data(t)?.leq.clone())
}

/// Data of one parabolic `W_I` needed by the recursions.
pub(crate) struct Parabolic {
    pub sub_type: CoxeterType,
    pub ind: Arc<InductionMatrix>,
    pub sub: Arc<OrderData>,
    /// `cons[m]`: constituents of `Ind(M)`.
    pub cons: Vec<Vec<usize>>,
    /// `lead[m]`: the `E` with `M ⇝_L E`.
    pub lead: Vec<Vec<usize>>,
}

pub(crate) fn parabolic(
    p: &ParabolicSubset,
    a: &[u32],
    afn: &dyn AFunction,
    scope: Scope,
) -> Result<Parabolic> {
    let ind = induction_matrix(p)?;
    let sub_type = ind.sub.ty.clone();
    let sub = order_data_with(&sub_type, afn, scope)?;
    let mut cons = Vec::new();
    let mut lead = Vec::new();
    for (m, row) in ind.mult.iter().enumerate() {
        let c: Vec<usize> = (0..row.len()).filter(|&e| row[e] > 0).collect();
        lead.push(c.iter().copied().filter(|&e| a[e] == sub.a[m]).collect());
        cons.push(c);
    }
    Ok(Parabolic { sub_type, ind, sub, cons, lead })
}

/// `M ⇝_L E`: `E` is a constituent of `Ind_I^S(M)` with `a_E = a_M`.
pub fn leads_to(t: &CoxeterType, nodes: &[usize], m: &IrrLabel, e: &IrrLabel) -> Result<bool> {
    let p = ParabolicSubset::new(t, nodes.to_vec());
    let ind = induction_matrix(&p)?;
    let mi = ind.sub.irr_index(m).ok_or_else(|| Error::Domain(format!("{m} is not an irreducible of {}", ind.sub.ty)))?;
    let ei = ind.ambient.irr_index(e).ok_or_else(|| Error::Domain(format!("{e} is not an irreducible of {t}")))?;
    let eq = EqualParameter;
    Ok(ind.mult[mi][ei] > 0 && eq.a_values(t)?[ei] == eq.a_values(&ind.sub.ty)?[mi])
}

fn compute(t: &CoxeterType, afn: &dyn AFunction, scope: Scope) -> Result<OrderData> {
    let table = character_table(t)?;
    let a = afn.a_values(t)?;
    let b: Vec<u32> = table.fake_degrees()?.iter().map(|p| p.valuation().map(|v| v as u32)).collect::<Result<_>>()?;
    let sign = table.tensor_sign_perm().to_vec();
    let n = table.num_irreps();
    let mut uf = UnionFind::<usize>::new(n);
    let mut steps: HashMap<(usize, usize), Witness> = HashMap::new();
    let mut add = |e: usize, f: usize, w: &dyn Fn() -> Witness| {
        steps.entry((e, f)).or_insert_with(w);
    };
    let subsets = if t.rank() == 0 { Vec::new() } else { scope.subsets(t) };
    for p in &subsets {
        let par = parabolic(p, &a, afn, scope)?;
        let sub = &par.sub;
        let sub_name = par.sub_type.to_string();
        let witness = |m1: usize, m2: usize, clause: Clause| Witness {
            nodes: p.nodes.clone(),
            sub_type: sub_name.clone(),
            m1,
            m2,
            clause,
        };
        for fam in &sub.families.families {
            let linked: Vec<usize> = fam.members.iter().flat_map(|&m| par.lead[m].iter().copied()).collect();
            for w in linked.windows(2) {
                uf.union(w[0], w[1]);
            }
            for w in linked.windows(2) {
                uf.union(sign[w[0]], sign[w[1]]);
            }
        }
        for m1 in 0..sub.table.num_irreps() {
            // f ↦ some M'' ⪰ M' with M'' ⇝_L f
            let mut up: Vec<Option<usize>> = vec![None; n];
            for m2 in 0..sub.table.num_irreps() {
                if sub.leq.get(m1, m2) {
                    for &f in &par.lead[m2] {
                        up[f].get_or_insert(m2);
                    }
                }
            }
            for &e in &par.cons[m1] {
                for (f, m2) in up.iter().enumerate() {
                    if let Some(m2) = *m2 {
                        add(e, f, &|| witness(m1, m2, Clause::Direct));
                        add(sign[f], sign[e], &|| witness(m1, m2, Clause::SignTwisted));
                    }
                }
            }
        }
    }
    let mut leq = Relation::identity(n);
    for &(e, f) in steps.keys() {
        leq.set(e, f);
    }
    let leq = leq.closure();
    let families = partition(&table, &a, &b, &mut uf)?;
    let data = OrderData { ty: t.clone(), scope, table, a, b, sign, steps, leq, families };
    check_consistency(&data)?;
    Ok(data)
}

fn partition(table: &CharacterTable, a: &[u32], b: &[u32], uf: &mut UnionFind<usize>) -> Result<FamilyPartition> {
    let n = table.num_irreps();
    let mut blocks: HashMap<usize, Vec<usize>> = HashMap::new();
    for e in 0..n {
        blocks.entry(uf.find_mut(e)).or_default().push(e);
    }
    let mut families = Vec::new();
    for members in blocks.into_values() {
        let fa = a[members[0]];
        if members.iter().any(|&e| a[e] != fa) {
            return Err(Error::inconsistency(format!("{}: a is not constant on a family", table.ty)));
        }
        let specials: Vec<usize> = members.iter().copied().filter(|&e| a[e] == b[e]).collect();
        if specials.len() != 1 {
            return Err(Error::inconsistency(format!(
                "{}: the family of {} has {} special members",
                table.ty,
                table.irreps[members[0]],
                specials.len()
            )));
        }
        if members.iter().map(|&e| b[e]).min() != Some(fa) {
            return Err(Error::inconsistency(format!("{}: least b in a family differs from its a", table.ty)));
        }
        families.push(Family { members, a: fa, special: specials[0] });
    }
    let key = |f: &Family| (f.a, f.members.iter().map(|&e| table.irreps[e].to_string()).min().unwrap());
    families.sort_by_cached_key(key);
    let mut family_of = vec![0; n];
    for (i, f) in families.iter().enumerate() {
        for &e in &f.members {
            family_of[e] = i;
        }
    }
    Ok(FamilyPartition { families, family_of })
}

/// Mutual `⪯` must coincide with lying in one family.
fn check_consistency(d: &OrderData) -> Result<()> {
    let fam = &d.families.family_of;
    for (e, f) in d.leq.pairs() {
        if d.leq.get(f, e) != (fam[e] == fam[f]) {
            return Err(Error::inconsistency(format!(
                "{}: {} and {} are mutually related under ⪯ = {} but same family = {}",
                d.ty,
                d.label(e),
                d.label(f),
                d.leq.get(f, e),
                fam[e] == fam[f]
            )));
        }
    }
    Ok(())
}

/// Recomputes a step from scratch: induction by the character formula, `⪯` in the
/// parabolic, and the `a`-condition of `⇝_L`.
pub fn verify_step(d: &OrderData, e: usize, f: usize, w: &Witness) -> Result<bool> {
    let p = ParabolicSubset::new(&d.ty, w.nodes.clone());
    let (sub_ty, _) = p.classify();
    let sub = order_data_with(&sub_ty, &EqualParameter, d.scope)?;
    let constituent = |m: usize, x: usize| -> Result<bool> {
        let ind = crate::chartab::induce(&p, &sub.table.irr_character(m))?;
        let mult = d.table.inner_product(&ind.values, &d.table.values[x]);
        Ok(!mult.is_zero())
    };
    let leads = |m: usize, x: usize| -> Result<bool> { Ok(constituent(m, x)? && d.a[x] == sub.a[m]) };
    if !sub.leq.get(w.m1, w.m2) {
        return Ok(false);
    }
    Ok(match w.clause {
        Clause::Direct => constituent(w.m1, e)? && leads(w.m2, f)?,
        Clause::SignTwisted => constituent(w.m1, d.sign[f])? && leads(w.m2, d.sign[e])?,
    })
}
