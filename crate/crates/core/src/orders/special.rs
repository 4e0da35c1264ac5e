//! Special representations: `j`-induction, the duality `E ↦ Ē`, the relation `⪯_s`
//! and the strict inequality for specials that are not `j`-induced.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::chartab::IrrLabel;
use crate::coxeter::{CoxeterType, ParabolicSubset};
use crate::error::{Error, Result};
use crate::invariants::{AFunction, EqualParameter};

use super::{order_data_with, parabolic, OrderData, Parabolic, Relation, Scope};

/// `j_I^S(M)` by index: the unique special constituent of `Ind(M)` with `a = a_M`.
/// It must also be the only constituent with `b = b_M`, occur once, and no
/// constituent may have smaller `a` or smaller `b`.
pub(crate) fn j_index(d: &OrderData, par: &Parabolic, m: usize) -> Result<usize> {
    let (am, bm) = (par.sub.a[m], par.sub.b[m]);
    let row = &par.ind.mult[m];
    let bad = |why: String| {
        Error::inconsistency(format!("{}: j-induction of {} from {}: {why}", d.ty, par.sub.label(m), par.sub_type))
    };
    let cons: Vec<usize> = (0..row.len()).filter(|&e| row[e] > 0).collect();
    if let Some(&e) = cons.iter().find(|&&e| d.a[e] < am || d.b[e] < bm) {
        return Err(bad(format!("{} has smaller a or b", d.label(e))));
    }
    let by_a: Vec<usize> = cons.iter().copied().filter(|&e| d.a[e] == am && d.is_special(e)).collect();
    let by_b: Vec<usize> = cons.iter().copied().filter(|&e| d.b[e] == bm).collect();
    match (by_a.as_slice(), by_b.as_slice()) {
        ([e], [f]) if e == f && row[*e] == 1 => Ok(*e),
        _ => Err(bad(format!("special constituents of equal a {by_a:?}, constituents of equal b {by_b:?}"))),
    }
}

pub fn j_induce(t: &CoxeterType, nodes: &[usize], m: &IrrLabel) -> Result<IrrLabel> {
    let d = order_data_with(t, &EqualParameter, Scope::Maximal)?;
    let p = ParabolicSubset::new(t, nodes.to_vec());
    let par = parabolic(&p, &d.a, &EqualParameter, Scope::Maximal)?;
    let mi = par
        .sub
        .table
        .irr_index(m)
        .ok_or_else(|| Error::Domain(format!("{m} is not an irreducible of {}", par.sub_type)))?;
    if !par.sub.is_special(mi) {
        return Err(Error::Domain(format!("{m} is not special in {}", par.sub_type)));
    }
    Ok(d.label(j_index(&d, &par, mi)?).clone())
}

/// `Ē`: the special member of the family of `E ⊗ sgn`, on indices.
pub(crate) fn dual_index(d: &OrderData, e: usize) -> usize {
    let f = d.families.family_of[d.sign[e]];
    d.families.families[f].special
}

pub fn special_dual(t: &CoxeterType, e: &IrrLabel) -> Result<IrrLabel> {
    let d = order_data_with(t, &EqualParameter, Scope::Maximal)?;
    let i = d.table.irr_index(e).ok_or_else(|| Error::Domain(format!("{e} is not an irreducible of {t}")))?;
    if !d.is_special(i) {
        return Err(Error::Domain(format!("{e} is not special")));
    }
    Ok(d.label(dual_index(&d, i)).clone())
}

/// `⪯_s` on the specials of one type.
pub struct SpecialOrder {
    pub ty: CoxeterType,
    pub data: Arc<OrderData>,
    /// Table indices of the specials, increasing.
    pub specials: Vec<usize>,
    /// `leq.get(i, j)`: `specials[i] ⪯_s specials[j]`.
    pub leq: Relation,
}

impl SpecialOrder {
    pub fn position(&self, e: usize) -> Option<usize> {
        self.specials.iter().position(|&x| x == e)
    }

    pub fn relates(&self, e: usize, f: usize) -> bool {
        match (self.position(e), self.position(f)) {
            (Some(i), Some(j)) => self.leq.get(i, j),
            _ => false,
        }
    }
}

type Memo = Mutex<HashMap<(Scope, CoxeterType), Arc<SpecialOrder>>>;

fn memo() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(Default::default)
}

/// `⪯_s`, with `I` ranging over `scope`.
pub fn preceq_s(t: &CoxeterType, scope: Scope) -> Result<Arc<SpecialOrder>> {
    if let Some(s) = memo().lock().unwrap().get(&(scope, t.clone())) {
        return Ok(s.clone());
    }
    let s = Arc::new(compute(t, &EqualParameter, scope)?);
    Ok(memo().lock().unwrap().entry((scope, t.clone())).or_insert(s).clone())
}

fn compute(t: &CoxeterType, afn: &dyn AFunction, scope: Scope) -> Result<SpecialOrder> {
    let d = order_data_with(t, afn, scope)?;
    let specials: Vec<usize> = (0..d.table.num_irreps()).filter(|&e| d.is_special(e)).collect();
    let pos: HashMap<usize, usize> = specials.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut leq = Relation::empty(specials.len());
    if t.rank() == 0 {
        leq = Relation::identity(1);
    }
    for p in scope.subsets(t) {
        let par = parabolic(&p, &d.a, afn, scope)?;
        let sub = preceq_s(&par.sub_type, scope)?;
        for (i1, &m1) in sub.specials.iter().enumerate() {
            let cons: Vec<usize> = par.cons[m1].iter().copied().filter(|e| pos.contains_key(e)).collect();
            for (i2, &m2) in sub.specials.iter().enumerate() {
                if !sub.leq.get(i1, i2) {
                    continue;
                }
                let j = j_index(&d, &par, m2)?;
                for &e in &cons {
                    leq.set(pos[&e], pos[&j]);
                    leq.set(pos[&dual_index(&d, j)], pos[&dual_index(&d, e)]);
                }
            }
        }
    }
    Ok(SpecialOrder { ty: t.clone(), data: d, specials, leq })
}

#[derive(Clone, Debug, Serialize)]
pub struct SpaltensteinReport {
    #[serde(rename = "type")]
    pub ty: String,
    /// Specials of the form `j_I^S(M)` with `I ⊊ S`.
    pub j_induced: Vec<String>,
    /// Specials outside that set with `(a_{E⊗sgn}, a_E)`.
    pub others: Vec<(String, u32, u32)>,
}

/// Computes `S°(W)` over all `I ⊊ S` and checks `a_{E⊗sgn} < a_E` for every special
/// outside it.
pub fn check_spaltenstein(t: &CoxeterType) -> Result<SpaltensteinReport> {
    let d = order_data_with(t, &EqualParameter, Scope::Maximal)?;
    let mut circ = BTreeSet::new();
    if t.rank() > 0 {
        for p in t.proper_parabolics() {
            let par = parabolic(&p, &d.a, &EqualParameter, Scope::Maximal)?;
            for m in 0..par.sub.table.num_irreps() {
                if par.sub.is_special(m) {
                    circ.insert(j_index(&d, &par, m)?);
                }
            }
        }
    }
    let mut others = Vec::new();
    for e in (0..d.table.num_irreps()).filter(|&e| d.is_special(e) && !circ.contains(&e)) {
        let (x, y) = (d.a[d.sign[e]], d.a[e]);
        if x >= y {
            return Err(Error::inconsistency(format!(
                "{t}: {} is special, not j-induced, and a(E⊗sgn) = {x} ≥ a(E) = {y}",
                d.label(e)
            )));
        }
        others.push((d.label(e).to_string(), x, y));
    }
    Ok(SpaltensteinReport {
        ty: t.to_string(),
        j_induced: circ.iter().map(|&e| d.label(e).to_string()).collect(),
        others,
    })
}
