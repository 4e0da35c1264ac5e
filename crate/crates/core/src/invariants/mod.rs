//! `a`- and `b`-invariants, symbols and special representations.

mod symbol;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::chartab::{character_table, CharacterTable, DihedralIrr, IrrLabel};
use crate::combinat::Partition;
use crate::coxeter::{CoxeterType, Factor, WeightFunction};
use crate::error::{Error, Result};
use crate::scalars::IntPoly;

pub use symbol::Symbol;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrInfo {
    pub label: IrrLabel,
    pub dim: u64,
    pub b: u32,
    pub a: u32,
    pub fake_degree: IntPoly,
    pub special: bool,
}

/// A source of `a`-invariants. Everything downstream takes one of these, so a
/// provider for other weight functions can be added without touching the orders.
pub trait AFunction: Send + Sync {
    /// Distinguishes providers in memo tables.
    fn id(&self) -> &'static str;
    /// `a`-value of every irreducible, in table order.
    fn a_values(&self, t: &CoxeterType) -> Result<Arc<Vec<u32>>>;
}

/// The equal-parameter `a`-function.
#[derive(Clone, Copy, Debug, Default)]
pub struct EqualParameter;

impl AFunction for EqualParameter {
    fn id(&self) -> &'static str {
        "equal"
    }

    fn a_values(&self, t: &CoxeterType) -> Result<Arc<Vec<u32>>> {
        a_values(t)
    }
}

/// The provider for `l`; only the equal-parameter weight function is supported.
pub fn a_function(l: &WeightFunction) -> Result<EqualParameter> {
    if !l.is_equal_parameter() {
        return Err(Error::Unsupported(format!(
            "a-invariants for the weights {:?}: only equal parameters are available",
            l.weights
        )));
    }
    Ok(EqualParameter)
}

/// `a` of a type-B label via symbols.
pub fn a_type_b(lambda: &Partition, mu: &Partition) -> u32 {
    let s = Symbol::type_b(lambda, mu, Symbol::padding_b(lambda, mu));
    symbol_a(&s)
}

/// `a` of a type-D label via symbols.
pub fn a_type_d(lambda: &Partition, mu: &Partition) -> u32 {
    let s = Symbol::type_d(lambda, mu, Symbol::padding_d(lambda, mu));
    symbol_a(&s)
}

/// Pairwise-minimum sum normalized by the unit symbol of the same shape.
pub fn symbol_a(s: &Symbol) -> u32 {
    (s.pair_min_sum() - s.zero_of_shape().pair_min_sum()) as u32
}

fn a_irreducible(f: Factor, table: &CharacterTable, label: &IrrLabel) -> Result<u32> {
    let unexpected = || Error::inconsistency(format!("label {label} in a table of type {f}"));
    Ok(match (f, label) {
        (Factor::A(_), IrrLabel::Partition(p)) => p.n_value(),
        (Factor::B(_), IrrLabel::BiPartition(l, m)) => a_type_b(l, m),
        (Factor::D(_), IrrLabel::DPair(l, m)) => a_type_d(l, m),
        (Factor::D(_), IrrLabel::DDegenerate(l, _)) => a_type_d(l, l),
        (Factor::I2(m), IrrLabel::Dihedral(d)) => match d {
            DihedralIrr::Unit => 0,
            DihedralIrr::Sign => m,
            _ => 1,
        },
        (Factor::H3 | Factor::H4 | Factor::F4, _) => {
            let i = table.irr_index(label).ok_or_else(unexpected)?;
            let ab = table.bundled_ab.as_ref().ok_or_else(unexpected)?;
            ab[i].0
        }
        _ => return Err(unexpected()),
    })
}

type Memo<T> = Mutex<HashMap<CoxeterType, Arc<T>>>;

fn a_memo() -> &'static Memo<Vec<u32>> {
    static M: OnceLock<Memo<Vec<u32>>> = OnceLock::new();
    M.get_or_init(Default::default)
}

fn info_memo() -> &'static Memo<Vec<IrrInfo>> {
    static M: OnceLock<Memo<Vec<IrrInfo>>> = OnceLock::new();
    M.get_or_init(Default::default)
}

/// Equal-parameter `a`-values in table order; additive over factors.
pub fn a_values(t: &CoxeterType) -> Result<Arc<Vec<u32>>> {
    if let Some(v) = a_memo().lock().unwrap().get(t) {
        return Ok(v.clone());
    }
    let table = character_table(t)?;
    let values = match t.factors() {
        [] => vec![0],
        [f] => table.irreps.iter().map(|l| a_irreducible(*f, &table, l)).collect::<Result<Vec<_>>>()?,
        fs => {
            let parts: Vec<Arc<Vec<u32>>> =
                fs.iter().map(|&f| a_values(&CoxeterType::irreducible(f))).collect::<Result<_>>()?;
            let tables = table.factor_tables().expect("product table");
            table
                .irreps
                .iter()
                .map(|l| match l {
                    IrrLabel::Product(ls) => Ok(ls
                        .iter()
                        .zip(tables)
                        .zip(&parts)
                        .map(|((l, t), a)| a[t.irr_index(l).unwrap()])
                        .sum()),
                    _ => Err(Error::inconsistency(format!("label {l} in a product table"))),
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    let v = Arc::new(values);
    Ok(a_memo().lock().unwrap().entry(t.clone()).or_insert(v).clone())
}

/// `b`-values in table order: valuations of the fake degrees.
pub fn b_values(t: &CoxeterType) -> Result<Vec<u32>> {
    let table = character_table(t)?;
    table.fake_degrees()?.iter().map(|p| Ok(p.valuation()? as u32)).collect()
}

pub fn b_invariant(t: &CoxeterType, e: &IrrLabel) -> Result<u32> {
    let table = character_table(t)?;
    let i = irr_index(&table, e)?;
    Ok(b_values(t)?[i])
}

pub fn a_invariant(t: &CoxeterType, e: &IrrLabel, l: &WeightFunction) -> Result<u32> {
    let f = a_function(l)?;
    let table = character_table(t)?;
    let i = irr_index(&table, e)?;
    Ok(f.a_values(t)?[i])
}

fn irr_index(table: &CharacterTable, e: &IrrLabel) -> Result<usize> {
    table.irr_index(e).ok_or_else(|| Error::Domain(format!("{e} is not an irreducible of {}", table.ty)))
}

/// Label, dimension, `a`, `b`, fake degree and special flag of every irreducible.
pub fn irr_info(t: &CoxeterType) -> Result<Arc<Vec<IrrInfo>>> {
    if let Some(v) = info_memo().lock().unwrap().get(t) {
        return Ok(v.clone());
    }
    let table = character_table(t)?;
    let a = a_values(t)?;
    let fake = table.fake_degrees()?;
    let mut out = Vec::with_capacity(table.num_irreps());
    for (i, label) in table.irreps.iter().enumerate() {
        let b = fake[i].valuation()? as u32;
        if a[i] > b {
            return Err(Error::inconsistency(format!("{t}: a = {} exceeds b = {b} for {label}", a[i])));
        }
        out.push(IrrInfo {
            label: label.clone(),
            dim: table.dim(i),
            b,
            a: a[i],
            fake_degree: fake[i].clone(),
            special: a[i] == b,
        });
    }
    let v = Arc::new(out);
    Ok(info_memo().lock().unwrap().entry(t.clone()).or_insert(v).clone())
}

/// Indices of the special irreducibles.
pub fn specials(t: &CoxeterType) -> Result<Vec<usize>> {
    Ok(irr_info(t)?.iter().enumerate().filter(|(_, e)| e.special).map(|(i, _)| i).collect())
}
