//! Unipotent classes of `GL_n` and the Springer correspondence for `S_n`.

use std::fmt;

use serde::Serialize;

use crate::chartab::IrrLabel;
use crate::combinat::Partition;
use crate::coxeter::{CoxeterType, Factor};
use crate::error::{Error, Result};
use crate::orders::{order_data, preceq_s, Scope};
use crate::report::VerificationReport;

/// How the Jordan type of `O_E` is read off the label `λ` of `E = E^λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// `E^λ ↦ O_λ`
    Direct,
    /// `E^λ ↦ O_λ'`
    Transposed,
}

/// With the labelling of `Irr(S_n)` used here the unit is `E^(n)`, so the direct
/// orientation sends it to the regular class.
pub const ORIENTATION: Orientation = Orientation::Direct;

/// A unipotent class of `GL_n`, given by its Jordan type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct UnipotentClassA {
    pub jordan: Partition,
}

impl UnipotentClassA {
    pub fn regular(n: u32) -> Self {
        UnipotentClassA { jordan: Partition::new(vec![n]) }
    }

    pub fn identity(n: u32) -> Self {
        UnipotentClassA { jordan: Partition::new(vec![1; n as usize]) }
    }

    /// `self ⊆ closure(other)`, i.e. dominance of Jordan types.
    pub fn in_closure_of(&self, other: &UnipotentClassA) -> bool {
        self.jordan.dominated_by(&other.jordan)
    }
}

impl fmt::Display for UnipotentClassA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O{}", self.jordan)
    }
}

fn type_a_rank(t: &CoxeterType) -> Result<u32> {
    match t.factors() {
        [Factor::A(r)] => Ok(*r),
        _ => Err(Error::Unsupported(format!("Springer correspondence for {t}: type A only"))),
    }
}

/// `O_E` for `E ∈ Irr(W)`, `W = S_n` of type `A_{n-1}`.
pub fn springer_map_a(t: &CoxeterType, e: &IrrLabel) -> Result<UnipotentClassA> {
    let r = type_a_rank(t)?;
    match e {
        IrrLabel::Partition(l) if l.size() == r + 1 => Ok(UnipotentClassA {
            jordan: match ORIENTATION {
                Orientation::Direct => l.clone(),
                Orientation::Transposed => l.conjugate(),
            },
        }),
        _ => Err(Error::Domain(format!("{e} is not an irreducible of {t}"))),
    }
}

/// For `S_n`: the family order and `⪯_s` against closure of Springer images, on
/// all pairs, and `O_Ē = transpose of O_E`.
pub fn check_fthm_a(n: u32) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::Domain(format!("S_{n}: need n ≥ 2")));
    }
    let t = CoxeterType::irreducible(Factor::A(n - 1));
    let d = order_data(&t)?;
    let s = preceq_s(&t, Scope::AllProper)?;
    let labels = &d.table.irreps;
    let images = labels.iter().map(|l| springer_map_a(&t, l)).collect::<Result<Vec<_>>>()?;
    let k = labels.len();
    let mut r = VerificationReport::new(&t);
    r.run("unit ↦ regular class, sign ↦ trivial class", || {
        let ok = images[d.table.unit()] == UnipotentClassA::regular(n)
            && images[d.table.sign()] == UnipotentClassA::identity(n);
        Ok((!ok).then(|| format!("unit ↦ {}, sign ↦ {}", images[d.table.unit()], images[d.table.sign()])))
    });
    r.run("families are singletons", || {
        Ok(d.families.families.iter().find(|f| f.members.len() != 1).map(|f| {
            f.members.iter().map(|&e| labels[e].to_string()).collect::<Vec<_>>().join(", ")
        }))
    });
    r.run("E ⪯ E' iff O_E ⊆ closure(O_E')", || {
        for e in 0..k {
            for f in 0..k {
                if d.preceq(e, f) != images[e].in_closure_of(&images[f]) {
                    return Ok(Some(format!("{} and {}", labels[e], labels[f])));
                }
            }
        }
        Ok(None)
    });
    r.run("E ⪯_s E' iff O_E ⊆ closure(O_E')", || {
        if s.specials.len() != k {
            return Ok(Some(format!("{} specials out of {k}", s.specials.len())));
        }
        for e in 0..k {
            for f in 0..k {
                if s.relates(e, f) != images[e].in_closure_of(&images[f]) {
                    return Ok(Some(format!("{} and {}", labels[e], labels[f])));
                }
            }
        }
        Ok(None)
    });
    r.run("O_Ē is the transpose of O_E", || {
        for e in 0..k {
            let bar = d.families.families[d.families.family_of[d.sign[e]]].special;
            if images[bar].jordan != images[e].jordan.conjugate() {
                return Ok(Some(format!("{}: Ē = {}", labels[e], labels[bar])));
            }
        }
        Ok(None)
    });
    Ok(r)
}
