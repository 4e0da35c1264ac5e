use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DihedralIrr {
    Unit,
    Sign,
    /// `s ↦ 1, t ↦ -1` (m even).
    Eps1,
    /// `s ↦ -1, t ↦ 1` (m even).
    Eps2,
    Phi(u32),
}

/// Label of an irreducible character.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IrrLabel {
    Partition(Partition),
    BiPartition(Partition, Partition),
    /// Unordered pair `{λ, μ}` with `λ ≠ μ`, stored with `λ > μ`.
    DPair(Partition, Partition),
    /// `(λ, λ, ±)`; `true` is `+`.
    DDegenerate(Partition, bool),
    Dihedral(DihedralIrr),
    Table(String),
    Product(Vec<IrrLabel>),
}

impl IrrLabel {
    pub fn d_pair(a: Partition, b: Partition) -> Self {
        assert!(a != b);
        if a > b {
            IrrLabel::DPair(a, b)
        } else {
            IrrLabel::DPair(b, a)
        }
    }
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrLabel::Partition(p) => write!(f, "{p}"),
            IrrLabel::BiPartition(a, b) => write!(f, "({a},{b})"),
            IrrLabel::DPair(a, b) => write!(f, "{{{a},{b}}}"),
            IrrLabel::DDegenerate(a, plus) => write!(f, "({a},{a},{})", if *plus { '+' } else { '-' }),
            IrrLabel::Dihedral(d) => match d {
                DihedralIrr::Unit => write!(f, "unit"),
                DihedralIrr::Sign => write!(f, "sgn"),
                DihedralIrr::Eps1 => write!(f, "eps1"),
                DihedralIrr::Eps2 => write!(f, "eps2"),
                DihedralIrr::Phi(k) => write!(f, "phi{k}"),
            },
            IrrLabel::Table(s) => write!(f, "{s}"),
            IrrLabel::Product(v) => {
                if v.is_empty() {
                    return write!(f, "1");
                }
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join(" x "))
            }
        }
    }
}

/// Label of a conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassLabel {
    /// Cycle type in the symmetric group.
    Partition(Partition),
    /// Signed cycle type `(positive cycles, negative cycles)`.
    Signed(Partition, Partition),
    /// Signed cycle type in `D_n`; split classes carry `Some(true)` for the class of
    /// sign-free permutations and `Some(false)` for the other one.
    DSigned(Partition, Partition, Option<bool>),
    /// `(st)^j`.
    Rotation(u32),
    /// Reflections conjugate to `s` (0) or to `t` (1).
    Reflection(u8),
    Table(String),
    Product(Vec<ClassLabel>),
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Partition(p) => write!(f, "{p}"),
            ClassLabel::Signed(a, b) => write!(f, "({a},{b})"),
            ClassLabel::DSigned(a, b, s) => match s {
                None => write!(f, "({a},{b})"),
                Some(true) => write!(f, "({a},{b})+"),
                Some(false) => write!(f, "({a},{b})-"),
            },
            ClassLabel::Rotation(j) => write!(f, "r^{j}"),
            ClassLabel::Reflection(0) => write!(f, "s"),
            ClassLabel::Reflection(_) => write!(f, "t"),
            ClassLabel::Table(s) => write!(f, "{s}"),
            ClassLabel::Product(v) => {
                if v.is_empty() {
                    return write!(f, "1");
                }
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join(" x "))
            }
        }
    }
}
