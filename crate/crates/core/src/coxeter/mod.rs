//! Coxeter types, parabolic subsets, weight functions and explicit realizations.

mod realize;
mod signed;
mod types;

pub use realize::{realize, realize_with_bound, RealizedGroup};
pub use signed::SignedPerm;
pub use types::{CoxeterType, Factor, ParabolicSubset, WeightFunction};
