//! Kazhdan–Lusztig families and the order on two-sided cells of finite Coxeter
//! groups, computed by truncated induction, with an independent cell oracle.

pub mod combinat;
pub mod config;
pub mod chartab;
pub mod coxeter;
pub mod error;
pub mod invariants;
pub mod kl_oracle;
pub mod orders;
pub mod report;
pub mod scalars;
pub mod springer_a;
pub mod verify;

pub use error::{Error, Result};
