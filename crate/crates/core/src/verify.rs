//! The suites behind `cellorder verify`.

use crate::chartab::character_table;
use crate::config;
use crate::coxeter::{CoxeterType, Factor};
use crate::error::{Error, Result};
use crate::kl_oracle::suite::{compare_with_orders, oracle_suite};
use crate::orders::suite::invariant_suite;
use crate::report::VerificationReport;
use crate::springer_a::check_fthm_a;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Suites {
    pub kl_oracle: bool,
    /// `Some(true)` when asked for explicitly: then a type other than `A_n` is an
    /// error rather than a skip.
    pub springer: Option<bool>,
}

impl Suites {
    pub fn all() -> Self {
        Suites { kl_oracle: true, springer: Some(false) }
    }
}

/// The invariant suite of `t` followed by the selected optional suites. Errors are
/// reserved for bad input and unreadable data; failed checks live in the report.
pub fn verify(t: &CoxeterType, suites: Suites) -> Result<VerificationReport> {
    character_table(t)?;
    if suites.kl_oracle && t.order() > config::oracle_bound() {
        return Err(Error::SizeLimit { order: t.order(), bound: config::oracle_bound() });
    }
    let mut r = invariant_suite(t);
    if suites.kl_oracle {
        r.extend(oracle_suite(t));
        r.extend(compare_with_orders(t));
    }
    match (suites.springer, t.factors()) {
        (Some(_), [Factor::A(n)]) => r.extend(check_fthm_a(n + 1)?),
        (Some(true), _) => {
            return Err(Error::Unsupported(format!("Springer check for {t}: type A only")));
        }
        _ => {}
    }
    Ok(r)
}
