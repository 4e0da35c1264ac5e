//! Kazhdan–Lusztig polynomials, cells and cell modules computed directly in a
//! realized group, independently of the truncated-induction machinery.

mod cells;
mod hecke;
mod polys;
pub mod suite;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::config;
use crate::coxeter::{realize_with_bound, CoxeterType};
use crate::error::{Error, Result};

pub use cells::CellData;
pub use hecke::{kl_basis_element, HeckeElement};
pub use polys::KlPolys;

type Memo = Mutex<HashMap<CoxeterType, Arc<CellData>>>;

fn memo() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(|| Mutex::new(HashMap::new()))
}

fn check_bound(t: &CoxeterType) -> Result<()> {
    let bound = config::oracle_bound();
    if t.order() > bound {
        return Err(Error::SizeLimit { order: t.order(), bound });
    }
    Ok(())
}

/// KL polynomials of `t`; respects the oracle bound.
pub fn kl_polys(t: &CoxeterType) -> Result<Arc<KlPolys>> {
    check_bound(t)?;
    let g = realize_with_bound(t, t.order().max(config::max_group_order()))?;
    Ok(Arc::new(KlPolys::compute_unbounded(g)))
}

/// Cell data of `t`, memoized; respects the oracle bound.
pub fn cell_data(t: &CoxeterType) -> Result<Arc<CellData>> {
    if let Some(c) = memo().lock().unwrap().get(t) {
        return Ok(c.clone());
    }
    let kl = kl_polys(t)?;
    let c = Arc::new(CellData::compute(kl)?);
    Ok(memo().lock().unwrap().entry(t.clone()).or_insert(c).clone())
}
