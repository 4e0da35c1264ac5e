//! Process-wide limits and paths, set once by the command line.

use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::RwLock;

pub const DEFAULT_MAX_GROUP_ORDER: u64 = 20_000;
pub const DEFAULT_ORACLE_BOUND: u64 = 1_200;
pub const DATA_DIR_ENV: &str = "CELLORDER_DATA_DIR";

static MAX_GROUP_ORDER: AtomicU64 = AtomicU64::new(DEFAULT_MAX_GROUP_ORDER);
static ORACLE_BOUND: AtomicU64 = AtomicU64::new(DEFAULT_ORACLE_BOUND);
static DATA_DIR: RwLock<Option<PathBuf>> = RwLock::new(None);

pub fn max_group_order() -> u64 {
    MAX_GROUP_ORDER.load(Ordering::Relaxed)
}

pub fn set_max_group_order(n: u64) {
    MAX_GROUP_ORDER.store(n, Ordering::Relaxed);
}

pub fn oracle_bound() -> u64 {
    ORACLE_BOUND.load(Ordering::Relaxed)
}

pub fn set_oracle_bound(n: u64) {
    ORACLE_BOUND.store(n, Ordering::Relaxed);
}

/// Directory overriding the bundled tables: the explicit setting, else the
/// environment variable.
pub fn data_dir() -> Option<PathBuf> {
    if let Some(p) = DATA_DIR.read().unwrap().clone() {
        return Some(p);
    }
    std::env::var_os(DATA_DIR_ENV).map(PathBuf::from)
}

pub fn set_data_dir(p: Option<PathBuf>) {
    *DATA_DIR.write().unwrap() = p;
}
