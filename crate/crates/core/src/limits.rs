//! Desk-scale caps.
//!
//! Every search in the crate is exponential in something. The caps below stop
//! a mistyped order or arity from running for hours. They are process-wide and
//! can be raised with [`set_scale`] (the CLI wires this to `MAGMA_FORGE_CAP`).

use std::sync::atomic::{AtomicU64, Ordering};

use crate::{Error, Result};

/// Default upper bound on `m^n`, the number of entries in an operation table.
pub const DEFAULT_TABLE_CAP: u64 = 10_000_000;
/// Default upper bound on the order of a group whose subgroups are enumerated.
pub const DEFAULT_SUBGROUP_CAP: u64 = 60;
/// Default upper bound on the number of leaves a brute-force enumeration may visit.
pub const DEFAULT_SEARCH_CAP: u64 = 50_000_000;

static TABLE_CAP: AtomicU64 = AtomicU64::new(DEFAULT_TABLE_CAP);
static SUBGROUP_CAP: AtomicU64 = AtomicU64::new(DEFAULT_SUBGROUP_CAP);
static SEARCH_CAP: AtomicU64 = AtomicU64::new(DEFAULT_SEARCH_CAP);

pub fn table_cap() -> u64 {
    TABLE_CAP.load(Ordering::Relaxed)
}

pub fn subgroup_cap() -> u64 {
    SUBGROUP_CAP.load(Ordering::Relaxed)
}

pub fn search_cap() -> u64 {
    SEARCH_CAP.load(Ordering::Relaxed)
}

pub fn set_table_cap(cap: u64) {
    TABLE_CAP.store(cap, Ordering::Relaxed);
}

pub fn set_subgroup_cap(cap: u64) {
    SUBGROUP_CAP.store(cap, Ordering::Relaxed);
}

pub fn set_search_cap(cap: u64) {
    SEARCH_CAP.store(cap, Ordering::Relaxed);
}

/// Multiply every cap by `factor` relative to its default.
pub fn set_scale(factor: u64) {
    let factor = factor.max(1);
    set_table_cap(DEFAULT_TABLE_CAP.saturating_mul(factor));
    set_subgroup_cap(DEFAULT_SUBGROUP_CAP.saturating_mul(factor));
    set_search_cap(DEFAULT_SEARCH_CAP.saturating_mul(factor));
}

/// `m^n` if it does not exceed the table cap.
pub fn checked_table_len(m: usize, n: usize) -> Result<usize> {
    let cap = table_cap() as u128;
    let mut len: u128 = 1;
    for _ in 0..n {
        len = len.saturating_mul(m as u128);
        if len > cap {
            return Err(Error::CapExceeded { what: "operation table m^n", size: len, cap });
        }
    }
    Ok(len as usize)
}

pub(crate) fn check(what: &'static str, size: u128, cap: u64) -> Result<()> {
    if size > cap as u128 {
        Err(Error::CapExceeded { what, size, cap: cap as u128 })
    } else {
        Ok(())
    }
}
