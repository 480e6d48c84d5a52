//! Per-thread resource caps.
//!
//! Powers and products of monomial ideals grow combinatorially. Every
//! expansion checks its intermediate size against [`max_terms`] and fails
//! with [`Error::ResourceLimit`] instead of exhausting memory. The cap is
//! thread-local, so a session lowering it does not affect other threads.

use std::cell::Cell;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_TERMS: usize = 1_000_000;

thread_local! {
    static MAX_TERMS: Cell<usize> = const { Cell::new(DEFAULT_MAX_TERMS) };
}

pub fn max_terms() -> usize {
    MAX_TERMS.with(Cell::get)
}

pub fn set_max_terms(limit: usize) {
    MAX_TERMS.with(|c| c.set(limit.max(1)));
}

pub(crate) fn check(what: &'static str, count: usize) -> Result<()> {
    let limit = max_terms();
    if count > limit {
        Err(Error::ResourceLimit { what, count, limit })
    } else {
        Ok(())
    }
}
