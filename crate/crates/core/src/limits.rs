//! Size caps for the expensive constructions.

use crate::error::{Error, Result};

/// Environment variable holding the cell cap.
pub const CELL_CAP_VAR: &str = "COXETER_DAVIS_MAX_CELLS";

/// Default number of cells (simplices or cosets) a single construction may
/// materialise.
pub const DEFAULT_CELL_CAP: u64 = 2_000_000;

pub fn cell_cap() -> u64 {
    std::env::var(CELL_CAP_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CELL_CAP)
}

pub fn check_cells(what: &'static str, size: u64) -> Result<()> {
    let cap = cell_cap();
    if size > cap {
        return Err(Error::TooLarge {
            what,
            size,
            cap,
            var: CELL_CAP_VAR,
        });
    }
    Ok(())
}
