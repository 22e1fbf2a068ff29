//! Grid sweeps spread over a rayon pool. Results are identical to the
//! sequential versions in `seqgon_core::verify`.

use std::time::Instant;

use rayon::prelude::*;
use seqgon_core::sequences::SequenceFamily;
use seqgon_core::verify::{check_kind, ensure_check, evaluate_row, Check, Grid, VerificationReport};
use seqgon_core::Result;

pub fn verify_with(family: &SequenceFamily, check: Check, grid: &Grid) -> Result<VerificationReport> {
    let start = Instant::now();
    ensure_check(family, check)?;
    let rows = grid
        .rows()
        .into_par_iter()
        .map(|(n, k)| evaluate_row(family, check, n, k, &grid.m))
        .collect::<Result<Vec<_>>>()?;
    let cells = rows.into_iter().flatten().collect();
    Ok(VerificationReport::assemble(
        family.clone(),
        check,
        grid.clone(),
        cells,
        start.elapsed(),
    ))
}

/// Parallel counterpart of `seqgon_core::verify::verify`.
pub fn verify(family: &SequenceFamily, grid: &Grid) -> Result<VerificationReport> {
    verify_with(family, check_kind(family)?, grid)
}
