use std::collections::HashMap;

use dmac_core::{classify_pair, DmacOracle, Point, Solution};
use thiserror::Error;

/// Default cap on how many grid points a reference scan may touch.
pub const DEFAULT_POINT_BUDGET: u64 = 50_000;

/// Point budget for reference scans: the `DMAC_BUDGET` environment variable if
/// set to a valid integer, otherwise [`DEFAULT_POINT_BUDGET`].
pub fn budget_from_env() -> u64 {
    std::env::var("DMAC_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .unwrap_or(DEFAULT_POINT_BUDGET)
}

#[derive(Debug, Error)]
pub enum ReferenceError {
    #[error("grid has {points} points, exceeding the scan budget of {budget}")]
    BudgetExceeded { points: u128, budget: u64 },
    #[error("iteration from the grid bottom stalled at non-fixed {at}; the map is not monotone")]
    AscentStalled { at: Point },
    #[error("iteration from the grid bottom failed to settle within {steps} steps")]
    AscentDiverged { steps: u64 },
    #[error("no fixed coordinate on the axis-{axis} line through {line}")]
    NoSurfacePoint { axis: usize, line: Point },
    #[error("axis-{axis} line through {line} is fixed at {low} and {high}; surface is ambiguous")]
    AmbiguousSurface {
        axis: usize,
        line: Point,
        low: i64,
        high: i64,
    },
}

/// Every oracle value over the full grid, plus the facts the reference
/// routines share: the fixed points in lexicographic order, the first
/// violation in a canonical scan order, and the largest per-coordinate
/// displacement seen anywhere.
pub(crate) struct ValueTable {
    values: HashMap<Vec<i64>, Vec<i64>>,
    pub fixed: Vec<Point>,
    pub first_violation: Option<Solution>,
    pub max_step: i64,
    pub points: u64,
}

impl ValueTable {
    pub fn value_dim(&self, coords: &[i64], i: usize) -> i64 {
        self.values[coords][i]
    }
}

pub(crate) fn check_budget(points: u128, budget: u64) -> Result<(), ReferenceError> {
    if points > u128::from(budget) {
        return Err(ReferenceError::BudgetExceeded { points, budget });
    }
    Ok(())
}

/// Evaluates the map at every grid point. The violation scan only compares
/// points at ℓ∞ distance one: a monotonicity failure between far-apart points
/// forces one between some pair at distance one on a connecting chain, and
/// likewise for non-expansion, so the local scan misses nothing. The scan
/// order (points lexicographic, then offsets lexicographic) makes "first
/// violation" deterministic.
pub(crate) fn scan_all(f: &DmacOracle, budget: u64) -> Result<ValueTable, ReferenceError> {
    let grid = f.grid();
    check_budget(grid.volume(), budget)?;

    let mut values = HashMap::new();
    let mut fixed = Vec::new();
    let mut max_step = 0i64;
    let mut points = 0u64;
    for p in grid.iter_points() {
        let v = f.eval(&p);
        points += 1;
        let step = p
            .coords()
            .iter()
            .zip(v.coords())
            .map(|(a, b)| (b - a).abs())
            .max()
            .unwrap_or(0);
        max_step = max_step.max(step);
        if v == p {
            fixed.push(p.clone());
        }
        values.insert(p.into_coords(), v.into_coords());
    }

    let mut first_violation = None;
    'outer: for p in grid.iter_points() {
        for delta in neighbor_offsets(grid.dim()) {
            let q_coords: Vec<i64> = p
                .coords()
                .iter()
                .zip(&delta)
                .map(|(a, d)| a + d)
                .collect();
            let q = Point::with_scale(q_coords, grid.scale());
            if !grid.contains(&q) {
                continue;
            }
            if let Some(sol) = classify_pair(f, &p, &q) {
                first_violation = Some(sol);
                break 'outer;
            }
        }
    }

    Ok(ValueTable {
        values,
        fixed,
        first_violation,
        max_step,
        points,
    })
}

/// All nonzero offsets in {-1,0,1}^d, lexicographically ordered.
pub(crate) fn neighbor_offsets(dim: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![-1i64; dim];
    loop {
        if cur.iter().any(|&c| c != 0) {
            out.push(cur.clone());
        }
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < 1 {
                cur[i] += 1;
                for c in cur.iter_mut().skip(i + 1) {
                    *c = -1;
                }
                break;
            }
        }
    }
}
