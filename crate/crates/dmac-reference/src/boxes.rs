use dmac_core::{CBox, DmacOracle, Point, Slice};

use crate::scan::{budget_from_env, check_budget, ReferenceError};

/// For each dimension `i`, the least `k ≥ 0` such that `f_i(x + k·e_i)`
/// falls short of `x_i + k`, or `None` if no such offset exists inside the
/// grid. A `Some(0)` means the map already moves down at `x` itself.
pub fn heights(f: &DmacOracle, x: &Point) -> Vec<Option<i64>> {
    let grid = f.grid();
    (0..grid.dim())
        .map(|i| {
            (0..=grid.upper_at(i) - x.get(i))
                .find(|&k| f.eval_dim(&x.bumped(i, k), i) < x.get(i) + k)
        })
        .collect()
}

/// All points of the slice whose image weakly dominates them in every
/// dimension, in lexicographic order.
pub fn up_set_in_slice(
    f: &DmacOracle,
    slice: &Slice,
    budget: Option<u64>,
) -> Result<Vec<Point>, ReferenceError> {
    let sub = slice.restrict_grid(f.grid());
    check_budget(sub.volume(), budget.unwrap_or_else(budget_from_env))?;
    Ok(sub
        .iter_points()
        .filter(|p| p.le(&f.eval(p)))
        .collect())
}

/// Enumerates every critical box of a two-free-dimension slice of a
/// three-dimensional instance (free dimensions 0 and 1, dimension 2 pinned).
///
/// A box is a corner `x` with extents `(w, h)` such that:
/// 1. `x` is in the slice's up-set;
/// 2. `f_0` still reaches `x_0 + w` at offset `w` along dimension 0 but falls
///    short one step further;
/// 3. the same for `f_1` along dimension 1 with extent `h`;
/// 4. `x` touches the lower boundary in dimension 0 or 1, or the pinned
///    dimension strictly descends at `x - e_0 - e_1`.
///
/// Every box's full rectangle is verified to lie inside the up-set; since
/// that is forced by monotonicity alone, a failure is reported as a promise
/// violation.
pub fn enumerate_critical_boxes(
    f: &DmacOracle,
    slice: &Slice,
    budget: Option<u64>,
) -> Result<Vec<CBox>, ReferenceError> {
    let grid = f.grid();
    assert_eq!(grid.dim(), 3, "critical boxes live in 3-dimensional instances");
    let free: Vec<usize> = slice.free_dims().collect();
    assert_eq!(free, [0, 1], "expected dimensions 0 and 1 free, 2 pinned");

    let sub = slice.restrict_grid(grid);
    check_budget(sub.volume(), budget.unwrap_or_else(budget_from_env))?;
    let (l0, u0) = (sub.lower_at(0), sub.upper_at(0));
    let (l1, u1) = (sub.lower_at(1), sub.upper_at(1));
    let n0 = (u0 - l0 + 1) as usize;
    let n1 = (u1 - l1 + 1) as usize;
    let pinned = sub.lower_at(2);

    let at = |i: usize, j: usize| {
        Point::with_scale(
            vec![l0 + i as i64, l1 + j as i64, pinned],
            grid.scale(),
        )
    };
    // step[k][i][j] = f_k(p) - p_k at the slice point (i, j).
    let mut step = vec![vec![vec![0i64; n1]; n0]; 3];
    let mut up = vec![vec![false; n1]; n0];
    for i in 0..n0 {
        for j in 0..n1 {
            let p = at(i, j);
            let v = f.eval(&p);
            for k in 0..3 {
                step[k][i][j] = v.get(k) - p.get(k);
            }
            up[i][j] = p.le(&v);
        }
    }
    // Prefix counts of up-points, for O(1) "is this rectangle all-up" checks.
    let mut pre = vec![vec![0i64; n1 + 1]; n0 + 1];
    for i in 0..n0 {
        for j in 0..n1 {
            pre[i + 1][j + 1] = pre[i][j + 1] + pre[i + 1][j] - pre[i][j] + i64::from(up[i][j]);
        }
    }
    let all_up = |i0: usize, j0: usize, i1: usize, j1: usize| {
        let count = pre[i1 + 1][j1 + 1] - pre[i0][j1 + 1] - pre[i1 + 1][j0] + pre[i0][j0];
        count == ((i1 - i0 + 1) * (j1 - j0 + 1)) as i64
    };

    let mut boxes = Vec::new();
    for i in 0..n0 {
        for j in 0..n1 {
            if !up[i][j] {
                continue;
            }
            let anchored = i == 0 || j == 0 || step[2][i - 1][j - 1] < 0;
            if !anchored {
                continue;
            }
            let widths: Vec<usize> = (0..n0 - i - 1)
                .filter(|&w| step[0][i + w][j] >= 0 && step[0][i + w + 1][j] < 0)
                .collect();
            let heights: Vec<usize> = (0..n1 - j - 1)
                .filter(|&h| step[1][i][j + h] >= 0 && step[1][i][j + h + 1] < 0)
                .collect();
            for &w in &widths {
                for &h in &heights {
                    if !all_up(i, j, i + w, j + h) {
                        f.promise_violated(&format!(
                            "critical box at {} with extents ({w}, {h}) leaves the up-set",
                            at(i, j)
                        ));
                    }
                    boxes.push(CBox::new(at(i, j), w as i64, h as i64));
                }
            }
        }
    }
    Ok(boxes)
}
