use std::rc::Rc;

use dmac_core::{DmacOracle, Point, Solution};

use crate::{first_violation_among, ReductionResult};

/// Extends a two-dimensional unit-move instance vertically by the horizontal
/// extent on both ends of axis 1. Slab points move one step back toward the
/// original rows, and their horizontal move copies the original map along the
/// diagonal: a point `δ` below the grid reads the horizontal step at
/// `z = x + δ·(1,1)` (clamped toward the grid edge when `z` falls outside).
///
/// ```text
/// below:  f'_2(x) = x_2 + 1,   z = x + δ·(1,1), δ = l_2 − x_2
///         f'_1(x) = max(x_1 + h_1(z), l_1)   if z_1 ≤ u_1
///                 = max(x_1 − 1, l_1)        otherwise
/// above:  mirrored (min-clamps, z = x − δ·(1,1), stray points move right)
/// ```
///
/// No slab point is ever fixed, so the fixed-point set is unchanged; clean
/// instances stay clean, and the clamps make the extended bottom-left corner
/// weakly up-moving and the extended top-right corner weakly down-moving —
/// the bracket a column bisection starts from. Because the depth equals the
/// horizontal extent, any diagonal translate of a vertical interval by a
/// legal column jump stays on the extended grid.
pub fn vertical_extension_2d(f: &Rc<DmacOracle>) -> ReductionResult<Solution> {
    let inner = f.grid().clone();
    assert_eq!(inner.dim(), 2, "vertical extension is two-dimensional");
    assert!(f.unit_displacement(), "requires unit moves");
    let depth = inner.extent(0);
    let grid = inner.with_axis_bounds(1, inner.lower_at(1) - depth, inner.upper_at(1) + depth);

    let base = Rc::clone(f);
    let g = inner.clone();
    let oracle = DmacOracle::with_label(
        grid,
        move |x: &Point| {
            let (l1, u1) = (g.lower_at(0), g.upper_at(0));
            let (l2, u2) = (g.lower_at(1), g.upper_at(1));
            if x.get(1) < l2 {
                let delta = l2 - x.get(1);
                let z = x.shifted_all(delta);
                let h1 = if z.get(0) <= u1 { base.step(&z, 0) } else { -1 };
                Point::new(vec![(x.get(0) + h1).max(l1), x.get(1) + 1])
            } else if x.get(1) > u2 {
                let delta = x.get(1) - u2;
                let z = x.shifted_all(-delta);
                let h1 = if z.get(0) >= l1 { base.step(&z, 0) } else { 1 };
                Point::new(vec![(x.get(0) + h1).min(u1), x.get(1) - 1])
            } else {
                base.eval(x)
            }
        },
        true,
        "vertical-extension",
    );

    let base = Rc::clone(f);
    ReductionResult {
        oracle,
        map_back: Box::new(move |sol: &Solution| match sol {
            Solution::Fixed(p) => {
                assert!(base.grid().contains(p), "slab points are never fixed");
                Solution::Fixed(p.clone())
            }
            Solution::MonoViolation(a, b) | Solution::NonExpViolation(a, b) => {
                let g = base.grid();
                let sigma = |p: &Point| {
                    (g.lower_at(1) - p.get(1)).max(0) + (g.upper_at(1) - p.get(1)).min(0)
                };
                let la = g.clamp(&a.shifted_all(sigma(a)));
                let lb = g.clamp(&b.shifted_all(sigma(b)));
                let dd = sigma(a) - sigma(b);
                let m1 = g.clamp(&lb.shifted_all(dd));
                let m2 = g.clamp(&la.shifted_all(-dd));
                first_violation_among(
                    &base,
                    [
                        (la.clone(), lb.clone()),
                        (la.clone(), m1.clone()),
                        (m1, lb.clone()),
                        (m2.clone(), lb),
                        (la, m2),
                    ],
                    "slab violation has no witness along its diagonal",
                )
            }
        }),
    }
}
