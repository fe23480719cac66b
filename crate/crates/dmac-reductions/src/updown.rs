use std::rc::Rc;

use dmac_core::{flip_point, flip_solution, flipped, DmacOracle, Grid, Point, Solution};

use crate::{first_violation_among, ReductionResult};

/// One downward extension pass for a three-dimensional unit-move instance.
/// The vertical axis is 2; `diag` names the horizontal axis whose move is
/// read along the diagonal, and the other horizontal axis copies its move
/// from the projection onto the old bottom slice:
///
/// ```text
/// for x_3 < l_3, with δ = l_3 − x_3
/// and z = (x_diag + δ, min(x_copy + δ, u_copy), l_3):
///   f'_3(x)    = x_3 + 1
///   f'_copy(x) = f_copy(x_1, x_2, l_3)
///   f'_diag(x) = max(x_diag + h_diag(z), l_diag)   if z_diag ≤ u_diag
///              = max(x_diag − 1, l_diag)           otherwise
/// ```
///
/// Reading the diagonal move at `z` slides the copied crossing heights down
/// along the full diagonal as the slab deepens. Advancing the copy coordinate
/// of `z` together with the depth (clamped at its wall) is what keeps the
/// heights 1-Lipschitz in every grid direction at once: a unit step that
/// descends one slice while stepping the copy axis down tracks the same `z`,
/// so adjacent heights never spread by two.
///
/// The pass deepens the grid by more than the `diag` extent, so on the new
/// bottom slice the diagonal always overshoots: there the `diag` coordinate
/// strictly decreases except at its lower wall. Slab points rise, so no new
/// fixed points appear and the least fixed point survives.
fn bottom_pass(f: &Rc<DmacOracle>, diag: usize) -> ReductionResult<Solution> {
    let inner = f.grid().clone();
    assert_eq!(inner.dim(), 3, "pass is three-dimensional");
    assert!(f.unit_displacement(), "requires unit moves");
    assert!(diag < 2);
    let copy = 1 - diag;
    let height = inner.extent(diag) + 1;
    let grid = inner.with_axis_bounds(2, inner.lower_at(2) - height, inner.upper_at(2));

    let base = Rc::clone(f);
    let g = inner.clone();
    let oracle = DmacOracle::with_label(
        grid,
        move |x: &Point| {
            if x.get(2) >= g.lower_at(2) {
                return base.eval(x);
            }
            let delta = g.lower_at(2) - x.get(2);
            let mut z = x.clone();
            z.set(diag, x.get(diag) + delta);
            z.set(copy, (x.get(copy) + delta).min(g.upper_at(copy)));
            z.set(2, g.lower_at(2));
            let h = if z.get(diag) <= g.upper_at(diag) {
                base.step(&z, diag)
            } else {
                -1
            };
            let mut v = x.clone();
            v.set(2, x.get(2) + 1);
            v.set(diag, (x.get(diag) + h).max(g.lower_at(diag)));
            v.set(copy, base.eval_dim(&x.with_coord(2, g.lower_at(2)), copy));
            v
        },
        true,
        "updown-pass",
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
                // A slab point's wrapped moves come from two base points: its
                // diagonal read target and its projection onto the bottom
                // slice. (Both degenerate to the point itself when it already
                // lies in the base grid.) Probe every pair those four span.
                let g = base.grid();
                let read = |p: &Point| {
                    let d = (g.lower_at(2) - p.get(2)).max(0);
                    let mut z = p.clone();
                    z.set(diag, (p.get(diag) + d).min(g.upper_at(diag)));
                    z.set(copy, (p.get(copy) + d).min(g.upper_at(copy)));
                    z.set(2, p.get(2).max(g.lower_at(2)));
                    z
                };
                let proj = |p: &Point| g.clamp(&p.with_coord(2, p.get(2).max(g.lower_at(2))));
                let (za, zb) = (read(a), read(b));
                let (pa, pb) = (proj(a), proj(b));
                first_violation_among(
                    &base,
                    [
                        (za.clone(), zb.clone()),
                        (pa.clone(), pb.clone()),
                        (pa.clone(), zb.clone()),
                        (za.clone(), pb.clone()),
                        (pa, za),
                        (pb, zb),
                    ],
                    "extension violation has no witness along its diagonal",
                )
            }
        }),
    }
}

/// Conjugates a reduction by the coordinate flip, so a bottom construction
/// acts on the top. Both conjugating flips reflect about the midpoints of the
/// grid the reduction started from; that way the shared region keeps its
/// coordinates while the reduction's new slab lands on the opposite side.
fn under_flip(
    reduction: impl Fn(&Rc<DmacOracle>) -> ReductionResult<Solution>,
) -> impl FnOnce(&Rc<DmacOracle>) -> ReductionResult<Solution> {
    move |f: &Rc<DmacOracle>| {
        let frame = f.grid().clone();
        let g = flipped(f);
        let red = reduction(&g);
        let red_grid = red.oracle.grid().clone();
        let (lower, upper): (Vec<i64>, Vec<i64>) = (0..frame.dim())
            .map(|i| {
                let c = frame.lower_at(i) + frame.upper_at(i);
                (c - red_grid.upper_at(i), c - red_grid.lower_at(i))
            })
            .unzip();
        let final_grid = Grid::with_scale(lower, upper, frame.scale());
        let unit = red.oracle.unit_displacement();
        let mid = Rc::clone(&red.oracle);
        let eval_frame = frame.clone();
        let oracle = DmacOracle::with_label(
            final_grid,
            move |x: &Point| flip_point(&eval_frame, &mid.eval(&flip_point(&eval_frame, x))),
            unit,
            "updown-flip",
        );
        let inner_back = red.map_back;
        ReductionResult {
            oracle,
            map_back: Box::new(move |sol: &Solution| {
                let mid_sol = (inner_back)(&flip_solution(&frame, sol));
                flip_solution(&frame, &mid_sol)
            }),
        }
    }
}

/// Four extension passes — both horizontal diagonals below, then both above
/// via the flip — after which the bottom slice's up-set and the top slice's
/// down-set each shrink to their corner. The vertical extent grows by a
/// constant factor; every query costs a bounded number of base queries.
pub fn up_down_boundary_preprocess_3d(f: &Rc<DmacOracle>) -> ReductionResult<Solution> {
    bottom_pass(f, 0)
        .then(|g| bottom_pass(g, 1))
        .then(under_flip(|g| bottom_pass(g, 0)))
        .then(under_flip(|g| bottom_pass(g, 1)))
}
