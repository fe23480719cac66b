use std::rc::Rc;

use dmac_core::{DmacOracle, Point, Solution};

use crate::{first_violation_among, ReductionResult};

/// Pads the grid by one layer on every side of every axis; padded points
/// borrow the full value vector of their nearest original point, so they can
/// never be fixed (the original map never leaves the original grid, but a
/// padded coordinate lies outside it). The fixed-point set is therefore
/// unchanged, and every fixed point now sits strictly inside the new bounds.
///
/// Monotonicity and non-expansion survive because clamping to the inner box
/// is monotone and non-expansive — and for the same reason a violation of the
/// padded map, clamped back to the inner grid, witnesses against the original
/// (a pair with equal clamps has identical images and cannot violate).
///
/// Padded points can move by two in ℓ∞ even when the original map moves by
/// one, so callers who need unit displacement re-clamp afterwards; the sign
/// of each boundary move survives that, keeping the boundary strictly inward.
pub fn force_boundary_inward(f: &Rc<DmacOracle>) -> ReductionResult<Solution> {
    let inner = f.grid().clone();
    let mut padded = inner.clone();
    for i in 0..inner.dim() {
        padded = padded.with_axis_bounds(i, inner.lower_at(i) - 1, inner.upper_at(i) + 1);
    }
    let base = Rc::clone(f);
    let clamp_grid = inner.clone();
    let oracle = DmacOracle::with_label(
        padded,
        move |x: &Point| base.eval(&clamp_grid.clamp(x)),
        false,
        "boundary-inward",
    );
    let base = Rc::clone(f);
    ReductionResult {
        oracle,
        map_back: Box::new(move |sol: &Solution| match sol {
            Solution::Fixed(p) => {
                assert!(base.grid().contains(p), "padded points are never fixed");
                Solution::Fixed(p.clone())
            }
            Solution::MonoViolation(a, b) | Solution::NonExpViolation(a, b) => {
                first_violation_among(
                    &base,
                    [(base.grid().clamp(a), base.grid().clamp(b))],
                    "padded-map violation pair is clean after clamping",
                )
            }
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clamp_unit_displacement;
    use dmac_core::{classify_pair, Grid};
    use dmac_instances::gen_surface_instance;
    use dmac_reference::brute_force_solve;

    #[test]
    fn padding_preserves_fixed_set_and_empties_the_boundary() {
        let inst = gen_surface_instance(2, 6, 3);
        let f = inst.oracle();
        let red = force_boundary_inward(&f);
        assert_eq!(red.oracle.grid().lower(), &[-1, -1]);
        assert_eq!(red.oracle.grid().upper(), &[7, 7]);

        let wrapped = brute_force_solve(&red.oracle, None).unwrap();
        assert!(wrapped.first_violation.is_none());
        let base = brute_force_solve(&f, None).unwrap();
        assert_eq!(wrapped.fixed_points, base.fixed_points);
        for p in &wrapped.fixed_points {
            assert!((0..2).all(|i| {
                p.get(i) > red.oracle.grid().lower_at(i) && p.get(i) < red.oracle.grid().upper_at(i)
            }));
        }
    }

    #[test]
    fn reclamping_restores_unit_moves_and_keeps_the_boundary_inward() {
        let inst = gen_surface_instance(2, 6, 9);
        let red = force_boundary_inward(&inst.oracle()).then(clamp_unit_displacement);
        let grid = red.oracle.grid().clone();
        let report = brute_force_solve(&red.oracle, None).unwrap();
        assert!(report.first_violation.is_none());
        assert_eq!(report.min_fixed().unwrap(), *inst.lfp());
        for p in grid.iter_points() {
            let v = red.oracle.eval(&p);
            for i in 0..2 {
                assert!((v.get(i) - p.get(i)).abs() <= 1);
                if p.get(i) == grid.lower_at(i) {
                    assert!(v.get(i) > p.get(i), "lower boundary must move up at {p:?}");
                }
                if p.get(i) == grid.upper_at(i) {
                    assert!(v.get(i) < p.get(i), "upper boundary must move down at {p:?}");
                }
            }
        }
    }

    #[test]
    fn violations_in_the_padding_map_back_through_the_clamp() {
        // Base expands between 0 and 1; the padded pair (−1, 1) sees the same
        // images at distance 2, still an expansion, and maps back to (0, 1).
        let f = DmacOracle::new(Grid::uniform(1, 0, 4), |x: &Point| {
            let v = match x.get(0) {
                0 => 0,
                1 => 3,
                c => c.min(4),
            };
            Point::new(vec![v])
        });
        let red = force_boundary_inward(&f);
        let a = Point::new(vec![-1]);
        let b = Point::new(vec![1]);
        let sol = classify_pair(&red.oracle, &a, &b).expect("padded pair must violate");
        assert_eq!(sol, Solution::NonExpViolation(a, b));
        let back = (red.map_back)(&sol);
        assert_eq!(
            back,
            Solution::NonExpViolation(Point::new(vec![0]), Point::new(vec![1]))
        );
    }
}
