use std::rc::Rc;

use dmac_core::{DmacOracle, Point, Solution};

use crate::{first_violation_among, ReductionResult};

/// Replaces each coordinate's move by its sign: `f'_i(x) = x_i + sgn(f_i(x) − x_i)`.
///
/// Fixed points are exactly preserved (every coordinate's move has sign zero
/// iff it is zero). A violation of the clamped map is witnessed by the same
/// pair against the original: signs reverse order only where the underlying
/// moves do, and signs spread only where the underlying values spread
/// further.
pub fn clamp_unit_displacement(f: &Rc<DmacOracle>) -> ReductionResult<Solution> {
    let base = Rc::clone(f);
    let oracle = DmacOracle::with_label(
        f.grid().clone(),
        move |x: &Point| {
            let v = base.eval(x);
            Point::with_scale(
                x.coords()
                    .iter()
                    .zip(v.coords())
                    .map(|(&c, &fc)| c + (fc - c).signum())
                    .collect(),
                x.scale(),
            )
        },
        true,
        "unit-clamped",
    );
    let base = Rc::clone(f);
    ReductionResult {
        oracle,
        map_back: Box::new(move |sol: &Solution| match sol {
            Solution::Fixed(p) => Solution::Fixed(p.clone()),
            Solution::MonoViolation(a, b) | Solution::NonExpViolation(a, b) => {
                first_violation_among(
                    &base,
                    [(a.clone(), b.clone())],
                    "clamped-map violation pair is clean on the original",
                )
            }
        }),
    }
}
