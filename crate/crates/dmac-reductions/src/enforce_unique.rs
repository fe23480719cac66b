use std::rc::Rc;

use dmac_core::{DmacOracle, Point};

use crate::interpolate::refined_direction;

/// A refined instance with a single fixed point, plus the way back: the
/// refined fixed point pins the base map's least fixed point inside a
/// constant-width window.
pub struct UniquenessReduction {
    pub oracle: Rc<DmacOracle>,
    pub map_back_lfp: Box<dyn Fn(&Point) -> Point>,
}

fn ceil_div(a: i64, b: i64) -> i64 {
    (a + b - 1).div_euclid(b)
}

/// Rebuilds the instance on a grid refined by `scale` so that it has exactly
/// one fixed point. Each axis moves by the sign of the distance to that
/// axis's interpolated crossing surface, probed at a point staggered upward
/// by the axis index (in refined units):
///
/// ```text
/// f_i(x) = x_i + sign(ŝ_i − (x_i + i))   probing at x + i·e_i
///        = x_i − 1                        if the staggered probe leaves the grid
/// ```
///
/// The staggers tilt otherwise-parallel surface plateaus against each other,
/// collapsing the crossing set to one refined point. Requires unit moves,
/// exactly one crossing per axis line, and a boundary that moves strictly
/// inward — the last keeps every estimate far enough from the walls that no
/// range clamping is ever needed.
///
/// The base's least fixed point `y` satisfies `x̂ ≤ scale·y ≤ x̂ + width`
/// componentwise, `width = scale + d − 1`, where `x̂` is the refined fixed
/// point; `map_back_lfp` scans that window, keeps the base-fixed candidates,
/// and returns the one below all others.
fn enforce_unique(f: &Rc<DmacOracle>, scale: i64) -> UniquenessReduction {
    let grid = f.grid().clone();
    assert!(f.unit_displacement(), "requires unit moves");
    assert!(
        (0..grid.dim()).all(|i| grid.extent(i) >= 1),
        "axes must have at least two points"
    );
    let refined = grid.refined(scale);
    let base = Rc::clone(f);
    let eval_grid = refined.clone();
    let oracle = DmacOracle::with_label(
        refined,
        move |x: &Point| {
            Point::with_scale(
                (0..x.dim())
                    .map(|i| {
                        let p = x.bumped(i, i as i64);
                        if p.get(i) > eval_grid.upper_at(i) {
                            x.get(i) - 1
                        } else {
                            x.get(i) + refined_direction(&base, i, &p, scale)
                        }
                    })
                    .collect(),
                x.scale(),
            )
        },
        true,
        "unique-fp",
    );

    let base = Rc::clone(f);
    let width = scale + grid.dim() as i64 - 1;
    UniquenessReduction {
        oracle,
        map_back_lfp: Box::new(move |xhat: &Point| {
            let g = base.grid();
            assert_eq!(xhat.scale(), scale * g.scale());
            let axes: Vec<Vec<i64>> = (0..g.dim())
                .map(|i| {
                    let lo = ceil_div(xhat.get(i), scale).max(g.lower_at(i));
                    let hi = (xhat.get(i) + width).div_euclid(scale).min(g.upper_at(i));
                    (lo..=hi).collect()
                })
                .collect();
            let mut candidates = vec![Vec::new()];
            for axis in &axes {
                candidates = candidates
                    .into_iter()
                    .flat_map(|head: Vec<i64>| {
                        axis.iter().map(move |&c| {
                            let mut next = head.clone();
                            next.push(c);
                            next
                        })
                    })
                    .collect();
            }
            let fixed: Vec<Point> = candidates
                .into_iter()
                .map(|c| Point::with_scale(c, g.scale()))
                .filter(|y| base.is_fixed(y))
                .collect();
            match fixed
                .iter()
                .find(|y| fixed.iter().all(|other| y.le(other)))
            {
                Some(least) => least.clone(),
                None => base.promise_violated(
                    "localization window holds no least fixed point",
                ),
            }
        }),
    }
}

/// Quarter-grid uniqueness reduction for three dimensions.
pub fn enforce_unique_fixed_point_3d(f: &Rc<DmacOracle>) -> UniquenessReduction {
    assert_eq!(f.grid().dim(), 3);
    enforce_unique(f, 4)
}

/// Half-grid uniqueness reduction for two dimensions.
pub fn enforce_unique_fixed_point_2d(f: &Rc<DmacOracle>) -> UniquenessReduction {
    assert_eq!(f.grid().dim(), 2);
    enforce_unique(f, 2)
}
