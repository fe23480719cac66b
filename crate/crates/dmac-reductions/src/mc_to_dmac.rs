use std::rc::Rc;

use dmac_core::{DmacOracle, Grid, Point, Solution};
use num::{BigInt, BigRational, ToPrimitive};

use crate::{ContinuousOracle, McSolution, ReductionResult};

/// Discretizes a monotone λ-contraction on `[0, 1]^d` into a grid instance
/// on `{0..n}^d`, `n = ⌈1/ε⌉`. A grid point `y` stands for `x = y/n`, and
/// each coordinate steps by the sign of the drift `g_i(x) − x_i`, dead-banded
/// at `ε̂ = 1/n`:
/// up if the drift is at least `ε̂`, down if at most `−ε̂`, fixed otherwise.
///
/// A fixed grid point therefore has all drifts below `ε̂ ≤ ε` and maps to an
/// ε-approximate fixed point, and violation pairs of the grid map scale back
/// to witnesses against `g` itself: a grid monotonicity break forces a drift
/// reversal that breaks `g`'s monotonicity at the scaled points, and a grid
/// expansion forces scaled points whose images spread by more than λ times
/// their distance.
pub fn mc_to_dmac(g: &Rc<ContinuousOracle>) -> ReductionResult<McSolution> {
    let n_rat = (BigRational::from_integer(1.into()) / g.epsilon()).ceil();
    let n = n_rat
        .to_integer()
        .to_i64()
        .expect("grid resolution must fit in i64");
    let d = g.dim();
    let eps_hat = BigRational::new(BigInt::from(1), BigInt::from(n));

    let grid = Grid::with_scale(vec![0; d], vec![n; d], n);
    let g_for_oracle = Rc::clone(g);
    let eps_for_oracle = eps_hat.clone();
    let oracle = DmacOracle::with_label(
        grid,
        move |y: &Point| {
            let x = to_unit_cube(y);
            let gx = g_for_oracle.eval(&x);
            Point::with_scale(
                (0..y.dim())
                    .map(|i| {
                        let drift = &gx[i] - &x[i];
                        if drift >= eps_for_oracle {
                            y.get(i) + 1
                        } else if drift <= -(&eps_for_oracle) {
                            y.get(i) - 1
                        } else {
                            y.get(i)
                        }
                    })
                    .collect(),
                y.scale(),
            )
        },
        true,
        "discretized",
    );

    ReductionResult {
        oracle,
        map_back: Box::new(|sol: &Solution| match sol {
            Solution::Fixed(y) => McSolution::ApproxFixed(to_unit_cube(y)),
            Solution::MonoViolation(y, z) => {
                McSolution::MonoViolation(to_unit_cube(y), to_unit_cube(z))
            }
            Solution::NonExpViolation(y, z) => {
                McSolution::ContractionViolation(to_unit_cube(y), to_unit_cube(z))
            }
        }),
    }
}

fn to_unit_cube(y: &Point) -> Vec<BigRational> {
    let scale = BigInt::from(y.scale());
    y.coords()
        .iter()
        .map(|&c| BigRational::new(BigInt::from(c), scale.clone()))
        .collect()
}
