use std::rc::Rc;

use dmac_core::{DmacOracle, Point, Solution};

use crate::{first_violation_among, ReductionResult};

/// One layer of the line-uniqueness wrapper, acting on dimension `i`:
///
/// ```text
/// f'_i(x) = x_i − 1   if f_i(x) = x_i, x_i > lower_i, and f_i(x − e_i) = x_i − 1
///         = f_i(x)    otherwise
/// ```
///
/// Along every direction-`i` line of a violation-free instance the points with
/// `f_i(x) = x_i` form one contiguous run; the override erases every run point
/// except its bottom, so afterwards each line holds exactly one such point.
/// Fully fixed points of the wrapped map are fixed for the base map (the
/// override never produces a fixed coordinate), and the least fixed point is
/// untouched: were the override to fire there, the point below it would map
/// downward everywhere, and iterating from it would reach a fixed point
/// strictly under the least one.
///
/// Costs at most two base queries per query.
fn layer(f: &Rc<DmacOracle>, i: usize) -> ReductionResult<Solution> {
    let base = Rc::clone(f);
    let lower = f.grid().lower_at(i);
    let oracle = DmacOracle::with_label(
        f.grid().clone(),
        move |x: &Point| {
            let mut v = base.eval(x);
            if v.get(i) == x.get(i) && x.get(i) > lower {
                let below = x.bumped(i, -1);
                if base.eval_dim(&below, i) == below.get(i) {
                    v.set(i, x.get(i) - 1);
                }
            }
            v
        },
        f.unit_displacement(),
        "line-unique",
    );
    let base = Rc::clone(f);
    ReductionResult {
        oracle,
        map_back: Box::new(move |sol: &Solution| match sol {
            Solution::Fixed(p) => {
                debug_assert!(base.is_fixed(p));
                Solution::Fixed(p.clone())
            }
            Solution::MonoViolation(a, b) | Solution::NonExpViolation(a, b) => {
                first_violation_among(
                    &base,
                    [
                        (a.clone(), b.clone()),
                        (a.bumped(i, -1), b.clone()),
                        (a.clone(), b.bumped(i, -1)),
                        (a.bumped(i, -1), b.bumped(i, -1)),
                    ],
                    "line-uniqueness violation has no base witness nearby",
                )
            }
        }),
    }
}

/// Applies the line-uniqueness layer once per dimension, in order. Later
/// layers modify only their own dimension's values, so each earlier layer's
/// guarantee survives: in the result, every axis line in every direction has
/// exactly one point whose coordinate in the line direction is fixed
/// (promise-kept instances only).
pub fn make_1d_unique(f: &Rc<DmacOracle>) -> ReductionResult<Solution> {
    let d = f.grid().dim();
    let mut result = layer(f, 0);
    for i in 1..d {
        result = result.then(|g| layer(g, i));
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use dmac_core::{classify_pair, Grid};
    use dmac_instances::gen_surface_instance;
    use dmac_reference::brute_force_solve;

    #[test]
    fn collapses_runs_to_their_bottoms_and_keeps_the_least_fixed_point() {
        for seed in [0, 1, 2, 7] {
            let inst = gen_surface_instance(2, 8, seed);
            let f = inst.oracle();
            let red = make_1d_unique(&f);
            let report = brute_force_solve(&red.oracle, None).unwrap();
            assert!(
                report.first_violation.is_none(),
                "wrapper must keep a clean instance clean (seed {seed})"
            );
            assert_eq!(report.min_fixed().unwrap(), *inst.lfp(), "seed {seed}");

            let grid = red.oracle.grid();
            for dim in 0..2 {
                let other = 1 - dim;
                for k in grid.lower_at(other)..=grid.upper_at(other) {
                    let fixed_on_line = (grid.lower_at(dim)..=grid.upper_at(dim))
                        .filter(|&t| {
                            let mut coords = vec![0; 2];
                            coords[dim] = t;
                            coords[other] = k;
                            let p = Point::new(coords);
                            red.oracle.eval_dim(&p, dim) == t
                        })
                        .count();
                    assert_eq!(fixed_on_line, 1, "dim {dim}, line {k}, seed {seed}");
                }
            }
        }
    }

    #[test]
    fn wrapped_fixed_points_are_base_fixed_points() {
        let inst = gen_surface_instance(3, 6, 11);
        let f = inst.oracle();
        let red = make_1d_unique(&f);
        let report = brute_force_solve(&red.oracle, None).unwrap();
        for p in &report.fixed_points {
            assert!(f.is_fixed(p));
            let back = (red.map_back)(&Solution::Fixed(p.clone()));
            assert_eq!(back, Solution::Fixed(p.clone()));
        }
    }

    #[test]
    fn violation_map_back_shifts_to_a_base_witness() {
        // f(1) jumps to 3 while 2..4 sit on a fixed run; the wrapper rewrites
        // f(3) downward, creating a monotonicity break on (1, 3) that the base
        // map does not share — the base witness is the shifted pair (1, 2).
        let f = DmacOracle::new(Grid::uniform(1, 0, 4), |x: &Point| {
            let v = match x.get(0) {
                0 => 0,
                1 => 3,
                c => c,
            };
            Point::new(vec![v])
        });
        let red = make_1d_unique(&f);
        let a = Point::new(vec![1]);
        let b = Point::new(vec![3]);
        let sol = classify_pair(&red.oracle, &a, &b).expect("wrapped pair must violate");
        assert_eq!(sol, Solution::MonoViolation(a.clone(), b));
        assert!(classify_pair(&f, &a, &Point::new(vec![3])).is_none());

        let back = (red.map_back)(&sol);
        let expect = Solution::MonoViolation(a.clone(), Point::new(vec![2]));
        assert_eq!(back, expect);
        assert_eq!(classify_pair(&f, &a, &Point::new(vec![2])), Some(expect));
    }
}
