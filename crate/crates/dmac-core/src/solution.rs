use crate::grid::Grid;
use crate::oracle::{flip_point, DmacOracle};
use crate::point::{inf_norm, Point};

/// A solution to a DMAC instance: a fixed point, or a witness pair against
/// one of the two promises.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Solution {
    Fixed(Point),
    /// `x ≤ y` componentwise but `f(x) ≰ f(y)`.
    MonoViolation(Point, Point),
    /// `‖f(x) − f(y)‖∞ > ‖x − y‖∞`.
    NonExpViolation(Point, Point),
}

impl Solution {
    pub fn is_violation(&self) -> bool {
        !matches!(self, Solution::Fixed(_))
    }
}

/// Carries a solution through the coordinate flip: a solution of `flipped(f)`
/// becomes one of `f` and vice versa. The flip reverses the componentwise
/// order, so a monotonicity witness swaps its endpoints; ℓ∞ distances are
/// untouched.
pub fn flip_solution(grid: &Grid, sol: &Solution) -> Solution {
    match sol {
        Solution::Fixed(p) => Solution::Fixed(flip_point(grid, p)),
        Solution::MonoViolation(a, b) => {
            Solution::MonoViolation(flip_point(grid, b), flip_point(grid, a))
        }
        Solution::NonExpViolation(a, b) => {
            Solution::NonExpViolation(flip_point(grid, a), flip_point(grid, b))
        }
    }
}

/// Check a pair of points for a violation, in ≤ 2 evaluations: first the
/// monotonicity of each comparable order, then non-expansion. Returns `None`
/// when the pair witnesses nothing.
pub fn classify_pair(f: &DmacOracle, x: &Point, y: &Point) -> Option<Solution> {
    let fx = f.eval(x);
    let fy = f.eval(y);
    if x.le(y) && !fx.le(&fy) {
        return Some(Solution::MonoViolation(x.clone(), y.clone()));
    }
    if y.le(x) && !fy.le(&fx) {
        return Some(Solution::MonoViolation(y.clone(), x.clone()));
    }
    if inf_norm(&fx, &fy) > inf_norm(x, y) {
        return Some(Solution::NonExpViolation(x.clone(), y.clone()));
    }
    None
}
