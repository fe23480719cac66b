use dmac_core::{DmacOracle, Point};

/// Estimated crossing height of axis `dim` near the refined point `p`, in
/// refined units (`p` has scale `scale`; the underlying map has scale 1).
///
/// Every axis line of the base map is promised to move strictly toward a
/// single crossing: signs go `+1 … +1, 0, −1 … −1` along the line. Probing a
/// line at the two integer heights bounding `p`'s cell therefore pins the
/// crossing:
///
/// ```text
/// (+1, +1) → at least two above the cell base; recorded as base + 2
/// (+1,  0) → exactly base + 1
/// ( 0, −1) → exactly base
/// (−1, −1) → at most one below; recorded as base − 1
/// ```
///
/// Any other sign pair breaks the promise. Crossing heights are promised
/// monotone and 1-Lipschitz (ℓ∞) in the line's key, so over one key-cell the
/// recorded heights span at most one unit — which also forces a recorded
/// bound to be exact whenever some corner in the cell is exact, making the
/// estimate's sign against any height inside the cell trustworthy.
///
/// The cell's corner heights extend to the whole cell by the largest
/// monotone 1-Lipschitz function below the data:
///
/// ```text
/// ŝ(q) = max over corners κ of  scale·v(κ) − max_j (scale·κ_j − q_j)₊
/// ```
pub(crate) fn refined_surface_height(
    base: &DmacOracle,
    dim: usize,
    p: &Point,
    scale: i64,
) -> i64 {
    let g = base.grid();
    let d = g.dim();
    // cell base in original units, pulled in so that [a, a+1] fits the grid
    let a: Vec<i64> = (0..d)
        .map(|j| {
            p.get(j)
                .div_euclid(scale)
                .clamp(g.lower_at(j), g.upper_at(j) - 1)
        })
        .collect();
    let others: Vec<usize> = (0..d).filter(|&j| j != dim).collect();

    let mut heights: Vec<i64> = Vec::with_capacity(1 << others.len());
    for mask in 0..(1usize << others.len()) {
        let mut corner = a.clone();
        for (bit, &j) in others.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                corner[j] += 1;
            }
        }
        let low = Point::new(corner);
        let high = low.bumped(dim, 1);
        let v = match (base.step(&low, dim).signum(), base.step(&high, dim).signum()) {
            (1, 1) => a[dim] + 2,
            (1, 0) => a[dim] + 1,
            (0, -1) => a[dim],
            (-1, -1) => a[dim] - 1,
            (s0, s1) => base.promise_violated(&format!(
                "axis-{dim} line through {low:?} has sign pair ({s0}, {s1}), \
                 not a single crossing"
            )),
        };
        heights.push(v);
    }

    let (lo, hi) = (
        *heights.iter().min().unwrap(),
        *heights.iter().max().unwrap(),
    );
    if hi - lo > 1 {
        base.promise_violated(&format!(
            "axis-{dim} crossing heights near {a:?} span more than one unit"
        ));
    }
    for mask in 0..heights.len() {
        for bit in 0..others.len() {
            if mask & (1 << bit) == 0 && heights[mask] > heights[mask | (1 << bit)] {
                base.promise_violated(&format!(
                    "axis-{dim} crossing heights near {a:?} are not monotone"
                ));
            }
        }
    }

    (0..heights.len())
        .map(|mask| {
            let shortfall = others
                .iter()
                .enumerate()
                .map(|(bit, &j)| {
                    let corner_j = a[j] + ((mask >> bit) & 1) as i64;
                    (corner_j * scale - p.get(j)).max(0)
                })
                .max()
                .unwrap_or(0);
            heights[mask] * scale - shortfall
        })
        .max()
        .unwrap()
}

/// Sign of the step the refined map takes along `dim` at probe `p`: up below
/// the estimated crossing, down above it, zero on it.
pub(crate) fn refined_direction(base: &DmacOracle, dim: usize, p: &Point, scale: i64) -> i64 {
    (refined_surface_height(base, dim, p, scale) - p.get(dim)).signum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use dmac_core::Grid;
    use std::rc::Rc;

    /// Sign-steps toward crossing heights s₀(x₁) = 1,1,2,2 and s₁(x₀) = 1.
    fn stepped() -> Rc<DmacOracle> {
        DmacOracle::new_unit(Grid::uniform(2, 0, 3), |x: &Point| {
            let s0 = if x.get(1) >= 2 { 2 } else { 1 };
            Point::new(vec![
                x.get(0) + (s0 - x.get(0)).signum(),
                x.get(1) + (1 - x.get(1)).signum(),
            ])
        })
    }

    #[test]
    fn interpolates_between_exact_corners() {
        let f = stepped();
        // keys 1 and 2 hold heights 1 and 2; quarter-keys ramp between them
        assert_eq!(refined_surface_height(&f, 0, &Point::with_scale(vec![2, 4], 4), 4), 4);
        assert_eq!(refined_surface_height(&f, 0, &Point::with_scale(vec![2, 5], 4), 4), 5);
        assert_eq!(refined_surface_height(&f, 0, &Point::with_scale(vec![2, 7], 4), 4), 7);
        assert_eq!(refined_surface_height(&f, 0, &Point::with_scale(vec![2, 8], 4), 4), 8);
        // flat stretch: keys 0 and 1 both hold height 1
        assert_eq!(refined_surface_height(&f, 0, &Point::with_scale(vec![2, 1], 4), 4), 4);
        // the other axis is flat at height 1 everywhere
        assert_eq!(refined_surface_height(&f, 1, &Point::with_scale(vec![9, 2], 4), 4), 4);
    }

    #[test]
    fn directions_point_at_the_crossing() {
        let f = stepped();
        assert_eq!(refined_direction(&f, 0, &Point::with_scale(vec![2, 5], 4), 4), 1);
        assert_eq!(refined_direction(&f, 0, &Point::with_scale(vec![5, 5], 4), 4), 0);
        assert_eq!(refined_direction(&f, 0, &Point::with_scale(vec![9, 5], 4), 4), -1);
    }

    #[test]
    fn estimate_is_monotone_and_lipschitz_in_the_key() {
        let f = stepped();
        let at = |q: i64| refined_surface_height(&f, 0, &Point::with_scale(vec![0, q], 4), 4);
        let mut prev = at(0);
        for q in 1..=12 {
            let cur = at(q);
            assert!(cur >= prev, "estimate dropped at key {q}");
            assert!(cur - prev <= 1, "estimate jumped at key {q}");
            prev = cur;
        }
    }

    #[test]
    #[should_panic(expected = "promise violated")]
    fn fixed_runs_break_the_single_crossing_promise() {
        // identity: every sign pair on a line is (0, 0)
        let f = DmacOracle::new_unit(Grid::uniform(2, 0, 2), |x: &Point| x.clone());
        refined_surface_height(&f, 0, &Point::with_scale(vec![3, 3], 4), 4);
    }
}
