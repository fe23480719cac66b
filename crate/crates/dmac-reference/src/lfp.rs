use dmac_core::{DmacOracle, Point};

use crate::scan::ReferenceError;

/// Least fixed point by iterating the map from the grid bottom.
///
/// For a monotone map the bottom starts below every fixed point, each iterate
/// stays below every fixed point, and the sequence ascends until it reaches
/// the least one — at most the sum of the axis extents many steps, since every
/// non-final step raises some coordinate. A descent step (`f(x) < x`
/// somewhere while `x` is not fixed) is impossible for monotone maps starting
/// at the bottom and is reported as an error rather than looped on.
pub fn least_fixed_point(f: &DmacOracle) -> Result<Point, ReferenceError> {
    let grid = f.grid();
    let cap: u64 = (0..grid.dim()).map(|i| grid.extent(i) as u64).sum::<u64>() + 1;
    let mut x = grid.bottom();
    for _ in 0..=cap {
        let y = f.eval(&x);
        if y == x {
            return Ok(x);
        }
        if !x.le(&y) {
            return Err(ReferenceError::AscentStalled { at: x });
        }
        x = y;
    }
    Err(ReferenceError::AscentDiverged { steps: cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use dmac_core::Grid;

    #[test]
    fn ascends_to_least_fixed_point() {
        // Two dimensions on 0..=4: move one step toward (3, 1) coordinatewise.
        let f = DmacOracle::new(Grid::uniform(2, 0, 4), |p: &Point| {
            let target = [3i64, 1];
            Point::new(
                p.coords()
                    .iter()
                    .zip(target)
                    .map(|(&c, t)| c + (t - c).signum())
                    .collect(),
            )
        });
        assert_eq!(least_fixed_point(&f).unwrap(), Point::new(vec![3, 1]));
    }

    #[test]
    fn reports_descent_as_non_monotone() {
        // f maps everything to the bottom except the bottom itself, which
        // moves up; iteration cycles, which must surface as an error, not an
        // infinite loop.
        let f = DmacOracle::new(Grid::uniform(1, 0, 3), |p: &Point| {
            if p.get(0) == 0 {
                Point::new(vec![2])
            } else {
                Point::new(vec![0])
            }
        });
        assert!(matches!(
            least_fixed_point(&f),
            Err(ReferenceError::AscentStalled { .. })
        ));
    }
}
