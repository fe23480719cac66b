use dmac_core::{DmacOracle, Point, Solution};

use crate::scan::{budget_from_env, scan_all, ReferenceError};

/// Result of a full-grid scan.
#[derive(Debug)]
pub struct BruteReport {
    /// All fixed points, in lexicographic order.
    pub fixed_points: Vec<Point>,
    /// The first violation pair in scan order (points lexicographic, then
    /// offsets lexicographic over the ℓ∞ ball of radius one), or `None` if
    /// the map is monotone and non-expansive.
    pub first_violation: Option<Solution>,
    /// How many grid points were evaluated.
    pub points_scanned: u64,
}

impl BruteReport {
    /// The componentwise minimum of all fixed points. For a violation-free
    /// map the fixed points form a lattice, so this is itself the least fixed
    /// point; with violations present it is merely a lower bound.
    pub fn min_fixed(&self) -> Option<Point> {
        let mut it = self.fixed_points.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, p| acc.meet(p)))
    }
}

/// Evaluates the map at every grid point, reporting all fixed points and the
/// first monotonicity or non-expansion violation. `budget` caps the number of
/// points (default: the `DMAC_BUDGET` environment variable, else 50,000).
pub fn brute_force_solve(
    f: &DmacOracle,
    budget: Option<u64>,
) -> Result<BruteReport, ReferenceError> {
    let budget = budget.unwrap_or_else(budget_from_env);
    let table = scan_all(f, budget)?;
    Ok(BruteReport {
        fixed_points: table.fixed,
        first_violation: table.first_violation,
        points_scanned: table.points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use dmac_core::Grid;
    use std::collections::HashMap;

    fn table_oracle(grid: Grid, entries: &[(&[i64], &[i64])]) -> std::rc::Rc<DmacOracle> {
        let map: HashMap<Vec<i64>, Vec<i64>> = entries
            .iter()
            .map(|(k, v)| (k.to_vec(), v.to_vec()))
            .collect();
        DmacOracle::new(grid, move |p: &Point| {
            Point::new(map[p.coords()].clone())
        })
    }

    #[test]
    fn finds_fixed_points_in_lex_order() {
        // One dimension, 0..=3, moving one step toward 2 from below and fixed
        // from 2 upward.
        let f = table_oracle(
            Grid::uniform(1, 0, 3),
            &[(&[0], &[1]), (&[1], &[2]), (&[2], &[2]), (&[3], &[3])],
        );
        let report = brute_force_solve(&f, None).unwrap();
        assert_eq!(
            report.fixed_points,
            vec![Point::new(vec![2]), Point::new(vec![3])]
        );
        assert!(report.first_violation.is_none());
        assert_eq!(report.points_scanned, 4);
        assert_eq!(report.min_fixed(), Some(Point::new(vec![2])));
    }

    #[test]
    fn detects_monotonicity_violation() {
        let f = table_oracle(Grid::uniform(1, 0, 1), &[(&[0], &[1]), (&[1], &[0])]);
        let report = brute_force_solve(&f, None).unwrap();
        assert!(report.fixed_points.is_empty());
        match report.first_violation {
            Some(Solution::MonoViolation(x, y)) => {
                assert_eq!(x, Point::new(vec![0]));
                assert_eq!(y, Point::new(vec![1]));
            }
            other => panic!("expected monotonicity violation, got {other:?}"),
        }
    }

    #[test]
    fn detects_non_expansion_violation() {
        // Monotone but stretches distance: f(0)=0, f(1)=2, f(2)=2.
        let f = table_oracle(
            Grid::uniform(1, 0, 2),
            &[(&[0], &[0]), (&[1], &[2]), (&[2], &[2])],
        );
        let report = brute_force_solve(&f, None).unwrap();
        match report.first_violation {
            Some(Solution::NonExpViolation(x, y)) => {
                assert_eq!(x, Point::new(vec![0]));
                assert_eq!(y, Point::new(vec![1]));
            }
            other => panic!("expected non-expansion violation, got {other:?}"),
        }
    }

    #[test]
    fn respects_budget() {
        let f = table_oracle(Grid::uniform(1, 0, 3), &[]);
        let err = brute_force_solve(&f, Some(3)).unwrap_err();
        assert!(matches!(err, ReferenceError::BudgetExceeded { .. }));
    }
}
