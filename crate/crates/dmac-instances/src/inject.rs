use std::rc::Rc;

use dmac_core::{DmacOracle, Point};

use crate::surface_gen::SurfaceInstance;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ViolationKind {
    Monotonicity,
    NonExpansion,
}

/// A violation-free instance with the map overridden at a single point so
/// that a recorded adjacent pair witnesses a violation of the chosen kind.
///
/// The override keeps every displacement at most one, so the planted
/// instance stays a unit instance, and it lands the overridden coordinate on
/// the wrong side of a neighboring value, so the line through the point loses
/// its well-formed fixed run — the structural surface predicates fail along
/// with violation-freeness.
#[derive(Clone, Debug)]
pub struct InjectedInstance {
    base: SurfaceInstance,
    kind: ViolationKind,
    at: Point,
    witness: Point,
    replacement: Point,
}

impl InjectedInstance {
    pub fn kind(&self) -> ViolationKind {
        self.kind
    }

    /// The planted pair `(x, y)`: `y = x + e_j`, and the pair witnesses the
    /// recorded kind of violation.
    pub fn pair(&self) -> (&Point, &Point) {
        (&self.at, &self.witness)
    }

    pub fn base(&self) -> &SurfaceInstance {
        &self.base
    }

    pub fn oracle(&self) -> Rc<DmacOracle> {
        let base = self.base.clone();
        let at = self.at.clone();
        let replacement = self.replacement.clone();
        DmacOracle::with_label(
            base.grid().clone(),
            move |p| {
                if *p == at {
                    replacement.clone()
                } else {
                    base.value(p)
                }
            },
            true,
            "injected",
        )
    }
}

/// Plants a violation of `kind` into `base` by overriding the map at one
/// point. The search is deterministic (first eligible site in lexicographic
/// order); `None` means the instance offers no eligible site.
///
/// Monotonicity: at a point `x` fixed in dimension `i` whose dimension-`i`
/// surface is flat toward `y = x + e_j`, push `f_i(x)` up to `x_i + 1`. Then
/// `x ≤ y` but `f_i(x) > f_i(y)`.
///
/// Non-expansion: at a point `x` fixed in dimension `i` whose surface rises
/// toward `y = x + e_j`, push `f_i(x)` down to `x_i − 1`. The pair stays
/// monotone while `|f_i(x) − f_i(y)| = 2` against `‖x − y‖∞ = 1`.
pub fn inject_violation(base: &SurfaceInstance, kind: ViolationKind) -> Option<InjectedInstance> {
    let grid = base.grid();
    let d = base.dim();
    assert!(d >= 2, "planting needs a second dimension to step along");

    for x in grid.iter_points() {
        for i in 0..d {
            if base.value(&x).get(i) != x.get(i) {
                continue; // need x on its dimension-i surface
            }
            for j in 0..d {
                if j == i || x.get(j) == grid.upper_at(j) {
                    continue;
                }
                let y = x.bumped(j, 1);
                let fi_y = base.value(&y).get(i);
                let eligible = match kind {
                    // flat step, with room above to point past it
                    ViolationKind::Monotonicity => {
                        fi_y == x.get(i) && x.get(i) < grid.upper_at(i)
                    }
                    // rising step, with room below to fall two behind it
                    ViolationKind::NonExpansion => {
                        fi_y == x.get(i) + 1 && x.get(i) > grid.lower_at(i)
                    }
                };
                if !eligible {
                    continue;
                }
                let delta = match kind {
                    ViolationKind::Monotonicity => 1,
                    ViolationKind::NonExpansion => -1,
                };
                let replacement = base.value(&x).with_coord(i, x.get(i) + delta);
                return Some(InjectedInstance {
                    base: base.clone(),
                    kind,
                    at: x,
                    witness: y,
                    replacement,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface_gen::gen_surface_instance;
    use dmac_core::{classify_pair, Solution};
    use dmac_reference::check_surface_theorem;

    fn planted(d: usize, n: i64, seed: u64, kind: ViolationKind) -> Option<InjectedInstance> {
        inject_violation(&gen_surface_instance(d, n, seed), kind)
    }

    #[test]
    fn planted_monotonicity_pair_classifies_as_monotone_break() {
        let mut found = 0;
        for seed in 0..10 {
            let Some(inj) = planted(2, 8, seed, ViolationKind::Monotonicity) else {
                continue;
            };
            found += 1;
            let f = inj.oracle();
            let (x, y) = inj.pair();
            assert_eq!(
                classify_pair(&f, x, y),
                Some(Solution::MonoViolation(x.clone(), y.clone()))
            );
        }
        assert!(found >= 5, "most seeds should offer a planting site");
    }

    #[test]
    fn planted_expansion_pair_classifies_as_expansion() {
        let mut found = 0;
        for seed in 0..10 {
            let Some(inj) = planted(2, 8, seed, ViolationKind::NonExpansion) else {
                continue;
            };
            found += 1;
            let f = inj.oracle();
            let (x, y) = inj.pair();
            assert_eq!(
                classify_pair(&f, x, y),
                Some(Solution::NonExpViolation(x.clone(), y.clone()))
            );
        }
        assert!(found >= 5, "most seeds should offer a planting site");
    }

    #[test]
    fn planted_instances_fail_the_structure_check() {
        for kind in [ViolationKind::Monotonicity, ViolationKind::NonExpansion] {
            for seed in 0..6 {
                let Some(inj) = planted(3, 5, seed, kind) else {
                    continue;
                };
                let check = check_surface_theorem(&inj.oracle(), None).unwrap();
                assert!(!check.violation_free, "{kind:?} seed {seed}");
                assert!(
                    !(check.one_d_rational && check.monotone && check.gradient_one),
                    "{kind:?} seed {seed} kept all structural predicates"
                );
            }
        }
    }

    #[test]
    fn planting_is_deterministic() {
        let a = planted(2, 8, 3, ViolationKind::Monotonicity).unwrap();
        let b = planted(2, 8, 3, ViolationKind::Monotonicity).unwrap();
        assert_eq!(a.pair(), b.pair());
        assert_eq!(a.kind(), b.kind());
    }
}
