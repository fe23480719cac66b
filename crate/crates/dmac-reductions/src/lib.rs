//! Reductions that carry solutions backward: each wraps an oracle in a new
//! one with better structure and returns, alongside the wrapped oracle, a
//! mapping from any solution of the wrapped instance to a solution of the
//! original. All wrappers cost a constant factor in queries.

mod boundary;
mod clamp;
mod continuous;
mod enforce_unique;
mod interpolate;
mod mc_to_dmac;
mod one_d_unique;
mod updown;
mod vertical;

use std::rc::Rc;

use dmac_core::{DmacOracle, Solution};

pub use boundary::force_boundary_inward;
pub use clamp::clamp_unit_displacement;
pub use continuous::{validate_mc_solution, ContinuousOracle, McSolution};
pub use enforce_unique::{
    enforce_unique_fixed_point_2d, enforce_unique_fixed_point_3d, UniquenessReduction,
};
pub use mc_to_dmac::mc_to_dmac;
pub use one_d_unique::make_1d_unique;
pub use updown::up_down_boundary_preprocess_3d;
pub use vertical::vertical_extension_2d;

/// A wrapped oracle plus the way home: `map_back` turns any solution of the
/// wrapped instance into a solution of the instance it was built from.
pub struct ReductionResult<S> {
    pub oracle: Rc<DmacOracle>,
    pub map_back: Box<dyn Fn(&Solution) -> S>,
}

impl ReductionResult<Solution> {
    /// Chains another reduction on top of this one, composing the map-backs.
    pub fn then(
        self,
        next: impl FnOnce(&Rc<DmacOracle>) -> ReductionResult<Solution>,
    ) -> ReductionResult<Solution> {
        let outer = next(&self.oracle);
        let inner_back = self.map_back;
        ReductionResult {
            oracle: outer.oracle,
            map_back: Box::new(move |s| inner_back(&(outer.map_back)(s))),
        }
    }
}

/// Re-derives which violation (if any) a candidate pair witnesses against
/// `base`, trying the pairs in order; used by map-backs whose target pair is
/// known to lie among a constant-size candidate set. Panics as a promise
/// violation when no candidate works, since each caller has a lemma saying
/// one must.
pub(crate) fn first_violation_among(
    base: &DmacOracle,
    candidates: impl IntoIterator<Item = (dmac_core::Point, dmac_core::Point)>,
    context: &str,
) -> Solution {
    for (a, b) in candidates {
        if a == b {
            continue;
        }
        if !base.grid().contains(&a) || !base.grid().contains(&b) {
            continue;
        }
        if let Some(sol) = dmac_core::classify_pair(base, &a, &b) {
            return sol;
        }
    }
    base.promise_violated(context)
}
