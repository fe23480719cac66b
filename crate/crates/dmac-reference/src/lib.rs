//! Exhaustive reference implementations used to validate the query-efficient
//! algorithms: full-grid scans for fixed points and violations, Kleene
//! iteration for least fixed points, per-line surface extraction, and
//! critical-box enumeration.
//!
//! Everything in this crate is allowed to touch every grid point (subject to a
//! budget); nothing here is query-efficient, and nothing else should be used
//! as ground truth in tests.

mod boxes;
mod brute;
mod lfp;
mod scan;
mod surface;

pub use boxes::{enumerate_critical_boxes, heights, up_set_in_slice};
pub use brute::{brute_force_solve, BruteReport};
pub use lfp::least_fixed_point;
pub use scan::{budget_from_env, ReferenceError, DEFAULT_POINT_BUDGET};
pub use surface::{check_surface_theorem, surface, SurfaceCheck, SurfaceTable};
