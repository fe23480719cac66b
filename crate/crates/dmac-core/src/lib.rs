//! Core types for discrete monotone approximate-contraction (DMAC) instances:
//! lattice points, grids, slices, query oracles, and solution classification.
//!
//! A DMAC instance is a function `f` from a finite grid to itself. A solution
//! is either a fixed point of `f`, a witness pair breaking monotonicity, or a
//! witness pair breaking ℓ∞ non-expansion. Everything downstream (reductions,
//! verification, solvers) works through [`DmacOracle`].

mod cone;
mod geometry;
mod grid;
mod oracle;
mod point;
mod slice;
mod solution;

pub use cone::{cone_eliminates, in_cone, order_eliminates, ConeKind, Strictness};
pub use geometry::CBox;
pub use grid::Grid;
pub use oracle::{flip_point, flipped, DmacOracle, PROMISE_MARKER};
pub use point::{inf_norm, Point};
pub use slice::{Slice, SliceDim};
pub use solution::{classify_pair, flip_solution, Solution};
