//! Seeded, reproducible test instances.
//!
//! Three families: violation-free grid maps built from explicitly monotone
//! gradient-one surfaces, the same maps with a single planted monotonicity or
//! non-expansion violation at a known pair, and discounted turn-based games
//! whose Shapley operator is a monotone contraction on the unit cube.

mod games;
mod inject;
mod surface_gen;

pub use games::{
    gen_turn_based_game, rational, shapley_operator, value_iteration, Action, Owner,
    TurnBasedGame,
};
pub use inject::{inject_violation, InjectedInstance, ViolationKind};
pub use surface_gen::{gen_surface_instance, SurfaceInstance};
