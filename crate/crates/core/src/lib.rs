//! Simulation and verification engine for the time-optimal pursuit-evasion game
//! between two Dubins vehicles, where the pursuer is faster and more agile.
//!
//! The feedback law looks at the four pairs of pursuer/evader turning circles,
//! computes the capture time along the single valid common tangent of each pair,
//! and plays the security strategies of the resulting 2×2 matrix game.
//!
//! Modules:
//! - [`dubins`]: vehicle limits, poses, turning circles, exact integration.
//! - [`tangents`]: directed common tangents and the valid-tangent filter.
//! - [`capture`]: capture time along a valid tangent.
//! - [`matrix_law`]: the matrix game and the feedback law.
//! - [`simulator`]: closed-loop rollouts, policies, CS-structure classification.
//! - [`reach`]: reachable-set boundaries, containment times, blocking sets.
//! - [`oracle`]: brute-force and CS-restricted min-max validators.
//! - [`export`]: trajectory CSV / metadata JSON and region CSV.

pub mod capture;
pub mod dubins;
pub mod error;
pub mod exec;
pub mod export;
pub mod geometry;
pub mod matrix_law;
pub mod oracle;
pub mod reach;
pub mod simulator;
pub mod tangents;

pub use capture::{capture_point_heading, time_to_capture, CaptureEstimate};
pub use dubins::{
    arc_time, step_exact, turning_circles, Control, GameConfig, Orientation, Owner, Pose, TurningCircle,
    VehicleParams,
};
pub use error::{GameError, Result};
pub use exec::Exec;
pub use geometry::Vec2;
pub use matrix_law::{
    applicability, build_matrix, feedback, solve_matrix, Applicability, ControlPair, GameMatrix, MatrixSolution,
};
pub use tangents::{common_tangents, valid_tangent, DirectedTangent, PEPair};
