//! Tolerance policy, in one place.
//!
//! Geometric sign tests (hull turns, arc pruning, cone membership) use a
//! relative tolerance scaled by the magnitude of the inputs; identity-level
//! comparisons (orthonormality, vertex dedup) use a tighter absolute one.
//! Tests that need a different tolerance take it as an explicit argument.

/// Relative tolerance for geometric predicates. Scaled by input magnitude
/// before use, e.g. a hull turn counts as collinear when the cross product
/// is below `REL_TOL * scale`.
pub const REL_TOL: f64 = 1e-9;

/// Absolute tolerance for dedup of vertices and for frame orthonormality.
pub const DEDUP_TOL: f64 = 1e-12;

/// Feasibility tolerance for the simplex solver, applied after rows are
/// scaled to unit max-norm.
pub const LP_TOL: f64 = 1e-9;

/// Simplex pivot cap; exceeding it is reported as a solver stall.
pub const LP_MAX_PIVOTS: u64 = 1_000_000;

/// Slack allowed when testing membership `x = sum(lambda_i * ray_i)` of a
/// simplicial cone: coordinates may dip this far below zero.
pub const CONE_MEMBER_TOL: f64 = 1e-12;

/// Angular padding for arc intersection; arcs at or below this length are
/// treated as empty.
pub const ARC_PAD: f64 = 1e-12;

/// Rejection sampling gives up when the acceptance rate stays below this
/// floor over [`CONE_MAX_PROPOSALS`] proposals.
pub const CONE_RATE_FLOOR: f64 = 1e-6;

/// Proposal budget for cone rejection sampling.
pub const CONE_MAX_PROPOSALS: u64 = 10_000_000;
