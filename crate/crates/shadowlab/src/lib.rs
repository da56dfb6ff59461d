//! Empirical toolkit for uniformly random 2D shadows of convex polytopes.
//!
//! A *shadow* of a polytope `P` in `R^n` is its image under an orthogonal
//! projection onto a plane. Drawing the plane uniformly at random (Haar
//! measure on 2-frames) makes the number of shadow vertices a random
//! variable; its expectation is pinched between two computable quantities
//! built from the geometric diameter of `P`, its edge lengths, and the
//! angular width of its normal fan. This crate computes each side of that
//! sandwich — exactly where a closed form exists, by certified linear
//! programming where combinatorics are needed, and by seeded Monte Carlo
//! where only sampling is available — and ships the experiments that
//! compare them.
//!
//! The library surface is organized bottom-up:
//!
//! - [`rng`]: seeded, splittable random streams so every experiment is
//!   replayable and independent of thread count.
//! - [`geom`]: vectors, 2-frames, projections, diameters, hyperplane
//!   distances.
//! - [`hull`]: planar convex hulls with tolerance-aware deduplication.
//! - [`lp`]: a dense two-phase simplex plus edge/extreme-point
//!   certificates.
//! - [`polytope`]: vertex-list polytopes, zonotopes, edge statistics, and
//!   normal cones.
//! - [`families`]: named constructions (hypercubes, permutahedra and their
//!   augmentations, Birkhoff polytopes, near-parallel zonotopes).
//! - [`shadow`]: exact and Monte Carlo shadow-size computations.
//! - [`fan`]: normal-fan arc decompositions, the fan's angular gap, and
//!   distance-to-boundary experiments inside cones.
//! - [`bounds`]: the sandwich bounds themselves plus the integer-data
//!   (Karp-like surrogate, lattice, rational) variants.
//! - [`stats`]: permutation and Kolmogorov-Smirnov tests for the
//!   independence experiments.
//! - [`io`]: JSON polytope files, experiment configs/reports, CSV output.
//!
//! Start with the `examples/` directory: each example is a runnable
//! experiment exercising one capability end to end.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod families;
pub mod fan;
pub mod geom;
pub mod hull;
pub mod io;
pub mod lp;
pub mod polytope;
pub mod rng;
pub mod shadow;
pub mod stats;
pub mod tol;

pub use error::{Error, Result};
pub use geom::{Frame2, Point2};
pub use polytope::{VPolytope, Zonotope};
pub use rng::Rng;
