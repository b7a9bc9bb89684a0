//! Exact and numerical machinery for the three-parameter central extensions
//! of the 2+1 dimensional Galilei algebra and group.
//!
//! The crate is split along the lines of the mathematics:
//!
//! * [`lie_algebra`]: structure constants over exact rationals, the extended
//!   algebra `g(k, m, l)`, Jacobi checks and basis changes.
//! * [`enveloping`]: normal-ordered enveloping algebra, Casimir elements and a
//!   bounded-degree centralizer search.
//! * [`group_cocycle`]: composition laws of the extended group and of the
//!   extended universal cover, cocycle/coboundary checks and the
//!   `k`-removing reparametrization.
//! * [`contraction`]: 2+1 Poincaré elements, Wigner rotations and the
//!   `c -> infinity` limit experiments.

pub mod algebra_file;
pub mod contraction;
pub mod enveloping;
pub mod error;
pub mod group_cocycle;
pub mod lie_algebra;
pub mod linalg;
pub mod rational;
pub mod sampling;

pub use error::{Error, Result};
pub use rational::{ExtensionParams, Rational};
