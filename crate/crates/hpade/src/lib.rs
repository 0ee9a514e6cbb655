//! High-precision Pade and Hermite-Pade machinery for recovering a multivalued
//! analytic function on several sheets of its Riemann surface from a single
//! power-series germ.
//!
//! The crate is organised around the pipeline
//!
//! 1. [`series`] builds truncated germs of the model-class functions at
//!    `z = infinity` or `zeta = 0` at configurable binary precision;
//! 2. [`hp`] solves the linear systems defining diagonal Pade and type I / II
//!    Hermite-Pade polynomials, and [`roots`] extracts their zeros;
//! 3. [`approx`] evaluates the resulting rational objects and composes them
//!    into branch values on sheets 1..3;
//! 4. [`potential`] solves the scalar equilibrium problem on `[a, b]` and
//!    provides the predicted zero distributions and convergence rates;
//! 5. [`continuation`] supplies a ground-truth path-continuation oracle,
//!    zero-cluster geometry, and the end-to-end sheet-tracking continuation.

pub mod approx;
pub mod continuation;
mod error;
pub mod hp;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod potential;
pub mod precision;
pub mod presets;
pub mod roots;
pub mod series;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
