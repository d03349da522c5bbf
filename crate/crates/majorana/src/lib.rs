//! Massless bispinors, two-qubit entangling gates, and Majorana zero mode
//! braiding, with exact cyclotomic arithmetic.
//!
//! The crate builds the solutions of the massless Dirac equation in the
//! chiral representation, proves the unitary equivalence between the Weyl
//! and Majorana solution sets, maps both onto two-qubit states (product
//! states and Bell states respectively), and runs a four-Majorana-mode
//! topological braiding model on top of the same matrices. Every identity is
//! verified either *exactly* — entries live in the cyclotomic field ℚ(ζ₈) —
//! or, for general momentum directions, to a 1e−12 float tolerance.
//!
//! # Modules
//!
//! - [`scalar`]: the exact ℚ(ζ₈) backend and the complex-float backend.
//! - [`matrix`]: small fixed-size vectors/matrices generic over the backend.
//! - [`gamma`]: the spacetime Clifford algebra in the chiral representation.
//! - [`bispinor`]: Weyl and Majorana solutions, their equivalence maps,
//!   projectors, and the momentum/spin flip identities.
//! - [`qubit`]: two-qubit bases, entangling gate families, Yang–Baxter and
//!   Clifford-algebra gate checks, concurrence.
//! - [`tqc`]: fusion rules, braid operators, parity observables, and
//!   entanglement from braiding with four Majorana modes.
//! - [`report`]: machine-readable check records for the verification suites.
//!
//! # Quick start
//!
//! ```
//! use majorana::gamma;
//! use majorana::matrix::Matrix4;
//!
//! // {γ^μ, γ^ν} = 2 g^{μν} 𝟙, exactly.
//! let anti = gamma::gamma(1).anticommutator(&gamma::gamma(1));
//! assert_eq!(anti, Matrix4::identity().scale(&(-2).into()));
//! ```

pub mod bispinor;
pub mod consistency;
pub mod gamma;
pub mod matrix;
pub mod qubit;
pub mod report;
pub mod scalar;
pub mod tqc;

pub use matrix::trace_inner;
pub use scalar::{Complex64, ComplexScalar, ExactScalar, Rational, Scalar};

/// Default tolerance for float-backend identity checks.
pub const FLOAT_TOL: f64 = 1e-12;

/// Tolerance for exact→float conversion consistency.
pub const CONVERSION_TOL: f64 = 1e-14;

/// Tolerance for unit-norm preconditions on float states.
pub const NORM_TOL: f64 = 1e-9;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("direction out of range: theta={theta} (want [0,π]), phi={phi} (want [0,2π))")]
    InvalidDirection { theta: f64, phi: f64 },
    #[error("direction too close to a coordinate pole (theta={theta}); the azimuthal phase is undefined there")]
    PoleDirection { theta: f64 },
    #[error("generator does not square to plus or minus the identity")]
    GeneratorNotInvolutory,
    #[error("hyperbolic exponential is exact only at angle zero")]
    HyperbolicAngleNotExact,
    #[error("state is not unit-norm (|‖v‖² − 1| = {deviation})")]
    NotNormalized { deviation: f64 },
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar::from_int(n)
    }
}
