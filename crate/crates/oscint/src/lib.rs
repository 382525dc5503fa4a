//! Symmetric 14-step linear multistep methods for `y'' = f(t, y)`, their
//! phase-fitted variants, and the machinery to check them.

pub mod coefficients;
pub mod error;
mod ext;
pub mod integrator;
pub mod phaselag;
pub mod schrodinger;
pub mod stability;

#[cfg(feature = "cli")]
pub mod cli;

pub use coefficients::{
    classical_coefficients, closed_form_b, coefficients, coefficients_with, taylor_b, CoeffOptions,
    CoefficientSet, ExactCoefficientSet, MethodId, Rational,
};
pub use error::{Error, Result};
