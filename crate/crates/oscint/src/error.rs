use thiserror::Error;

use crate::coefficients::MethodId;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{method}: v = {v} lies within {radius} of the pole at {pole}")]
    PoleProximity {
        method: MethodId,
        v: f64,
        pole: f64,
        radius: f64,
    },
    #[error("{method}: only {digits:.1} correct digits at v = {v} with {bits} bits")]
    PrecisionInsufficient {
        method: MethodId,
        v: f64,
        bits: usize,
        digits: f64,
    },
    #[error("{method}: v = {v} is outside the series validity radius {radius}")]
    OutOfValidityRange {
        method: MethodId,
        v: f64,
        radius: f64,
    },
    #[error("{method}: fitted frequency v = {v} must lie in (0, {v_max}]")]
    InvalidFrequency {
        method: MethodId,
        v: f64,
        v_max: f64,
    },
    #[error("phase-lag denominator vanishes at s = {s}")]
    DegenerateDenominator { s: f64 },
    #[error("leading coefficient of the characteristic polynomial vanishes")]
    LeadingCoefficientZero,
    #[error("root finder did not converge")]
    ConvergenceFailure,
    #[error("solution overflowed before x = {x}; the step is likely outside the interval of periodicity")]
    Diverged { x: f64 },
    #[error(
        "{method} at s = {s} (segment starting at x = {x}) is outside its interval of periodicity"
    )]
    OutsidePeriodicity { method: MethodId, s: f64, x: f64 },
    #[error("sample pair ({x0}, {x1}) is too ill-conditioned for the phase shift")]
    IllConditionedPair { x0: f64, x1: f64 },
    #[error("centrifugal term is singular at x = 0 for l = {l}")]
    SingularOrigin { l: u32 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
