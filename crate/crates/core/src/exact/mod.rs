//! Exact scalar arithmetic: rationals, truncated jets, generalized binomial
//! coefficients with an integer lower index, harmonic numbers and the
//! rational digamma/trigamma differences.
//!
//! Every identity handled by this crate reduces to equalities between values
//! built from these pieces, so nothing here ever touches floating point.

mod binomial;
mod harmonic;
mod jet;
mod rational;
mod scalar;

pub use binomial::{
    binom_int, binom_lower_param, binom_lower_param_seq, binom_poly, binom_poly_seq,
    binom_upper_shift, binom_upper_shift_seq, digamma_diff, factorial, lower_param_mode,
    trigamma_diff, LowerParamMode,
};
pub use harmonic::{harmonic, HarmonicCache, Harmonics};
pub use jet::Jet2;
pub use rational::{ParseRationalError, Rational};
pub use scalar::Scalar;

use thiserror::Error;

/// Failures of exact arithmetic. None of these are panics: callers decide
/// whether a pole means "skip this draw" or "report a failure".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("jet division pole")]
    JetDivisionPole,
    #[error("digamma pole at i = {index}")]
    DigammaPole { index: u64 },
    #[error("trigamma pole at i = {index}")]
    TrigammaPole { index: u64 },
    #[error("reflection pole at i = {index}")]
    ReflectionPole { index: u64 },
}
