//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors shared by all pipelines.
///
/// Infeasibility variants carry the boundary of the feasible region so a
/// caller (or the CLI) can report the minimal change that would make the
/// request satisfiable instead of silently truncating.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation.
    Domain(String),
    /// The requested point is outside the evaluation regime the artifact
    /// supports (e.g. Re(s) ≤ 1 for direct-summation series).
    OutOfRegime(String),
    /// A precondition stated by the operation contract is violated.
    Precondition(String),
    /// Requested parameters exceed a configured budget; the message names
    /// the budget and the minimal feasible parameter when known.
    Infeasible(String),
    /// The working precision cannot certify the requested tolerance.
    Precision(String),
    /// Two relation certificates force inconsistent weight values.
    RelationConsistency(String),
    /// A quantity required to be bounded away from zero came too close to
    /// the evaluator's error bound (e.g. a contour running over a zero).
    GuardViolation(String),
    /// An optimisation/fitting step finished without reaching its target;
    /// carries the best achieved value.
    FitFailed { achieved: f64, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::OutOfRegime(m) => write!(f, "out of evaluation regime: {m}"),
            Error::Precondition(m) => write!(f, "precondition violated: {m}"),
            Error::Infeasible(m) => write!(f, "infeasible request: {m}"),
            Error::Precision(m) => write!(f, "insufficient precision: {m}"),
            Error::RelationConsistency(m) => write!(f, "relation consistency: {m}"),
            Error::GuardViolation(m) => write!(f, "guard violation: {m}"),
            Error::FitFailed { achieved, message } => {
                write!(f, "fit failed (best achieved {achieved:.3e}): {message}")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
