//! Exact Bernoulli numbers and polynomials, the Euler-Maclaurin machinery with
//! certified remainder bounds, the classical quadrature rules with asymptotic
//! error expansions, and two-sided enclosures for harmonic-number constants and
//! trigonometric sums.
//!
//! Everything exact lives on arbitrary-precision rationals ([`Rational`]); the
//! analytic layer carries explicit binary precision ([`rug::Float`]) and, where
//! an enclosure is promised, an [`Interval`] with outward rounding.

use std::fmt;

pub mod rational;
pub mod poly;
pub mod bernoulli;
pub mod identities;
pub mod formulas;
pub mod real;
pub mod interval;
pub mod analytic;
pub mod integrand;
pub mod gl;
pub mod euler_maclaurin;
pub mod quadrature;
pub mod series;
pub mod trig;
pub mod verify;

pub use interval::Interval;
pub use poly::RatPoly;
pub use rug::{Float, Integer, Rational};

/// Default working precision in bits.
pub const DEFAULT_PREC: u32 = 256;

/// Hard ceiling for precision escalation when a strict-inequality check is
/// too close to call at the working precision.
pub const MAX_PREC: u32 = 4096;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A von Staudt-Clausen sum failed integrality (impossible unless the
    /// arithmetic itself is broken).
    NotInteger { n: usize, value: String },
    /// Bisection found no sign change on the initial bracket.
    BracketFailure { n: usize },
    /// No admissible (n, m) pair reaches the requested enclosure width.
    PrecisionUnreachable { prec: u32 },
    /// Two independent computations of the same quantity disagree beyond
    /// the combined tolerance.
    ToleranceFailure { what: String, delta: String, tol: String },
    /// A scaled error sequence did not stabilize to the expected order.
    OrderMismatch { rule: String, detail: String },
    /// A certified bound was violated.
    BoundViolation { what: String, detail: String },
    /// A strict sandwich inequality was violated (or too close to call at
    /// the maximum precision).
    SandwichViolation { what: String, detail: String },
    /// An exact or ulp-level identity failed.
    IdentityViolation { what: String, detail: String },
    /// A caller-asserted hypothesis (e.g. a monotonicity flag) is absent.
    PreconditionViolated { what: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotInteger { n, value } => {
                write!(f, "von Staudt-Clausen sum for n={n} is not an integer: {value}")
            }
            Self::BracketFailure { n } => write!(f, "no sign change in zero bracket for n={n}"),
            Self::PrecisionUnreachable { prec } => {
                write!(f, "cannot certify an enclosure of width 2^-{prec}")
            }
            Self::ToleranceFailure { what, delta, tol } => {
                write!(f, "{what}: paths disagree by {delta} (tolerance {tol})")
            }
            Self::OrderMismatch { rule, detail } => {
                write!(f, "order sequence for {rule} did not stabilize: {detail}")
            }
            Self::BoundViolation { what, detail } => write!(f, "{what}: bound violated: {detail}"),
            Self::SandwichViolation { what, detail } => {
                write!(f, "{what}: sandwich violated: {detail}")
            }
            Self::IdentityViolation { what, detail } => {
                write!(f, "identity {what} failed: {detail}")
            }
            Self::PreconditionViolated { what } => write!(f, "precondition violated: {what}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
