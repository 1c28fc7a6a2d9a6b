//! Exact arithmetic for uniform B-spline segments, Bernstein basis
//! polynomials and the Apostol-Bernoulli, Apostol-Euler, Eulerian,
//! Euler-Frobenius and Stirling families, together with a registry of
//! identities relating them and a runner that checks each one.
//!
//! Module map:
//!
//! - [`exact`]: rationals, polynomials, rational functions, truncated power
//!   series and generating-function expansion.
//! - [`numbers`]: closed forms and recurrences for the special families.
//! - [`spline`]: Bernstein basis and uniform B-spline segments, with every
//!   alternative construction route.
//! - [`analysis`]: truncated p-adic integrals and floating-point series checks.
//! - [`suite`]: identity registry and verification runner.

pub mod analysis;
pub mod error;
pub mod exact;
pub mod numbers;
pub mod spline;
pub mod suite;
mod witness;

pub use error::{Error, Result};
pub use exact::{
    BiPoly, Canonical, Convention, Expansion, GfKind, GfParams, Poly, PowerSeries, RatFunc,
    Rational, Ring, Var,
};
pub use witness::Witness;
