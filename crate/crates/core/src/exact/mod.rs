//! Exact scalar, polynomial, rational-function and truncated-series
//! arithmetic. Everything above this layer checks identities against values
//! produced here.

mod combinatorics;
mod gf;
mod poly;
mod ratfunc;
mod rational;
mod render;
mod series;

pub use combinatorics::{binomial, binomial_poly, factorial, falling_factorial};
pub use gf::{gf_expand, Expansion, GfKind, GfParams};
pub use poly::{BiPoly, Poly, Var};
pub use ratfunc::{euler_operator, normalize, substitute, RatFunc};
pub use rational::{int, parse_rational, rat, to_f64, Field, Rational, Ring};
pub use render::Canonical;
pub use series::{Convention, PowerSeries};
