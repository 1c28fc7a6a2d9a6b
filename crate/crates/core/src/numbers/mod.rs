//! Special numbers and polynomials, each computable by at least two
//! independent routes so the routes can be checked against one another.

mod apostol;
mod classical;
mod conventions;
mod eulerian;
mod frobenius;
pub mod identities;
mod stirling;

pub use apostol::{
    apostol_bernoulli_number, apostol_bernoulli_numbers, apostol_bernoulli_poly,
    apostol_euler_number, apostol_euler_numbers_in, apostol_euler_poly, ApostolMethod,
};
pub use classical::{bernoulli, bernoulli_numbers, euler_number, euler_numbers, y1};
pub use conventions::{ConventionEntry, CONVENTION_LEDGER};
pub use eulerian::{
    eulerian_bruteforce, eulerian_number, eulerian_poly, eulerian_row, EulerianRow,
    BRUTEFORCE_LIMIT,
};
pub use frobenius::{frobenius_number, frobenius_numbers_in, frobenius_poly};
pub use stirling::{array_poly, geometric_poly, stirling2, stirling2_table};

use crate::exact::{Poly, RatFunc, Rational, Var};

/// `ρ - 1` as a rational function.
pub(crate) fn rho_minus_one() -> RatFunc {
    RatFunc::from_poly(Poly::new(Var::Rho, vec![-Rational::from_integer(1.into()), Rational::from_integer(1.into())]))
}

/// `1 - ρ`.
pub(crate) fn one_minus_rho() -> RatFunc {
    -rho_minus_one()
}

pub(crate) fn sign(k: usize) -> Rational {
    Rational::from_integer(if k % 2 == 0 { 1.into() } else { (-1).into() })
}
