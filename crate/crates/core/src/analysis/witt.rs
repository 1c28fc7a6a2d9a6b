use crate::exact::{binomial, BiPoly, Poly, RatFunc, Rational, Ring, Var};
use crate::numbers::{bernoulli_numbers, eulerian_poly, euler_numbers};
use crate::Witness;

use num_traits::{One, Zero};

/// Which classical sequence enters the Witt-type identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WittKind {
    Bernoulli,
    Euler,
}

fn q(n: impl Into<num_bigint::BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `(-1)^{j+1} C(n,j) j (ρ-1)^{-j} A_{j-1}(ρ)`.
fn weight(n: usize, j: usize) -> RatFunc {
    let rm1 = RatFunc::x(Var::Rho) - RatFunc::one();
    let c = q(binomial(n, j as i64) * num_bigint::BigInt::from(j));
    let c = if j % 2 == 1 { c } else { -c };
    RatFunc::from_poly(eulerian_poly(j - 1)).scale(&c) / Ring::pow(&rm1, j)
}

/// `Σ_j w_j (ρ(ω+1)^{n-j} - ω^{n-j}) = nω^{n-1}`, for `n >= 1`.
pub fn epi_check(n: usize) -> Witness<BiPoly> {
    assert!(n >= 1);
    let rho = RatFunc::x(Var::Rho);
    let w_plus = Poly::new(Var::Omega, vec![RatFunc::one(), RatFunc::one()]);
    let w = Poly::x(Var::Omega);
    let lhs = (1..=n).fold(Poly::zero_in(Var::Omega), |acc, j| {
        let inner = &w_plus.pow(n - j).scale_by(&rho) - &w.pow(n - j);
        &acc + &inner.scale_by(&weight(n, j))
    });
    Witness::new(lhs, Poly::monomial(Var::Omega, RatFunc::constant(q(n as i64)), n - 1))
}

/// `Σ_j w_j (ρ Σ_k C(n-j,k) X_k - X_{n-j}) = n X_{n-1}` for any sequence `X`,
/// with `X` the Bernoulli or Euler numbers; `n >= 1`.
pub fn witt_check(n: usize, kind: WittKind) -> Witness<RatFunc> {
    assert!(n >= 1);
    let x = match kind {
        WittKind::Bernoulli => bernoulli_numbers(n),
        WittKind::Euler => euler_numbers(n),
    };
    let rho = RatFunc::x(Var::Rho);
    let lhs = (1..=n).fold(RatFunc::zero(), |acc, j| {
        let shifted: Rational = (0..=n - j).map(|k| q(binomial(n - j, k as i64)) * &x[k]).sum();
        let inner = rho.scale(&shifted) - RatFunc::constant(x[n - j].clone());
        acc + weight(n, j) * inner
    });
    Witness::new(lhs, RatFunc::constant(q(n as i64) * &x[n - 1]))
}
