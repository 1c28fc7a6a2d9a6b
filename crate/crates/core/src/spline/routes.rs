use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, falling_factorial, gf_expand, int, GfKind, GfParams, Poly, RatFunc, Rational, Ring, Var};
use crate::numbers::EulerianRow;

use super::{bernstein_shifted, bspline_segment};

fn q(n: impl Into<num_bigint::BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn signed(k: usize, x: Rational) -> Rational {
    if k % 2 == 0 {
        x
    } else {
        -x
    }
}

fn check_interval(n: usize, p: i64) -> Result<()> {
    if (0..=n as i64).contains(&p) {
        Ok(())
    } else {
        Err(Error::Domain(format!("interval index p = {p} must lie in 0..={n}")))
    }
}

/// `Σ_{j<=p} (B_{j-s}^k(ω-j) - B_{j-s-1}^k(ω-j))`.
fn bernstein_difference(k: usize, p: i64, s: i64) -> Poly {
    (0..=p).fold(Poly::zero_in(Var::Omega), |acc, j| {
        &(&acc + &bernstein_shifted(j - s, k, j)) - &bernstein_shifted(j - s - 1, k, j)
    })
}

/// Bernstein form `(1/n!) Σ_v (-1)^v C(n,v) Σ_{j<=p} (B_j^v(ω-j) - B_{j-1}^v(ω-j))`.
pub fn bspline_via_bernstein(n: usize, p: i64) -> Result<Poly> {
    check_interval(n, p)?;
    let sum = (0..=n).fold(Poly::zero_in(Var::Omega), |acc, v| {
        let c = signed(v, q(binomial(n, v as i64)));
        &acc + &bernstein_difference(v, p, 0).scale(&c)
    });
    Ok(sum.scale(&q(factorial(n)).recip()))
}

/// `v`-th derivative of `N_{0,n}(ω;p)` through Bernstein derivatives:
/// `(1/n!) Σ_d C(n,d) d!/(d-v)! Σ_m (-1)^{d+v-m} C(v,m) Σ_j (B_{j-m}^{d-v}(ω-j) - B_{j-m-1}^{d-v}(ω-j))`.
pub fn bspline_derivative(n: usize, p: i64, v: usize) -> Result<Poly> {
    check_interval(n, p)?;
    let mut sum = Poly::zero_in(Var::Omega);
    for d in v..=n {
        let outer = q(binomial(n, d as i64) * falling_factorial(d, v));
        for m in 0..=v {
            let c = signed(d + v - m, &outer * q(binomial(v, m as i64)));
            sum = &sum + &bernstein_difference(d - v, p, m as i64).scale(&c);
        }
    }
    Ok(sum.scale(&q(factorial(n)).recip()))
}

/// Rebuilds `N_{0,n+v}(ω;p)` from degree-`n` Bernstein data by the Leibniz rule:
/// `1/(n!(n+v)_v) Σ_d (-1)^{v+d} C(n,d) Σ_m (-1)^{v-m} C(v,m) Σ_j Σ_c B_c^m(ω-j)(B_{j-c}^d(ω-j) - B_{j-c-1}^d(ω-j))`.
pub fn bspline_leibniz(n: usize, p: i64, v: usize) -> Result<Poly> {
    if p < 0 {
        return Err(Error::Domain(format!("interval index p = {p} must be nonnegative")));
    }
    let mut sum = Poly::zero_in(Var::Omega);
    for d in 0..=n {
        for m in 0..=v {
            let c = signed(v + d + v - m, q(binomial(n, d as i64) * binomial(v, m as i64)));
            let mut inner = Poly::zero_in(Var::Omega);
            for j in 0..=p {
                for cc in 0..=m as i64 {
                    let diff = &bernstein_shifted(j - cc, d, j) - &bernstein_shifted(j - cc - 1, d, j);
                    inner = &inner + &(&bernstein_shifted(cc, m, j) * &diff);
                }
            }
            sum = &sum + &inner.scale(&c);
        }
    }
    let norm = q(factorial(n) * falling_factorial(n + v, v));
    Ok(sum.scale(&norm.recip()))
}

/// Ordinary coefficients `0..=order` of the B-spline generating function on interval `p`.
pub fn goldman_coefficients(p: i64, order: usize) -> Result<Vec<Poly>> {
    if p < 0 {
        return Err(Error::Domain(format!("interval index p = {p} must be nonnegative")));
    }
    let params = GfParams { p: Some(p), ..Default::default() };
    let series = gf_expand(GfKind::Goldman, &params, order)?
        .into_poly()
        .expect("goldman expands over Q[ω]");
    Ok(series.into_coeffs())
}

/// De Boor right side `(ω/n) N_{0,n-1}(ω;p) + ((n+1-ω)/n) N_{0,n-1}(ω-1;p-1)`.
pub fn deboor_rhs(n: usize, p: i64) -> Result<Poly> {
    if n == 0 {
        return Err(Error::Domain("the de Boor recurrence needs n >= 1".into()));
    }
    let inv = Rational::new(1.into(), (n as i64).into());
    let left = &Poly::new(Var::Omega, vec![int(0), inv.clone()]) * &bspline_segment(n - 1, p).polynomial;
    let weight = Poly::new(Var::Omega, vec![q(n as i64 + 1) * &inv, -inv]);
    let shifted = bspline_segment(n - 1, p - 1).polynomial.shift(&int(-1));
    Ok(&left + &(&weight * &shifted))
}

/// `A_{n,p} = n! N_{0,n}(p;p)`.
pub fn eulerian_from_spline(n: usize) -> EulerianRow {
    let nf = q(factorial(n));
    let entries = (0..=n as i64)
        .map(|p| {
            let v = bspline_segment(n, p).polynomial.eval(&int(p)) * &nf;
            assert!(v.is_integer(), "spline values at knots times n! are integers");
            v.to_integer()
        })
        .collect();
    EulerianRow { n, entries }
}

/// `𝔅_{n+1}(ρ) = (-1)^n (n+1)! / (ρ-1)^{n+1} Σ_j N_{0,n}(j;j) ρ^j`.
pub fn apostol_from_spline(n: usize) -> RatFunc {
    let coeffs = (0..=n as i64)
        .map(|j| bspline_segment(n, j).polynomial.eval(&int(j)))
        .collect();
    let sum = RatFunc::from_poly(Poly::new(Var::Rho, coeffs));
    let rm1 = RatFunc::x(Var::Rho) - RatFunc::one();
    let c = signed(n, q(factorial(n + 1)));
    sum.scale(&c) / Ring::pow(&rm1, n + 1)
}
