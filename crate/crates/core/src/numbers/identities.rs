//! Exact two-sided witnesses for the identities linking the number families.
//!
//! Each function evaluates both sides independently; `Witness::holds` then
//! compares the canonical forms.

use crate::exact::{
    binomial, binomial_poly, euler_operator, factorial, int, substitute, BiPoly, Poly, RatFunc,
    Rational, Ring, Var,
};
use crate::spline::bernstein_in;
use crate::Witness;

use super::{
    apostol_bernoulli_number, apostol_bernoulli_poly, apostol_euler_poly, eulerian_number,
    eulerian_poly, frobenius_number, geometric_poly, one_minus_rho, rho_minus_one,
    stirling2_table, ApostolMethod,
};

use num_traits::{One, Zero};

fn rho() -> RatFunc {
    RatFunc::x(Var::Rho)
}

fn q(n: impl Into<num_bigint::BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn ratio() -> RatFunc {
    rho() / one_minus_rho()
}

/// `Σ_v C(ω+v-1, n) A_{n,v} = ω^n`.
pub fn worpitzky(n: usize) -> Witness<Poly> {
    let lhs = (0..=n).fold(Poly::zero_in(Var::Omega), |acc, v| {
        let a = q(eulerian_number(n, v).expect("v <= n"));
        &acc + &binomial_poly(Var::Omega, v as i64 - 1, n).scale(&a)
    });
    Witness::new(lhs, Poly::monomial(Var::Omega, int(1), n))
}

/// `A_m(ρ) = Σ_n (ρ/(1-ρ))^n n! (1-ρ)^m S2(m,n)`.
pub fn eulerian_via_stirling(m: usize) -> Witness<RatFunc> {
    let st = stirling2_table(m);
    let r = ratio();
    let scale = Ring::pow(&one_minus_rho(), m);
    let rhs = (0..=m).fold(RatFunc::zero(), |acc, n| {
        acc + r.pow_i(n as i64).scale(&q(factorial(n) * &st[m][n]))
    }) * scale;
    Witness::new(RatFunc::from_poly(eulerian_poly(m)), rhs)
}

/// The Bernstein restatement of [`eulerian_via_stirling`]: `A_m(ρ) = Σ_n n!/C(m,n) B_n^m(ρ) S2(m,n)`.
pub fn eulerian_via_bernstein(m: usize) -> Witness<RatFunc> {
    let st = stirling2_table(m);
    let rhs = (0..=m).fold(Poly::zero_in(Var::Rho), |acc, n| {
        let c = Rational::new(factorial(n) * &st[m][n], binomial(m, n as i64));
        &acc + &bernstein_in(Var::Rho, n as i64, m).scale(&c)
    });
    Witness::new(RatFunc::from_poly(eulerian_poly(m)), RatFunc::from_poly(rhs))
}

/// `A_{n-1}(ρ) = -(1-ρ)^n 𝔅_n(ρ) / n`, for `n >= 1`.
pub fn apostol_eulerian(n: usize) -> Witness<RatFunc> {
    assert!(n >= 1);
    let rhs = -(Ring::pow(&one_minus_rho(), n) * apostol_bernoulli_number(n))
        .scale(&Rational::new(1.into(), (n as i64).into()));
    Witness::new(RatFunc::from_poly(eulerian_poly(n - 1)), rhs)
}

/// `A_n(ρ) = ρ (1-ρ)^n Σ_j C(n,j) H_j(1/ρ)`, for `n >= 1`.
pub fn frobenius_link(n: usize) -> Witness<RatFunc> {
    assert!(n >= 1);
    let inv_rho = rho().recip();
    let sum = (0..=n).fold(RatFunc::zero(), |acc, j| {
        let h = frobenius_number(j)
            .compose(&inv_rho)
            .expect("H_j has its only pole at φ = 1");
        acc + h.scale(&q(binomial(n, j as i64)))
    });
    let rhs = rho() * Ring::pow(&one_minus_rho(), n) * sum;
    Witness::new(RatFunc::from_poly(eulerian_poly(n)), rhs)
}

/// `𝔅_n(ρ) = n/(ρ-1) W_{n-1}(ρ/(1-ρ))`, for `n >= 1`.
pub fn geometric_first(n: usize) -> Witness<RatFunc> {
    assert!(n >= 1);
    let w = substitute(&geometric_poly(n - 1), &ratio());
    let rhs = w.scale(&int(n as i64)) / rho_minus_one();
    Witness::new(apostol_bernoulli_number(n), rhs)
}

/// `𝔅_n(ρ/(1+ρ)) = -n(ρ+1) W_{n-1}(ρ)`, for `n >= 1`.
pub fn geometric_second(n: usize) -> Witness<RatFunc> {
    assert!(n >= 1);
    let arg = rho() / (rho() + RatFunc::one());
    let lhs = apostol_bernoulli_number(n)
        .compose(&arg)
        .expect("ρ/(1+ρ) never equals 1");
    let w = RatFunc::from_poly(geometric_poly(n - 1).with_var(Var::Rho));
    let rhs = -(w * (rho() + RatFunc::one())).scale(&int(n as i64));
    Witness::new(lhs, rhs)
}

/// `-𝔅_{k+1}(ρ)/(k+1) = (ρ d/dρ)^k {1/(1-ρ)}`.
pub fn apostol_derivative(k: usize) -> Witness<RatFunc> {
    let lhs = -apostol_bernoulli_number(k + 1).scale(&Rational::new(1.into(), (k as i64 + 1).into()));
    let rhs = euler_operator(&one_minus_rho().recip(), k);
    Witness::new(lhs, rhs)
}

/// `A_k(ρ) = (1-ρ)^{k+1} (ρ d/dρ)^k {1/(1-ρ)}`.
pub fn eulerian_derivative(k: usize) -> Witness<RatFunc> {
    let rhs = Ring::pow(&one_minus_rho(), k + 1) * euler_operator(&one_minus_rho().recip(), k);
    Witness::new(RatFunc::from_poly(eulerian_poly(k)), rhs)
}

/// `ℰ_n(ω;λ) = -2/(n+1) 𝔅_{n+1}(ω;-λ)`.
pub fn apostol_euler_relation(n: usize) -> Witness<BiPoly> {
    let minus = -rho();
    let b = apostol_bernoulli_poly(n + 1, ApostolMethod::Binomial).expect("binomial route is total");
    let reflected = b.map(|c| c.compose(&minus).expect("ρ ↦ -ρ keeps the denominator nonzero"));
    let rhs = reflected.scale_by(&RatFunc::constant(Rational::new((-2).into(), (n as i64 + 1).into())));
    Witness::new(apostol_euler_poly(n), rhs)
}

/// `A_n(ρ) = ρ Σ_j C(n,j) (1-ρ)^{n-j} A_j(ρ)` for `n >= 1`; the `j = n` term
/// mixes `A_n` into the right side, so the sum is evaluated with the
/// closed-form polynomials.
pub fn eulerian_umbral(n: usize) -> Witness<Poly> {
    assert!(n >= 1);
    let one_minus = Poly::new(Var::Rho, vec![int(1), int(-1)]);
    let sum = (0..=n).fold(Poly::zero_in(Var::Rho), |acc, j| {
        let t = &one_minus.pow(n - j) * &eulerian_poly(j);
        &acc + &t.scale(&q(binomial(n, j as i64)))
    });
    Witness::new(eulerian_poly(n), &Poly::x(Var::Rho) * &sum)
}

/// `α𝔅_n(ω+1;α) - 𝔅_n(ω;α) = nω^{n-1}`.
pub fn apostol_shift(n: usize) -> Witness<BiPoly> {
    let b = apostol_bernoulli_poly(n, ApostolMethod::Binomial).expect("binomial route is total");
    let shifted = b.shift(&RatFunc::one()).scale_by(&rho());
    let lhs = &shifted - &b;
    let rhs = if n == 0 {
        Poly::zero_in(Var::Omega)
    } else {
        Poly::monomial(Var::Omega, RatFunc::constant(int(n as i64)), n - 1)
    };
    Witness::new(lhs, rhs)
}

/// `α𝔅_n(1;α) - 𝔅_n(α) = [n = 1]`, the `ω = 0` case of [`apostol_shift`].
pub fn apostol_shift_at_zero(n: usize) -> Witness<RatFunc> {
    let b = apostol_bernoulli_poly(n, ApostolMethod::Binomial).expect("binomial route is total");
    let lhs = rho() * b.eval(&RatFunc::one()) - apostol_bernoulli_number(n);
    let rhs = if n == 1 { RatFunc::one() } else { RatFunc::zero() };
    Witness::new(lhs, rhs)
}

/// Every construction of `𝔅_n(ω;ρ)` compared against the binomial route.
pub fn apostol_methods(n: usize) -> Vec<(ApostolMethod, Witness<BiPoly>)> {
    let base = apostol_bernoulli_poly(n, ApostolMethod::Binomial).expect("binomial route is total");
    ApostolMethod::ALL
        .into_iter()
        .skip(1)
        .filter_map(|m| apostol_bernoulli_poly(n, m).ok().map(|p| (m, Witness::new(base.clone(), p))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eulerian_identities() {
        for n in 0..=10 {
            assert!(worpitzky(n).holds(), "worpitzky {n}");
            assert!(eulerian_via_stirling(n).holds(), "stirling form {n}");
            assert!(eulerian_via_bernstein(n).holds(), "bernstein form {n}");
            assert!(eulerian_derivative(n).holds(), "derivative {n}");
        }
        for n in 1..=10 {
            assert!(eulerian_umbral(n).holds(), "umbral {n}");
            assert!(frobenius_link(n).holds(), "frobenius {n}");
        }
    }

    #[test]
    fn apostol_identities() {
        for n in 1..=10 {
            assert!(apostol_eulerian(n).holds(), "eulerian link {n}");
            assert!(geometric_first(n).holds(), "geometric {n}");
            assert!(geometric_second(n).holds(), "shifted geometric {n}");
        }
        for k in 0..=8 {
            assert!(apostol_derivative(k).holds(), "ad {k}");
        }
        for n in 0..=6 {
            assert!(apostol_euler_relation(n).holds(), "relation {n}");
            assert!(apostol_shift(n).holds(), "shift {n}");
            assert!(apostol_shift_at_zero(n).holds(), "shift at zero {n}");
            assert!(apostol_methods(n).iter().all(|(_, w)| w.holds()), "methods {n}");
        }
    }

    #[test]
    fn cap_second_order_value() {
        // A_2(ρ) = ρ + ρ²
        let w = eulerian_via_stirling(2);
        assert_eq!(w.rhs, RatFunc::from_poly(Poly::new(Var::Rho, vec![int(0), int(1), int(1)])));
    }

    #[test]
    fn relation_base_case() {
        let w = apostol_euler_relation(0);
        let expected = RatFunc::constant(int(2)) / (rho() + RatFunc::one());
        assert_eq!(w.rhs, Poly::constant_in(Var::Omega, expected));
    }
}
