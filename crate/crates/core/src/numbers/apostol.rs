use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, int, BiPoly, Field, Poly, RatFunc, Rational, Ring, Var};
use crate::spline::bernstein_in;

use super::frobenius::binomial_convolution;
use super::{array_poly, one_minus_rho, rho_minus_one, sign, stirling2_table};

/// Construction route for `𝔅_n(ω;ρ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ApostolMethod {
    /// Binomial convolution of the numbers `𝔅_j(ρ)` with powers of `ω`.
    Binomial,
    /// Double sum over Bernstein basis values.
    Bernstein,
    /// Array polynomials `S_n^{m-1}(ω)`.
    Array,
    /// Stirling numbers with an explicit binomial expansion in `ω`.
    Stirling,
}

impl ApostolMethod {
    pub const ALL: [ApostolMethod; 4] = [Self::Binomial, Self::Bernstein, Self::Array, Self::Stirling];

    pub fn name(self) -> &'static str {
        match self {
            Self::Binomial => "binomial",
            Self::Bernstein => "bernstein",
            Self::Array => "array",
            Self::Stirling => "stirling",
        }
    }
}

impl fmt::Display for ApostolMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ApostolMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown method `{s}` (expected binomial, bernstein, array or stirling)")))
    }
}

fn rho() -> RatFunc {
    RatFunc::x(Var::Rho)
}

fn q(n: impl Into<num_bigint::BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `ρ / (1 - ρ)`.
fn ratio() -> RatFunc {
    rho() / one_minus_rho()
}

/// `𝔅_n(ρ)` from the closed form
/// `nρ/(ρ-1)^n Σ_s (-1)^s s! ρ^{s-1} (ρ-1)^{n-1-s} S2(n-1,s)`.
pub fn apostol_bernoulli_number(n: usize) -> RatFunc {
    if n == 0 {
        return RatFunc::zero();
    }
    let st = stirling2_table(n - 1);
    let rm1 = rho_minus_one();
    let mut sum = RatFunc::zero();
    for s in 0..n {
        let c = sign(s) * q(factorial(s) * &st[n - 1][s]);
        if c.is_zero() {
            continue;
        }
        let term = rho().pow_i(s as i64 - 1) * Ring::pow(&rm1, n - 1 - s);
        sum = sum + term.scale(&c);
    }
    sum * rho().scale(&int(n as i64)) / Ring::pow(&rm1, n)
}

/// `𝔅_0..=𝔅_n` by the closed form.
pub fn apostol_bernoulli_numbers(n: usize) -> Vec<RatFunc> {
    (0..=n).map(apostol_bernoulli_number).collect()
}

/// `𝔅_n(ω;ρ)` by the requested route. The array and Stirling routes need `n >= 1`.
pub fn apostol_bernoulli_poly(n: usize, method: ApostolMethod) -> Result<BiPoly> {
    match method {
        ApostolMethod::Binomial => Ok(binomial_convolution(n, &apostol_bernoulli_numbers(n))),
        ApostolMethod::Bernstein => Ok(via_bernstein(n)),
        ApostolMethod::Array | ApostolMethod::Stirling if n == 0 => Err(Error::Domain(format!(
            "the {method} construction needs n >= 1"
        ))),
        ApostolMethod::Array => Ok(via_array(n)),
        ApostolMethod::Stirling => Ok(via_stirling(n)),
    }
}

fn via_bernstein(n: usize) -> BiPoly {
    let st = stirling2_table(n.saturating_sub(1));
    let rm1 = rho_minus_one();
    let mut coeffs = vec![RatFunc::zero(); n + 1];
    for j in 1..=n {
        let mut inner = RatFunc::zero();
        for s in 0..j {
            let c = binomial(j - 1, s as i64);
            let s2 = &st[j - 1][s];
            if s2 == &num_bigint::BigInt::from(0) {
                continue;
            }
            let b = RatFunc::from_poly(bernstein_in(Var::Rho, s as i64, j - 1));
            inner = inner + b.scale(&Rational::new(factorial(s) * s2, c));
        }
        let pre = sign(j - 1) * q(binomial(n, j as i64) * num_bigint::BigInt::from(j));
        coeffs[n - j] = inner.scale(&pre) / Ring::pow(&rm1, j);
    }
    Poly::new(Var::Omega, coeffs)
}

fn via_array(m: usize) -> BiPoly {
    let r = ratio();
    let mut sum = Poly::monomial(Var::Omega, RatFunc::one(), m - 1);
    for n in 1..m {
        let w = r.pow_i(n as i64).scale(&q(factorial(n)));
        sum = &sum + &array_poly(n, m - 1).lift::<RatFunc>().scale_by(&w);
    }
    sum.scale_by(&(RatFunc::constant(int(m as i64)) / rho_minus_one()))
}

fn via_stirling(m: usize) -> BiPoly {
    let r = ratio();
    let st = stirling2_table(m - 1);
    let mut coeffs = vec![RatFunc::zero(); m];
    coeffs[m - 1] = RatFunc::one();
    for v in 0..m {
        let inner = (1..=v).fold(RatFunc::zero(), |acc, n| {
            acc + r.pow_i(n as i64).scale(&q(factorial(n) * &st[v][n]))
        });
        let deg = m - 1 - v;
        coeffs[deg] = coeffs[deg].clone() + inner.scale(&q(binomial(m - 1, v as i64)));
    }
    Poly::new(Var::Omega, coeffs).scale_by(&(RatFunc::constant(int(m as i64)) / rho_minus_one()))
}

/// `ℰ_0..=ℰ_n` at `ρ`: `ℰ_0 = 2/(1+ρ)`, `ℰ_n = -ρ Σ_{j<n} C(n,j) ℰ_j / (1+ρ)`.
pub fn apostol_euler_numbers_in<C: Field>(rho: C, n: usize) -> Result<Vec<C>> {
    let inv = (rho.clone() + C::one())
        .try_inv()
        .ok_or_else(|| Error::Domain("Apostol-Euler numbers are undefined at ρ = -1".into()))?;
    let mut e = vec![C::from_rational(&int(2)) * inv.clone()];
    for m in 1..=n {
        let s = (0..m).fold(C::zero(), |acc, j| acc + e[j].scale(&q(binomial(m, j as i64))));
        e.push(-(rho.clone() * s * inv.clone()));
    }
    Ok(e)
}

pub fn apostol_euler_number(n: usize) -> RatFunc {
    apostol_euler_numbers_in(rho(), n).expect("symbolic ρ").pop().expect("nonempty")
}

/// `ℰ_n(ω;ρ) = Σ_j C(n,j) ω^{n-j} ℰ_j(ρ)`.
pub fn apostol_euler_poly(n: usize) -> BiPoly {
    binomial_convolution(n, &apostol_euler_numbers_in(rho(), n).expect("symbolic ρ"))
}

use num_traits::{One, Zero};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gf_expand, rat, GfKind, GfParams};

    fn den(k: usize) -> RatFunc {
        Ring::pow(&rho_minus_one(), k)
    }

    #[test]
    fn closed_form_values() {
        assert!(apostol_bernoulli_number(0).is_zero());
        assert_eq!(apostol_bernoulli_number(1), rho_minus_one().recip());
        assert_eq!(apostol_bernoulli_number(2), rho().scale(&int(-2)) / den(2));
        let three = (rho() * (rho() + RatFunc::one())).scale(&int(3)) / den(3);
        assert_eq!(apostol_bernoulli_number(3), three);
    }

    #[test]
    fn closed_form_matches_series() {
        let s = gf_expand(GfKind::ApostolBernoulliNumbers, &GfParams::default(), 12)
            .unwrap()
            .into_ratfunc()
            .unwrap();
        for n in 0..=12 {
            assert_eq!(&apostol_bernoulli_number(n), s.coeff(n), "n = {n}");
        }
    }

    #[test]
    fn small_polynomials() {
        let p0 = apostol_bernoulli_poly(0, ApostolMethod::Binomial).unwrap();
        assert!(p0.is_zero());
        let p1 = apostol_bernoulli_poly(1, ApostolMethod::Binomial).unwrap();
        assert_eq!(p1, Poly::constant_in(Var::Omega, rho_minus_one().recip()));
        assert!(apostol_bernoulli_poly(0, ApostolMethod::Array).is_err());
        assert!(apostol_bernoulli_poly(0, ApostolMethod::Stirling).is_err());
    }

    #[test]
    fn methods_agree() {
        for n in 0..=8 {
            let base = apostol_bernoulli_poly(n, ApostolMethod::Binomial).unwrap();
            for m in ApostolMethod::ALL {
                if n == 0 && matches!(m, ApostolMethod::Array | ApostolMethod::Stirling) {
                    continue;
                }
                assert_eq!(apostol_bernoulli_poly(n, m).unwrap(), base, "n = {n}, {m}");
            }
        }
    }

    #[test]
    fn method_names_round_trip() {
        for m in ApostolMethod::ALL {
            assert_eq!(m.name().parse::<ApostolMethod>().unwrap(), m);
        }
        assert!(matches!("taylor".parse::<ApostolMethod>(), Err(Error::Usage(_))));
    }

    #[test]
    fn euler_values() {
        let one_plus = rho() + RatFunc::one();
        assert_eq!(apostol_euler_number(0), RatFunc::constant(int(2)) / one_plus.clone());
        assert_eq!(apostol_euler_number(1), rho().scale(&int(-2)) / Ring::pow(&one_plus, 2));
        // ℰ_n(1) are the values E_n(0) of the Euler polynomials.
        let at_one = apostol_euler_numbers_in(int(1), 6).unwrap();
        assert_eq!(at_one, vec![int(1), rat(-1, 2), int(0), rat(1, 4), int(0), rat(-1, 2), int(0)]);
        assert!(apostol_euler_numbers_in(int(-1), 2).is_err());
    }

    #[test]
    fn euler_polynomial_at_unit_parameter() {
        let e1 = apostol_euler_poly(1);
        let at_one = e1.map(|c| RatFunc::constant(c.eval(&int(1)).unwrap()));
        let expected = Poly::new(Var::Omega, vec![RatFunc::constant(rat(-1, 2)), RatFunc::one()]);
        assert_eq!(at_one, expected);
    }
}
