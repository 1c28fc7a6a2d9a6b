use crate::error::{Error, Result};
use crate::exact::{binomial, BiPoly, Field, Poly, RatFunc, Rational, Ring, Var};

/// `H_0..=H_n` at `φ`, from `H_n = Σ_{j<n} C(n,j) H_j / (φ - 1)`.
pub fn frobenius_numbers_in<C: Field>(phi: C, n: usize) -> Result<Vec<C>> {
    let inv = (phi - C::one())
        .try_inv()
        .ok_or_else(|| Error::Domain("Frobenius-Euler numbers are undefined at φ = 1".into()))?;
    let mut h = vec![C::one()];
    for m in 1..=n {
        let s = (0..m).fold(C::zero(), |acc, j| {
            acc + h[j].scale(&Rational::from_integer(binomial(m, j as i64)))
        });
        h.push(s * inv.clone());
    }
    Ok(h)
}

/// `H_n(φ)` as a rational function of `φ`.
pub fn frobenius_number(n: usize) -> RatFunc {
    frobenius_numbers_in(RatFunc::x(Var::Phi), n).expect("symbolic φ").pop().expect("nonempty")
}

/// `H_n(ω;φ) = Σ_j C(n,j) ω^{n-j} H_j(φ)`.
pub fn frobenius_poly(n: usize) -> BiPoly {
    let h = frobenius_numbers_in(RatFunc::x(Var::Phi), n).expect("symbolic φ");
    binomial_convolution(n, &h)
}

/// `Σ_j C(n,j) ω^{n-j} a_j` for a coefficient sequence `a_0..=a_n`.
pub(crate) fn binomial_convolution(n: usize, a: &[RatFunc]) -> BiPoly {
    let coeffs = (0..=n)
        .map(|deg| a[n - deg].scale(&Rational::from_integer(binomial(n, (n - deg) as i64))))
        .collect();
    Poly::new(Var::Omega, coeffs)
}
