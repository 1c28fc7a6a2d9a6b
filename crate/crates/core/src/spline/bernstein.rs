use crate::exact::{binomial, int, Poly, Rational, Var};

/// `B_d^k(ω) = C(k,d) ω^d (1-ω)^{k-d}`, zero when `d < 0` or `d > k`.
pub fn bernstein(d: i64, k: usize) -> Poly {
    bernstein_in(Var::Omega, d, k)
}

pub fn bernstein_in(var: Var, d: i64, k: usize) -> Poly {
    if d < 0 || d as usize > k {
        return Poly::zero_in(var);
    }
    let d = d as usize;
    let one_minus = Poly::new(var, vec![int(1), int(-1)]);
    let c = Rational::from_integer(binomial(k, d as i64));
    &Poly::monomial(var, c, d) * &one_minus.pow(k - d)
}

/// `B_d^k(ω - j)`.
pub fn bernstein_shifted(d: i64, k: usize, j: i64) -> Poly {
    bernstein(d, k).shift(&int(-j))
}
