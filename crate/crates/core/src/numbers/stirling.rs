use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{binomial, factorial, Poly, Rational, Var};

/// Rows `0..=n` of the Stirling triangle of the second kind, built from
/// `S2(n, k) = k S2(n-1, k) + S2(n-1, k-1)`.
pub fn stirling2_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let mut row = vec![BigInt::zero(); m + 1];
        for (k, slot) in row.iter_mut().enumerate().skip(1) {
            let keep = prev.get(k).map(|s| s * BigInt::from(k)).unwrap_or_default();
            *slot = keep + &prev[k - 1];
        }
        rows.push(row);
    }
    rows
}

pub fn stirling2(n: usize, c: usize) -> BigInt {
    if c > n {
        return BigInt::zero();
    }
    stirling2_table(n)[n][c].clone()
}

/// Array polynomial `S_c^n(ω) = Σ_k C(n,k) S2(k,c) ω^{n-k}`.
pub fn array_poly(c: usize, n: usize) -> Poly {
    let table = stirling2_table(n);
    let coeffs = (0..=n)
        .map(|deg| {
            let k = n - deg;
            let s = table[k].get(c).cloned().unwrap_or_default();
            Rational::from_integer(binomial(n, k as i64) * s)
        })
        .collect();
    Poly::new(Var::Omega, coeffs)
}

/// Geometric polynomial `W_n(w) = Σ_j j! S2(n,j) w^j`.
pub fn geometric_poly(n: usize) -> Poly {
    let row = &stirling2_table(n)[n];
    let coeffs = row
        .iter()
        .enumerate()
        .map(|(j, s)| Rational::from_integer(factorial(j) * s))
        .collect();
    Poly::new(Var::W, coeffs)
}
