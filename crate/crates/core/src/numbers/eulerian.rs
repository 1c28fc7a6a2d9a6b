use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, Poly, Rational, Var};

/// Largest `n` accepted by [`eulerian_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 9;

/// Row `A_{n,0..=n}` of Eulerian numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianRow {
    pub n: usize,
    pub entries: Vec<BigInt>,
}

impl EulerianRow {
    pub fn sum(&self) -> BigInt {
        self.entries.iter().sum()
    }

    /// Checks `A_{n,0} = 0` (n >= 1), the palindrome `A_{n,j} = A_{n,n+1-j}`
    /// and the row sum `n!`.
    pub fn satisfies_invariants(&self) -> bool {
        let n = self.n;
        if self.entries.len() != n + 1 || self.sum() != factorial(n) {
            return false;
        }
        if n == 0 {
            return true;
        }
        self.entries[0].is_zero() && (1..=n).all(|j| self.entries[j] == self.entries[n + 1 - j])
    }
}

/// `A_{n,j} = Σ_{v=0}^{j} (-1)^v C(n+1, v) (j - v)^n`.
pub fn eulerian_number(n: usize, j: usize) -> Result<BigInt> {
    if j > n {
        return Err(Error::Domain(format!("Eulerian number A({n},{j}) needs j <= n")));
    }
    let mut acc = BigInt::zero();
    for v in 0..=j {
        let term = binomial(n + 1, v as i64) * BigInt::from(j - v).pow(n as u32);
        if v % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

pub fn eulerian_row(n: usize) -> EulerianRow {
    let entries = (0..=n).map(|j| eulerian_number(n, j).expect("j <= n")).collect();
    EulerianRow { n, entries }
}

/// Counts permutations of `{1..n}` by the number of adjacent increases, the
/// first element always counted as one.
pub fn eulerian_bruteforce(n: usize) -> Result<EulerianRow> {
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::Resource(format!(
            "brute-force enumeration of {n}! permutations exceeds n = {BRUTEFORCE_LIMIT}"
        )));
    }
    let mut counts = vec![0u64; n + 1];
    if n == 0 {
        counts[0] = 1;
    } else {
        for perm in (1..=n).permutations(n) {
            let rises = perm.windows(2).filter(|w| w[0] < w[1]).count();
            counts[1 + rises] += 1;
        }
    }
    Ok(EulerianRow { n, entries: counts.into_iter().map(BigInt::from).collect() })
}

/// `A_n(ρ) = Σ_j A_{n,j} ρ^j`; `A_0 = 1` and `A_n(ρ)` is divisible by `ρ` for n >= 1.
pub fn eulerian_poly(n: usize) -> Poly {
    let row = eulerian_row(n);
    Poly::new(Var::Rho, row.entries.into_iter().map(Rational::from_integer).collect())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn row(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn closed_form_values() {
        for n in 1..8 {
            assert!(eulerian_number(n, 0).unwrap().is_zero());
        }
        assert_eq!(eulerian_number(3, 2).unwrap(), BigInt::from(4));
        assert_eq!(eulerian_number(4, 2).unwrap(), BigInt::from(11));
        assert_eq!(eulerian_row(4).entries, row(&[0, 1, 11, 11, 1]));
        assert!(eulerian_number(3, 4).is_err());
    }

    #[test]
    fn bruteforce_small_rows() {
        assert_eq!(eulerian_bruteforce(1).unwrap().entries, row(&[0, 1]));
        assert_eq!(eulerian_bruteforce(3).unwrap().entries, row(&[0, 1, 4, 1]));
        assert_eq!(eulerian_bruteforce(4).unwrap().entries[2], BigInt::from(11));
        assert_eq!(eulerian_bruteforce(0).unwrap().entries, row(&[1]));
        assert!(matches!(eulerian_bruteforce(10), Err(Error::Resource(_))));
    }

    #[test]
    fn rows_satisfy_invariants() {
        for n in 0..=10 {
            assert!(eulerian_row(n).satisfies_invariants(), "row {n}");
        }
    }

    #[test]
    fn polynomials() {
        assert_eq!(eulerian_poly(0), Poly::constant_in(Var::Rho, int(1)));
        assert_eq!(eulerian_poly(1), Poly::x(Var::Rho));
        let a4 = Poly::new(Var::Rho, vec![int(0), int(1), int(11), int(11), int(1)]);
        assert_eq!(eulerian_poly(4), a4);
    }
}
