use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{Poly, Var};
use super::rational::{int, Rational};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `n (n-1) ... (n-k+1)`.
pub fn falling_factorial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    ((n - k + 1)..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// `C(n, k)` for signed `k`; zero outside `0 <= k <= n`.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(x + shift, k)` as a polynomial in `x`.
pub fn binomial_poly(var: Var, shift: i64, k: usize) -> Poly {
    let mut acc = Poly::constant_in(var, Rational::one());
    for i in 0..k {
        acc = &acc * &Poly::new(var, vec![int(shift - i as i64), int(1)]);
    }
    acc.scale(&Rational::from_integer(factorial(k)).recip())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(5, 0), BigInt::one());
    }

    #[test]
    fn binomial_poly_matches_integer_binomial() {
        let p = binomial_poly(Var::Omega, -1, 3);
        for x in 1..10i64 {
            let v = p.eval(&int(x));
            assert_eq!(v, Rational::from_integer(binomial((x - 1) as usize, 3)));
        }
    }
}
