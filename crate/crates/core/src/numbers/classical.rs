use num_traits::Zero;

use crate::exact::{binomial, factorial, int, Rational};

use super::frobenius_numbers_in;

/// `B_0..=B_n` with `B_1 = -1/2`, from `Σ_{k<=n} C(n+1,k) B_k = 0`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(int(1));
    for m in 1..=n {
        let s: Rational = (0..m)
            .map(|k| &b[k] * Rational::from_integer(binomial(m + 1, k as i64)))
            .sum();
        b.push(-s / Rational::from_integer((m as i64 + 1).into()));
    }
    b
}

pub fn bernoulli(n: usize) -> Rational {
    bernoulli_numbers(n).pop().expect("nonempty")
}

/// `E_n = H_n(-1)`.
pub fn euler_numbers(n: usize) -> Vec<Rational> {
    frobenius_numbers_in(int(-1), n).expect("φ = -1 is regular")
}

pub fn euler_number(n: usize) -> Rational {
    euler_numbers(n).pop().expect("nonempty")
}

/// `y1(m,n) = Σ_h C(n,h) h^m / n!`.
pub fn y1(m: usize, n: usize) -> Rational {
    let mut s = num_bigint::BigInt::zero();
    for h in 0..=n {
        s += binomial(n, h as i64) * num_bigint::BigInt::from(h).pow(m as u32);
    }
    Rational::new(s, factorial(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli_numbers(4), vec![int(1), rat(-1, 2), rat(1, 6), int(0), rat(-1, 30)]);
        for n in (3..20).step_by(2) {
            assert!(bernoulli(n).is_zero());
        }
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn euler_values() {
        assert_eq!(euler_number(0), int(1));
        assert_eq!(euler_number(1), rat(-1, 2));
    }

    #[test]
    fn y1_values() {
        assert_eq!(y1(0, 0), int(1));
        assert_eq!(y1(3, 0), int(0));
        assert_eq!(y1(1, 2), int(2));
        for n in 0..6 {
            assert_eq!(y1(0, n), Rational::new(num_bigint::BigInt::from(1u64 << n), factorial(n)));
        }
    }
}
