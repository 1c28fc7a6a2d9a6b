use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational; always stored reduced with a positive
/// denominator.
pub type Rational = BigRational;

/// Commutative Q-algebra used as a coefficient domain for polynomials and
/// power series.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(q: &Rational) -> Self;

    /// Multiplicative inverse, if this element is a unit.
    fn try_inv(&self) -> Option<Self>;

    fn scale(&self, q: &Rational) -> Self {
        self.clone() * Self::from_rational(q)
    }

    fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {}

impl Ring for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn try_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
}

impl Field for Rational {}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `a / b`; panics when `b == 0`.
pub fn rat(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

/// Parses `"a/b"`, `"a"` or `"-a/b"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad_rational(s))?;
            let d: BigInt = d.trim().parse().map_err(|_| bad_rational(s))?;
            if d.is_zero() {
                return Err(Error::Domain(format!("zero denominator in {s:?}")));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(s.parse().map_err(|_| bad_rational(s))?),
    };
    Ok(parsed)
}

fn bad_rational(s: &str) -> Error {
    Error::Usage(format!("not a rational number: {s:?}"))
}

/// Nearest double, computed without overflowing on large numerators and
/// denominators.
pub fn to_f64(q: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // integer quotient carrying ~64 significant bits, then rescale
    let (n, d) = (q.numer().abs(), q.denom().clone());
    let k = 64 - (n.bits() as i64 - d.bits() as i64);
    let quotient = if k >= 0 { (n << k as usize) / d } else { n / (d << (-k) as usize) };
    let v = quotient.to_f64().unwrap_or(f64::INFINITY) * 2f64.powi(-k as i32);
    if q.is_negative() {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(matches!(parse_rational("1/0"), Err(Error::Domain(_))));
        assert!(matches!(parse_rational("x"), Err(Error::Usage(_))));
    }

    #[test]
    fn zero_is_zero_over_one() {
        let z = rat(0, -5);
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
    }

    #[test]
    fn float_conversion_of_huge_values() {
        let big = Rational::from_integer(BigInt::from(3).pow(700)) / int(2).pow(1100);
        let expected = 700.0 * 3f64.log2() - 1100.0;
        assert!((to_f64(&big).log2() - expected).abs() < 1e-9);
        assert_eq!(to_f64(&rat(-5, 18)), -5.0 / 18.0);
    }
}
