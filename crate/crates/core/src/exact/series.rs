use num_bigint::BigInt;
use num_traits::One;

use super::combinatorics::{binomial, factorial};
use super::rational::{Rational, Ring};
use crate::error::{domain, Error, Result};

/// How entry `n` of a [`PowerSeries`] is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// Entry `n` is the coefficient of `t^n / n!`.
    Exponential,
    /// Entry `n` is the coefficient of `t^n`.
    Ordinary,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Exponential => "exponential",
            Convention::Ordinary => "ordinary",
        }
    }
}

/// Power series in `t` truncated after `t^order`.
///
/// Binary operations refuse to mix conventions and truncate to the smaller
/// order of their operands.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<C> {
    convention: Convention,
    coeffs: Vec<C>,
}

impl<C: Ring> PowerSeries<C> {
    /// Pads with zeros or truncates so exactly `order + 1` entries are kept.
    pub fn new(convention: Convention, order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order + 1, C::zero());
        Self { convention, coeffs }
    }

    pub fn zero(convention: Convention, order: usize) -> Self {
        Self::new(convention, order, Vec::new())
    }

    pub fn constant(convention: Convention, order: usize, c: C) -> Self {
        Self::new(convention, order, vec![c])
    }

    /// The series `t`.
    pub fn t(convention: Convention, order: usize) -> Self {
        Self::new(convention, order, vec![C::zero(), C::one()])
    }

    /// `e^{a t}`.
    pub fn exp(convention: Convention, order: usize, a: &C) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = C::one();
        for n in 0..=order {
            let c = match convention {
                Convention::Exponential => power.clone(),
                Convention::Ordinary => power.scale(&Rational::from_integer(factorial(n)).recip()),
            };
            coeffs.push(c);
            power = power * a.clone();
        }
        Self { convention, coeffs }
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    fn check(&self, other: &Self) -> Result<usize> {
        if self.convention != other.convention {
            return Err(Error::ConventionMismatch {
                left: self.convention.name(),
                right: other.convention.name(),
            });
        }
        Ok(self.order().min(other.order()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let order = self.check(other)?;
        let coeffs = (0..=order).map(|n| self.coeffs[n].clone() + other.coeffs[n].clone()).collect();
        Ok(Self { convention: self.convention, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let order = self.check(other)?;
        let coeffs = (0..=order).map(|n| self.coeffs[n].clone() - other.coeffs[n].clone()).collect();
        Ok(Self { convention: self.convention, coeffs })
    }

    pub fn scale_by(&self, c: &C) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a.clone() * c.clone()).collect();
        Self { convention: self.convention, coeffs }
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> PowerSeries<D> {
        PowerSeries { convention: self.convention, coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Cauchy product; binomially weighted for exponential series.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let order = self.check(other)?;
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let weights = self.weights(n);
            let mut acc = C::zero();
            for k in 0..=n {
                let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let term = a.clone() * b.clone();
                acc = acc + scale_int(term, &weights[k]);
            }
            coeffs.push(acc);
        }
        Ok(Self { convention: self.convention, coeffs })
    }

    /// Multiplicative inverse, solved coefficient by coefficient from
    /// `self * inverse = 1`; requires an invertible constant term.
    pub fn inv(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0]
            .try_inv()
            .ok_or_else(|| Error::Domain("series constant term is not invertible".into()))?;
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(c0_inv.clone());
        for n in 1..self.coeffs.len() {
            let weights = self.weights(n);
            let mut acc = C::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc + scale_int(self.coeffs[k].clone() * out[n - k].clone(), &weights[k]);
            }
            out.push(-(acc * c0_inv.clone()));
        }
        Ok(Self { convention: self.convention, coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        let mut acc = Self::constant(self.convention, self.order(), C::one());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `self / t`; the constant term must vanish and one order is lost.
    pub fn divide_by_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return domain("cannot divide a series with nonzero constant term by t");
        }
        if self.order() == 0 {
            return domain("dividing an order-0 series by t leaves nothing");
        }
        let coeffs = match self.convention {
            Convention::Ordinary => self.coeffs[1..].to_vec(),
            // a_{n+1} t^{n+1}/(n+1)! / t = a_{n+1}/(n+1) * t^n/n!
            Convention::Exponential => self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(n, c)| c.scale(&Rational::new(BigInt::one(), BigInt::from(n + 1))))
                .collect(),
        };
        Ok(Self { convention: self.convention, coeffs })
    }

    /// Re-expresses the same series under the other convention.
    pub fn with_convention(&self, convention: Convention) -> Self {
        if convention == self.convention {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                let f = Rational::from_integer(factorial(n));
                match convention {
                    Convention::Ordinary => c.scale(&f.recip()),
                    Convention::Exponential => c.scale(&f),
                }
            })
            .collect();
        Self { convention, coeffs }
    }

    fn weights(&self, n: usize) -> Vec<BigInt> {
        match self.convention {
            Convention::Exponential => (0..=n).map(|k| binomial(n, k as i64)).collect(),
            Convention::Ordinary => vec![BigInt::one(); n + 1],
        }
    }
}

fn scale_int<C: Ring>(c: C, w: &BigInt) -> C {
    if w.is_one() {
        c
    } else {
        c.scale(&Rational::from_integer(w.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn exponential_product_of_exps() {
        let a = PowerSeries::exp(Convention::Exponential, 6, &int(2));
        let b = PowerSeries::exp(Convention::Exponential, 6, &int(3));
        assert_eq!(a.mul(&b).unwrap(), PowerSeries::exp(Convention::Exponential, 6, &int(5)));
        let a = PowerSeries::exp(Convention::Ordinary, 6, &int(2));
        let b = PowerSeries::exp(Convention::Ordinary, 6, &int(3));
        assert_eq!(a.mul(&b).unwrap(), PowerSeries::exp(Convention::Ordinary, 6, &int(5)));
    }

    #[test]
    fn conventions_do_not_mix() {
        let a = PowerSeries::exp(Convention::Exponential, 3, &int(1));
        let b = PowerSeries::exp(Convention::Ordinary, 3, &int(1));
        assert!(matches!(a.mul(&b), Err(Error::ConventionMismatch { .. })));
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn inverse_and_divide_by_t() {
        let e = PowerSeries::exp(Convention::Exponential, 8, &int(1));
        let inv = e.inv().unwrap();
        assert_eq!(inv, PowerSeries::exp(Convention::Exponential, 8, &int(-1)));
        let em1 = e.sub(&PowerSeries::constant(Convention::Exponential, 8, int(1))).unwrap();
        let q = em1.divide_by_t().unwrap();
        assert_eq!(q.order(), 7);
        assert_eq!(q.coeff(2), &rat(1, 3));
        let bern = q.inv().unwrap();
        assert_eq!(bern.coeffs()[..3], [int(1), rat(-1, 2), rat(1, 6)]);
        assert!(e.divide_by_t().is_err());
    }

    #[test]
    fn convention_change_round_trips() {
        let e = PowerSeries::exp(Convention::Exponential, 5, &int(1));
        let o = e.with_convention(Convention::Ordinary);
        assert_eq!(o.coeff(3), &rat(1, 6));
        assert_eq!(o.with_convention(Convention::Exponential), e);
    }
}
