use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{Poly, Var};
use super::rational::{Field, Rational, Ring};
use crate::error::{domain, Result};

/// Reduced quotient of two rational polynomials.
///
/// The denominator is nonzero and monic and shares no factor with the
/// numerator, so two rational functions are equal exactly when their stored
/// parts are equal. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Normalizing constructor.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return domain("rational function with zero denominator");
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        let var = if den.is_constant() { num.var() } else { den.var() };
        if num.is_zero() {
            return Self {
                num: Poly::zero_in(var),
                den: Poly::constant_in(var, Rational::one()),
            };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        let inv = lead.recip();
        Self {
            num: num.scale(&inv).with_var(var),
            den: den.scale(&inv).with_var(var),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        let var = p.var();
        Self { num: p, den: Poly::constant_in(var, Rational::one()) }
    }

    pub fn constant(q: Rational) -> Self {
        Self::from_poly(Poly::constant_in(Var::Rho, q))
    }

    /// The indeterminate itself, as a rational function.
    pub fn x(var: Var) -> Self {
        Self::from_poly(Poly::x(var))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn var(&self) -> Var {
        if self.den.is_constant() {
            self.num.var()
        } else {
            self.den.var()
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The polynomial this function equals, if its denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// The constant this function equals, if it is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.is_polynomial() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return domain(format!("{} = {x} is a pole", self.var()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// `self(g)`, living in `g`'s indeterminate.
    pub fn compose(&self, g: &RatFunc) -> Result<RatFunc> {
        let n = substitute(&self.num, g);
        let d = substitute(&self.den, g);
        if d.is_zero() {
            return domain("composition sends the denominator to zero");
        }
        Ok(n / d)
    }

    pub fn derivative(&self) -> RatFunc {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        Self::reduce(num, den)
    }

    pub fn pow_i(&self, k: i64) -> RatFunc {
        if k >= 0 {
            Ring::pow(self, k as usize)
        } else {
            Ring::pow(&self.recip(), k.unsigned_abs() as usize)
        }
    }

    /// Panics on zero.
    pub fn recip(&self) -> RatFunc {
        assert!(!self.is_zero(), "reciprocal of the zero rational function");
        Self::reduce(self.den.clone(), self.num.clone())
    }
}

/// Re-derives the canonical representative of `num / den`.
pub fn normalize(num: &Poly, den: &Poly) -> Result<RatFunc> {
    RatFunc::new(num.clone(), den.clone())
}

/// `f(g)` for a rational-coefficient polynomial `f`.
pub fn substitute(f: &Poly, g: &RatFunc) -> RatFunc {
    f.coeffs()
        .iter()
        .rev()
        .fold(RatFunc::zero(), |acc, c| acc * g.clone() + RatFunc::constant(c.clone()))
}

/// `(x d/dx)^k f`, where `x` is `f`'s indeterminate.
pub fn euler_operator(f: &RatFunc, k: usize) -> RatFunc {
    let x = RatFunc::x(f.var());
    (0..k).fold(f.clone(), |g, _| x.clone() * g.derivative())
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den);
        }
        let g = self.den.gcd(&rhs.den);
        let a_cof = self.den.div_rem(&g).0;
        let b_cof = rhs.den.div_rem(&g).0;
        let num = &(&self.num * &b_cof) + &(&rhs.num * &a_cof);
        let den = &self.den * &b_cof;
        RatFunc::reduce(num, den)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + (-rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // cross-cancel before multiplying keeps the final gcd small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (an, bd) = if g1.is_constant() {
            (self.num, rhs.den)
        } else {
            (self.num.div_rem(&g1).0, rhs.den.div_rem(&g1).0)
        };
        let (bn, ad) = if g2.is_constant() {
            (rhs.num, self.den)
        } else {
            (rhs.num.div_rem(&g2).0, self.den.div_rem(&g2).0)
        };
        let num = &an * &bn;
        let den = &ad * &bd;
        let lead = den.leading().expect("nonzero").recip();
        let var = if den.is_constant() { num.var() } else { den.var() };
        RatFunc { num: num.scale(&lead).with_var(var), den: den.scale(&lead).with_var(var) }
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        self * rhs.recip()
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::constant(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::constant(Rational::one())
    }
}

impl Ring for RatFunc {
    fn from_rational(q: &Rational) -> Self {
        RatFunc::constant(q.clone())
    }

    fn try_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(q), den: self.den.clone() }
    }
}

impl Field for RatFunc {}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
