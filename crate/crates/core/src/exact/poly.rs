use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ratfunc::RatFunc;
use super::rational::{Field, Rational, Ring};

/// Name of a polynomial indeterminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// Spline / Bernstein / Apostol-polynomial argument.
    Omega,
    /// Apostol and Eulerian parameter.
    Rho,
    /// Euler-Frobenius parameter.
    Phi,
    /// Geometric-polynomial argument.
    W,
    /// Series variable.
    T,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::Omega => "ω",
            Var::Rho => "ρ",
            Var::Phi => "φ",
            Var::W => "w",
            Var::T => "t",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Dense univariate polynomial, coefficient `i` multiplying `var^i`.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has an
/// empty coefficient vector and [`Poly::degree`] returns `None` for it.
/// Constants compare equal regardless of the indeterminate they are tagged
/// with; non-constant polynomials in different indeterminates never do.
#[derive(Clone, Debug)]
pub struct Poly<C = Rational> {
    var: Var,
    coeffs: Vec<C>,
}

/// Polynomial in ω whose coefficients are rational functions of ρ (or φ).
pub type BiPoly = Poly<RatFunc>;

impl<C: Ring> Poly<C> {
    pub fn new(var: Var, mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { var, coeffs }
    }

    pub fn zero_in(var: Var) -> Self {
        Self { var, coeffs: Vec::new() }
    }

    pub fn constant_in(var: Var, c: C) -> Self {
        Self::new(var, vec![c])
    }

    /// The identity polynomial `var`.
    pub fn x(var: Var) -> Self {
        Self::new(var, vec![C::zero(), C::one()])
    }

    /// `c * var^k`.
    pub fn monomial(var: Var, c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k];
        coeffs.push(c);
        Self::new(var, coeffs)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// `None` stands for the degree of the zero polynomial (negative infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn scale_by(&self, c: &C) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|a| a.scale(q)).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::constant_in(self.var, C::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc.with_var(self.var)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Rational::from_integer(k.into())))
            .collect();
        Self::new(self.var, coeffs)
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `self(g)`; the result lives in `g`'s indeterminate.
    pub fn compose(&self, g: &Poly<C>) -> Poly<C> {
        let mut acc = Poly::zero_in(g.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Poly::constant_in(g.var, c.clone());
        }
        acc.with_var(g.var)
    }

    /// `self(var + a)`.
    pub fn shift(&self, a: &C) -> Self {
        self.compose(&Poly::new(self.var, vec![a.clone(), C::one()]))
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.var, self.coeffs.iter().map(f).collect())
    }

    fn joined_var(&self, other: &Self) -> Var {
        if self.is_constant() {
            other.var
        } else if other.is_constant() {
            self.var
        } else {
            assert_eq!(
                self.var, other.var,
                "arithmetic between polynomials in different indeterminates"
            );
            self.var
        }
    }
}

impl Poly<Rational> {
    /// Embeds a rational polynomial into a larger coefficient ring.
    pub fn lift<D: Ring>(&self) -> Poly<D> {
        self.map(D::from_rational)
    }
}

impl<C: Field> Poly<C> {
    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lead = divisor.leading().expect("division by the zero polynomial");
        let lead_inv = lead.try_inv().expect("leading coefficient is not a unit");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero_in(self.var), self.clone());
        }
        let mut quot = vec![C::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * dc.clone();
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        let var = self.joined_var(divisor);
        (Self::new(var, quot), Self::new(var, rem))
    }

    /// Scales so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) if !l.is_one() => {
                let inv = l.try_inv().expect("leading coefficient is not a unit");
                self.scale_by(&inv)
            }
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }
}

impl<C: Ring> PartialEq for Poly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.var == other.var || self.is_constant())
    }
}

impl<'a, C: Ring> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        let var = self.joined_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::new(var, coeffs)
    }
}

impl<'a, C: Ring> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        let var = self.joined_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::new(var, coeffs)
    }
}

impl<'a, C: Ring> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        let var = self.joined_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero_in(var);
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(var, out)
    }
}

impl<C: Ring> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::new(self.var, self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<C: Ring> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<C: Ring> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Field> Div for Poly<C> {
    type Output = Poly<C>;
    /// Exact quotient; the remainder is discarded.
    fn div(self, rhs: Poly<C>) -> Poly<C> {
        self.div_rem(&rhs).0
    }
}

impl<C: Ring> Zero for Poly<C> {
    fn zero() -> Self {
        Self::zero_in(Var::Omega)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Ring> One for Poly<C> {
    fn one() -> Self {
        Self::constant_in(Var::Omega, C::one())
    }
}

impl<C: Ring> Ring for Poly<C> {
    fn from_rational(q: &Rational) -> Self {
        Self::constant_in(Var::Omega, C::from_rational(q))
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_constant() {
            self.coeffs
                .first()
                .and_then(|c| c.try_inv())
                .map(|c| Self::constant_in(self.var, c))
        } else {
            None
        }
    }

    fn scale(&self, q: &Rational) -> Self {
        Poly::scale(self, q)
    }

    fn pow(&self, k: usize) -> Self {
        Poly::pow(self, k)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c}){}", self.var)?,
                _ => write!(f, "({c}){}^{k}", self.var)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn p(cs: &[i64]) -> Poly {
        Poly::new(Var::Omega, cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn trims_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn constants_ignore_indeterminate() {
        let a = Poly::constant_in(Var::Rho, int(3));
        let b = Poly::constant_in(Var::Omega, int(3));
        assert_eq!(a, b);
        assert_ne!(Poly::<Rational>::x(Var::Rho), Poly::x(Var::Omega));
    }

    #[test]
    #[should_panic(expected = "different indeterminates")]
    fn mixing_indeterminates_panics() {
        let _ = &Poly::<Rational>::x(Var::Rho) + &Poly::x(Var::Omega);
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        let g = p(&[2, 2]).gcd(&p(&[-2, 0, 2]));
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn derivative_compose_shift() {
        let a = p(&[1, 2, 3]);
        assert_eq!(a.derivative(), p(&[2, 6]));
        assert_eq!(a.nth_derivative(3), Poly::zero());
        assert_eq!(p(&[0, 0, 1]).shift(&int(1)), p(&[1, 2, 1]));
        assert_eq!(a.eval(&rat(1, 2)), rat(11, 4));
        assert_eq!(p(&[0, 0, 1]).compose(&p(&[1, 1])), p(&[1, 2, 1]));
    }
}
