//! Truncated expansion of every registered generating function.
//!
//! Each kind is expanded from its defining closed form using only series
//! arithmetic (products, powers and coefficient-recurrence inversion), never
//! from the closed-form coefficient formulas in [`crate::numbers`] or
//! [`crate::spline`], so the two can be checked against each other.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde_json::{json, Value};

use super::combinatorics::factorial;
use super::poly::{BiPoly, Poly, Var};
use super::ratfunc::RatFunc;
use super::rational::{int, parse_rational, Field, Rational, Ring};
use super::render::Canonical;
use super::series::{Convention, PowerSeries};
use crate::error::{Error, Result};

const EXP: Convention = Convention::Exponential;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GfKind {
    /// `(e^t - 1)^c / c!`, coefficients `S2(n, c)`.
    Stirling2,
    /// `e^{tω} (e^t - 1)^c / c!`, coefficients `S_c^n(ω)`.
    Array,
    /// `t / (ρ e^t - 1)`.
    ApostolBernoulliNumbers,
    /// `t e^{tω} / (ρ e^t - 1)`.
    ApostolBernoulli,
    /// `(1 - φ) / (e^t - φ)`.
    FrobeniusNumbers,
    /// `(1 - φ) e^{tω} / (e^t - φ)`.
    Frobenius,
    /// `2 / (ρ e^t + 1)`.
    ApostolEulerNumbers,
    /// `2 e^{tω} / (ρ e^t + 1)`.
    ApostolEuler,
    /// `(1 - ρ) / (1 - ρ e^{t(1-ρ)})`, coefficients `A_n(ρ)`.
    Eulerian,
    /// `(ωt)^d e^{t(1-ω)} / d!`, coefficients `B_d^k(ω)`.
    Bernstein,
    /// Ordinary series whose `t^n` coefficient is the degree-n segment on `[p, p+1]`.
    Goldman,
    /// `t / (e^t - 1)`.
    Bernoulli,
    /// `2 / (e^t + 1)`.
    Euler,
    /// `(e^t + 1)^n / n!`, coefficients `y1(m, n; 1)`.
    Y1,
}

impl GfKind {
    pub const ALL: [GfKind; 14] = [
        GfKind::Stirling2,
        GfKind::Array,
        GfKind::ApostolBernoulliNumbers,
        GfKind::ApostolBernoulli,
        GfKind::FrobeniusNumbers,
        GfKind::Frobenius,
        GfKind::ApostolEulerNumbers,
        GfKind::ApostolEuler,
        GfKind::Eulerian,
        GfKind::Bernstein,
        GfKind::Goldman,
        GfKind::Bernoulli,
        GfKind::Euler,
        GfKind::Y1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GfKind::Stirling2 => "stirling2",
            GfKind::Array => "array",
            GfKind::ApostolBernoulliNumbers => "apostol_bernoulli_numbers",
            GfKind::ApostolBernoulli => "apostol_bernoulli",
            GfKind::FrobeniusNumbers => "frobenius_numbers",
            GfKind::Frobenius => "frobenius",
            GfKind::ApostolEulerNumbers => "apostol_euler_numbers",
            GfKind::ApostolEuler => "apostol_euler",
            GfKind::Eulerian => "eulerian",
            GfKind::Bernstein => "bernstein",
            GfKind::Goldman => "goldman",
            GfKind::Bernoulli => "bernoulli",
            GfKind::Euler => "euler",
            GfKind::Y1 => "y1",
        }
    }
}

impl fmt::Display for GfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GfKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().replace('-', "_");
        GfKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::Usage(format!("unknown generating function {s:?}")))
    }
}

/// Fixed indices and optional numeric parameter values for [`gf_expand`].
///
/// Leaving `rho` / `phi` unset expands symbolically in that parameter.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GfParams {
    pub c: Option<usize>,
    pub d: Option<usize>,
    pub p: Option<i64>,
    pub n: Option<usize>,
    pub rho: Option<Rational>,
    pub phi: Option<Rational>,
}

impl GfParams {
    /// Parses `key=value` pairs; keys are `c`, `d`, `p`, `n`, `rho`, `phi`.
    pub fn parse<'a>(pairs: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut out = GfParams::default();
        for pair in pairs {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| Error::Usage(format!("expected key=value, got {pair:?}")))?;
            let v = v.trim();
            let nat = || -> Result<usize> {
                v.parse().map_err(|_| Error::Usage(format!("{k} must be a natural number")))
            };
            match k.trim() {
                "c" => out.c = Some(nat()?),
                "d" => out.d = Some(nat()?),
                "n" => out.n = Some(nat()?),
                "p" => {
                    out.p = Some(v.parse().map_err(|_| Error::Usage("p must be an integer".into()))?)
                }
                "rho" | "ρ" | "alpha" | "lambda" => out.rho = Some(parse_rational(v)?),
                "phi" | "φ" => out.phi = Some(parse_rational(v)?),
                other => return Err(Error::Usage(format!("unknown parameter {other:?}"))),
            }
        }
        Ok(out)
    }

    fn require<T: Copy>(value: Option<T>, name: &str, kind: GfKind) -> Result<T> {
        value.ok_or_else(|| Error::Usage(format!("{kind} requires parameter {name}")))
    }
}

/// A truncated expansion, in the smallest coefficient domain that holds it.
#[derive(Clone, Debug, PartialEq)]
pub enum Expansion {
    Rational(PowerSeries<Rational>),
    Poly(PowerSeries<Poly>),
    RatFunc(PowerSeries<RatFunc>),
    BiPoly(PowerSeries<BiPoly>),
}

impl Expansion {
    pub fn domain(&self) -> &'static str {
        match self {
            Expansion::Rational(_) => "rational",
            Expansion::Poly(_) => "poly",
            Expansion::RatFunc(_) => "ratfunc",
            Expansion::BiPoly(_) => "bipoly",
        }
    }

    pub fn convention(&self) -> Convention {
        match self {
            Expansion::Rational(s) => s.convention(),
            Expansion::Poly(s) => s.convention(),
            Expansion::RatFunc(s) => s.convention(),
            Expansion::BiPoly(s) => s.convention(),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Expansion::Rational(s) => s.order(),
            Expansion::Poly(s) => s.order(),
            Expansion::RatFunc(s) => s.order(),
            Expansion::BiPoly(s) => s.order(),
        }
    }

    pub fn into_rational(self) -> Option<PowerSeries<Rational>> {
        match self {
            Expansion::Rational(s) => Some(s),
            _ => None,
        }
    }

    pub fn into_poly(self) -> Option<PowerSeries<Poly>> {
        match self {
            Expansion::Poly(s) => Some(s),
            _ => None,
        }
    }

    pub fn into_ratfunc(self) -> Option<PowerSeries<RatFunc>> {
        match self {
            Expansion::RatFunc(s) => Some(s),
            _ => None,
        }
    }

    pub fn into_bipoly(self) -> Option<PowerSeries<BiPoly>> {
        match self {
            Expansion::BiPoly(s) => Some(s),
            _ => None,
        }
    }

    fn coefficients_json(&self) -> Value {
        match self {
            Expansion::Rational(s) => s.coeffs().to_vec().to_json(),
            Expansion::Poly(s) => s.coeffs().to_vec().to_json(),
            Expansion::RatFunc(s) => s.coeffs().to_vec().to_json(),
            Expansion::BiPoly(s) => s.coeffs().to_vec().to_json(),
        }
    }
}

impl Canonical for Expansion {
    fn to_json(&self) -> Value {
        json!({
            "convention": self.convention().name(),
            "domain": self.domain(),
            "order": self.order(),
            "coefficients": self.coefficients_json(),
        })
    }
}

/// Expands generating function `kind` through `t^order`.
pub fn gf_expand(kind: GfKind, params: &GfParams, order: usize) -> Result<Expansion> {
    use GfKind::*;
    Ok(match kind {
        Stirling2 => {
            let c = GfParams::require(params.c, "c", kind)?;
            Expansion::Rational(falling_power(&int(1), c, order)?)
        }
        Array => {
            let c = GfParams::require(params.c, "c", kind)?;
            let base: PowerSeries<Poly> = falling_power(&int(1), c, order)?
                .map(|q| Poly::constant_in(Var::Omega, q.clone()));
            Expansion::Poly(times_exp_omega(base)?)
        }
        ApostolBernoulliNumbers | ApostolBernoulli => {
            let poly = kind == ApostolBernoulli;
            match &params.rho {
                Some(r) => {
                    reject(r, &int(1), "ρ", kind)?;
                    numbers_or_poly(apostol_bernoulli_in(r.clone(), order)?, poly)?
                }
                None => sym_or_bipoly(apostol_bernoulli_in(RatFunc::x(Var::Rho), order)?, poly)?,
            }
        }
        FrobeniusNumbers | Frobenius => {
            let poly = kind == Frobenius;
            match &params.phi {
                Some(f) => {
                    reject(f, &int(1), "φ", kind)?;
                    numbers_or_poly(frobenius_in(f.clone(), order)?, poly)?
                }
                None => sym_or_bipoly(frobenius_in(RatFunc::x(Var::Phi), order)?, poly)?,
            }
        }
        ApostolEulerNumbers | ApostolEuler => {
            let poly = kind == ApostolEuler;
            match &params.rho {
                Some(r) => {
                    reject(r, &int(-1), "ρ", kind)?;
                    numbers_or_poly(apostol_euler_in(r.clone(), order)?, poly)?
                }
                None => sym_or_bipoly(apostol_euler_in(RatFunc::x(Var::Rho), order)?, poly)?,
            }
        }
        Eulerian => match &params.rho {
            Some(r) => {
                reject(r, &int(1), "ρ", kind)?;
                Expansion::Rational(eulerian_in(r.clone(), order)?)
            }
            None => Expansion::RatFunc(eulerian_in(RatFunc::x(Var::Rho), order)?),
        },
        Bernstein => {
            let d = GfParams::require(params.d, "d", kind)?;
            let lead = Poly::monomial(Var::Omega, Rational::one(), d);
            let mut coeffs = vec![Poly::zero_in(Var::Omega); d];
            coeffs.push(lead);
            let prefactor = PowerSeries::new(EXP, order, coeffs);
            let one_minus = Poly::new(Var::Omega, vec![int(1), int(-1)]);
            Expansion::Poly(prefactor.mul(&PowerSeries::exp(EXP, order, &one_minus))?)
        }
        Goldman => {
            let p = GfParams::require(params.p, "p", kind)?;
            if p < 0 {
                return Err(Error::Domain(format!("goldman requires p >= 0, got {p}")));
            }
            Expansion::Poly(goldman_series(p as usize, order)?)
        }
        Bernoulli => {
            let e = PowerSeries::exp(EXP, order + 1, &int(1));
            let quotient = e.sub(&PowerSeries::constant(EXP, order + 1, int(1)))?.divide_by_t()?;
            Expansion::Rational(quotient.inv()?)
        }
        Euler => Expansion::Rational(apostol_euler_in(int(1), order)?),
        Y1 => {
            let n = GfParams::require(params.n, "n", kind)?;
            let base = PowerSeries::exp(EXP, order, &int(1))
                .add(&PowerSeries::constant(EXP, order, int(1)))?;
            let inv_fact = Rational::from_integer(factorial(n)).recip();
            Expansion::Rational(base.pow(n)?.scale_by(&inv_fact))
        }
    })
}

fn reject(value: &Rational, pole: &Rational, name: &str, kind: GfKind) -> Result<()> {
    if value == pole {
        return Err(Error::Domain(format!("{kind} is undefined at {name} = {pole}")));
    }
    Ok(())
}

fn numbers_or_poly(s: PowerSeries<Rational>, poly: bool) -> Result<Expansion> {
    Ok(if poly {
        Expansion::Poly(times_exp_omega(s.map(|q| Poly::constant_in(Var::Omega, q.clone())))?)
    } else {
        Expansion::Rational(s)
    })
}

fn sym_or_bipoly(s: PowerSeries<RatFunc>, poly: bool) -> Result<Expansion> {
    Ok(if poly {
        Expansion::BiPoly(times_exp_omega(s.map(|f| Poly::constant_in(Var::Omega, f.clone())))?)
    } else {
        Expansion::RatFunc(s)
    })
}

/// `(e^{a t} - 1)^c / c!`.
fn falling_power<C: Ring>(a: &C, c: usize, order: usize) -> Result<PowerSeries<C>> {
    let em1 = PowerSeries::exp(EXP, order, a).sub(&PowerSeries::constant(EXP, order, C::one()))?;
    Ok(em1.pow(c)?.scale_by(&C::from_rational(&Rational::from_integer(factorial(c)).recip())))
}

fn times_exp_omega<C: Ring>(s: PowerSeries<Poly<C>>) -> Result<PowerSeries<Poly<C>>> {
    let e = PowerSeries::exp(s.convention(), s.order(), &Poly::x(Var::Omega));
    s.mul(&e)
}

fn apostol_bernoulli_in<C: Field>(rho: C, order: usize) -> Result<PowerSeries<C>> {
    let den = PowerSeries::exp(EXP, order, &C::one())
        .scale_by(&rho)
        .sub(&PowerSeries::constant(EXP, order, C::one()))?;
    PowerSeries::t(EXP, order).div(&den)
}

fn frobenius_in<C: Field>(phi: C, order: usize) -> Result<PowerSeries<C>> {
    let den = PowerSeries::exp(EXP, order, &C::one())
        .sub(&PowerSeries::constant(EXP, order, phi.clone()))?;
    PowerSeries::constant(EXP, order, C::one() - phi).div(&den)
}

fn apostol_euler_in<C: Field>(rho: C, order: usize) -> Result<PowerSeries<C>> {
    let den = PowerSeries::exp(EXP, order, &C::one())
        .scale_by(&rho)
        .add(&PowerSeries::constant(EXP, order, C::one()))?;
    PowerSeries::constant(EXP, order, C::from_rational(&int(2))).div(&den)
}

fn eulerian_in<C: Field>(rho: C, order: usize) -> Result<PowerSeries<C>> {
    let one_minus = C::one() - rho.clone();
    let den = PowerSeries::constant(EXP, order, C::one())
        .sub(&PowerSeries::exp(EXP, order, &one_minus).scale_by(&rho))?;
    PowerSeries::constant(EXP, order, one_minus).div(&den)
}

fn goldman_series(p: usize, order: usize) -> Result<PowerSeries<Poly>> {
    const ORD: Convention = Convention::Ordinary;
    let mut total = PowerSeries::zero(ORD, order);
    for j in 0..=p {
        let a = Poly::new(Var::Omega, vec![int(-(j as i64)), int(1)]);
        let mut pre = vec![Poly::zero_in(Var::Omega); j + 1];
        pre[j] = a.pow(j).scale(&Rational::from_integer(factorial(j)).recip());
        if j >= 1 {
            // the (j-1)! term is absent at j = 0
            pre[j - 1] = a.pow(j - 1).scale(&Rational::from_integer(factorial(j - 1)).recip());
        }
        let term = PowerSeries::new(ORD, order, pre).mul(&PowerSeries::exp(ORD, order, &a))?;
        let sign = if j % 2 == 0 { int(1) } else { int(-1) };
        total = total.add(&term.map(|c| c.scale(&sign)))?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;
    use num_traits::Zero;

    fn rho_minus_one() -> Poly {
        Poly::new(Var::Rho, vec![int(-1), int(1)])
    }

    #[test]
    fn stirling_single_factor() {
        let params = GfParams { c: Some(1), ..Default::default() };
        let s = gf_expand(GfKind::Stirling2, &params, 3).unwrap().into_rational().unwrap();
        assert_eq!(s.coeffs(), &[int(0), int(1), int(1), int(1)]);
    }

    #[test]
    fn goldman_first_interval() {
        let params = GfParams { p: Some(0), ..Default::default() };
        let s = gf_expand(GfKind::Goldman, &params, 5).unwrap().into_poly().unwrap();
        assert_eq!(s.convention(), Convention::Ordinary);
        for n in 0..=5 {
            let expect = Poly::monomial(Var::Omega, Rational::from_integer(factorial(n)).recip(), n);
            assert_eq!(s.coeff(n), &expect);
        }
    }

    #[test]
    fn apostol_bernoulli_low_order() {
        let s = gf_expand(GfKind::ApostolBernoulliNumbers, &GfParams::default(), 2)
            .unwrap()
            .into_ratfunc()
            .unwrap();
        assert!(s.coeff(0).is_zero());
        assert_eq!(s.coeff(1), &RatFunc::new(Poly::constant_in(Var::Rho, int(1)), rho_minus_one()).unwrap());
    }

    #[test]
    fn poles_are_rejected() {
        let at_one = GfParams { rho: Some(int(1)), ..Default::default() };
        let err = gf_expand(GfKind::ApostolBernoulliNumbers, &at_one, 4).unwrap_err();
        assert!(err.to_string().contains("ρ = 1"), "{err}");
        assert!(gf_expand(GfKind::Eulerian, &at_one, 4).is_err());
        let at_m1 = GfParams { rho: Some(int(-1)), ..Default::default() };
        assert!(gf_expand(GfKind::ApostolEuler, &at_m1, 4).is_err());
        let phi1 = GfParams { phi: Some(int(1)), ..Default::default() };
        assert!(gf_expand(GfKind::Frobenius, &phi1, 4).is_err());
    }

    #[test]
    fn numeric_parameter_gives_rational_coefficients() {
        let params = GfParams { rho: Some(rat(1, 5)), ..Default::default() };
        let s = gf_expand(GfKind::ApostolEulerNumbers, &params, 1).unwrap().into_rational().unwrap();
        assert_eq!(s.coeff(0), &rat(5, 3));
        assert_eq!(s.coeff(1), &rat(-5, 18));
    }

    #[test]
    fn parse_kinds_and_params() {
        assert_eq!("apostol-bernoulli".parse::<GfKind>().unwrap(), GfKind::ApostolBernoulli);
        assert!("nope".parse::<GfKind>().is_err());
        let p = GfParams::parse(["c=2", "rho=1/3"]).unwrap();
        assert_eq!(p.c, Some(2));
        assert_eq!(p.rho, Some(rat(1, 3)));
        assert!(GfParams::parse(["zz=1"]).is_err());
        assert!(gf_expand(GfKind::Stirling2, &GfParams::default(), 3).is_err());
    }
}
