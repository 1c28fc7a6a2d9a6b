use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{binomial, Poly, Rational};
use crate::numbers::{bernoulli_numbers, euler_numbers, frobenius_numbers_in};

/// `v_p` of a rational; zero has infinite valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

pub fn padic_valuation(q: &Rational, p: u64) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinite;
    }
    let p = BigInt::from(p);
    Valuation::Finite(int_valuation(q.numer(), &p) - int_valuation(q.denom(), &p))
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// One level of a truncated p-adic integral compared with its limit.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PadicApprox {
    pub p: u64,
    pub m: u32,
    #[serde(serialize_with = "as_text")]
    pub value: Rational,
    #[serde(serialize_with = "as_text")]
    pub target: Rational,
    pub distance_valuation: Valuation,
}

fn as_text<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

impl PadicApprox {
    pub fn new(p: u64, m: u32, value: Rational, target: Rational) -> Self {
        let distance_valuation = padic_valuation(&(&value - &target), p);
        Self { p, m, value, target, distance_valuation }
    }
}

/// Bit budget for `N^{deg+1}`, `N = p^m`, in the closed-form sums.
const MAX_BITS: u64 = 1 << 22;
/// Largest `p^m` summed term by term.
pub const DIRECT_LIMIT: u64 = 1 << 20;

fn check_integrand(f: &Poly, p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let pb = BigInt::from(p);
    if f.coeffs().iter().any(|c| c.denom().is_multiple_of(&pb)) {
        return Err(Error::Domain(format!("integrand has a coefficient denominator divisible by {p}")));
    }
    Ok(())
}

fn level(p: u64, m: u32, deg: usize) -> Result<BigInt> {
    let bits = (64 - p.leading_zeros()) as u64 * m as u64 * (deg as u64 + 1);
    if bits > MAX_BITS {
        return Err(Error::Resource(format!("level {p}^{m} is too large for exact summation")));
    }
    Ok(BigInt::from(p).pow(m))
}

/// `Σ_{v<N} v^k` for `k = 0..=deg`, by Faulhaber's formula.
fn power_sums(n: &BigInt, deg: usize) -> Vec<Rational> {
    let b = bernoulli_numbers(deg);
    let nq = Rational::from_integer(n.clone());
    (0..=deg)
        .map(|k| {
            let s: Rational = (0..=k)
                .map(|j| {
                    let c = Rational::from_integer(binomial(k + 1, j as i64)) * &b[j];
                    c * num_traits::pow(nq.clone(), k + 1 - j)
                })
                .sum();
            s / Rational::from_integer(BigInt::from(k + 1))
        })
        .collect()
}

/// `p^{-m} Σ_{v<p^m} f(v)`.
pub fn volkenborn_truncated(f: &Poly, p: u64, m: u32) -> Result<Rational> {
    check_integrand(f, p)?;
    let deg = f.degree().unwrap_or(0);
    let n = level(p, m, deg)?;
    let sums = power_sums(&n, deg);
    let total: Rational = f.coeffs().iter().zip(&sums).map(|(c, s)| c * s).sum();
    Ok(total / Rational::from_integer(n))
}

/// Term-by-term version of [`volkenborn_truncated`] for small levels.
pub fn volkenborn_direct(f: &Poly, p: u64, m: u32) -> Result<Rational> {
    check_integrand(f, p)?;
    let n = direct_count(p, m)?;
    let total: Rational = (0..n).map(|v| f.eval(&Rational::from_integer(v.into()))).sum();
    Ok(total / Rational::from_integer(n.into()))
}

fn direct_count(p: u64, m: u32) -> Result<u64> {
    p.checked_pow(m)
        .filter(|&n| n <= DIRECT_LIMIT)
        .ok_or_else(|| Error::Resource(format!("{p}^{m} terms exceed the direct-summation limit")))
}

fn check_odd(p: u64) -> Result<()> {
    if p == 2 {
        return Err(Error::Domain("the fermionic sum needs an odd prime".into()));
    }
    Ok(())
}

/// `Σ_{v<p^m} (-1)^v f(v)` for odd `p`, via Euler polynomials:
/// for odd `N` the sum of `(-1)^v v^k` is `(E_k(0) + E_k(N))/2`.
pub fn fermionic_truncated(f: &Poly, p: u64, m: u32) -> Result<Rational> {
    check_odd(p)?;
    check_integrand(f, p)?;
    let deg = f.degree().unwrap_or(0);
    let n = level(p, m, deg)?;
    let e = euler_numbers(deg);
    let nq = Rational::from_integer(n);
    let mut total = Rational::zero();
    for (k, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // E_k(N) = Σ_j C(k,j) E_j N^{k-j}
        let at_n: Rational = (0..=k)
            .map(|j| Rational::from_integer(binomial(k, j as i64)) * &e[j] * num_traits::pow(nq.clone(), k - j))
            .sum();
        total += c * (&e[k] + at_n) / Rational::from_integer(2.into());
    }
    Ok(total)
}

pub fn fermionic_direct(f: &Poly, p: u64, m: u32) -> Result<Rational> {
    check_odd(p)?;
    check_integrand(f, p)?;
    let n = direct_count(p, m)?;
    Ok((0..n)
        .map(|v| {
            let y = f.eval(&Rational::from_integer(v.into()));
            if v % 2 == 0 {
                y
            } else {
                -y
            }
        })
        .sum())
}

/// Which truncated integral a sweep refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Integral {
    Volkenborn,
    Fermionic,
}

/// `∫ ω^k` at levels `ms`, measured against `B_k` or `E_k`.
pub fn convergence_sweep(kind: Integral, k: usize, p: u64, ms: impl IntoIterator<Item = u32>) -> Result<Vec<PadicApprox>> {
    let f = Poly::monomial(crate::exact::Var::Omega, Rational::one(), k);
    let target = match kind {
        Integral::Volkenborn => bernoulli_numbers(k).pop().expect("nonempty"),
        Integral::Fermionic => frobenius_numbers_in(-Rational::one(), k)?.pop().expect("nonempty"),
    };
    ms.into_iter()
        .map(|m| {
            let value = match kind {
                Integral::Volkenborn => volkenborn_truncated(&f, p, m)?,
                Integral::Fermionic => fermionic_truncated(&f, p, m)?,
            };
            Ok(PadicApprox::new(p, m, value, target.clone()))
        })
        .collect()
}

/// Writes a sweep as `m,value,valuation` CSV rows.
pub fn write_sweep_csv<W: std::io::Write>(rows: &[PadicApprox], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Resource(e.to_string());
    w.write_record(["m", "value", "valuation"]).map_err(io)?;
    for r in rows {
        w.write_record([r.m.to_string(), r.value.to_string(), r.distance_valuation.to_string()])
            .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Resource(e.to_string()))
}

/// Strictly increasing finite valuations, with an exact hit allowed anywhere.
pub fn strictly_improving(rows: &[PadicApprox]) -> bool {
    rows.windows(2).all(|w| match (w[0].distance_valuation, w[1].distance_valuation) {
        (Valuation::Finite(a), Valuation::Finite(b)) => b > a,
        (_, Valuation::Infinite) => true,
        (Valuation::Infinite, Valuation::Finite(_)) => false,
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, Var};

    fn mono(k: usize) -> Poly {
        Poly::monomial(Var::Omega, int(1), k)
    }

    #[test]
    fn valuations() {
        assert_eq!(padic_valuation(&rat(9, 2), 3), Valuation::Finite(2));
        assert_eq!(padic_valuation(&rat(-1, 2), 2), Valuation::Finite(-1));
        assert_eq!(padic_valuation(&int(0), 5), Valuation::Infinite);
        assert!(Valuation::Finite(100) < Valuation::Infinite);
    }

    #[test]
    fn volkenborn_examples() {
        for m in 1..5 {
            assert_eq!(volkenborn_truncated(&mono(0), 7, m).unwrap(), int(1));
            let n = 3i64.pow(m);
            let v = volkenborn_truncated(&mono(1), 3, m).unwrap();
            assert_eq!(v, rat(n - 1, 2));
            assert_eq!(padic_valuation(&(v - rat(-1, 2)), 3), Valuation::Finite(m as i64));
        }
        let sweep = convergence_sweep(Integral::Volkenborn, 2, 2, 2..=8).unwrap();
        assert!(strictly_improving(&sweep));
    }

    #[test]
    fn closed_forms_match_direct_sums() {
        let f = Poly::new(Var::Omega, vec![rat(1, 11), int(-3), int(0), rat(5, 13), int(1)]);
        for (p, m) in [(3, 1), (3, 3), (5, 2), (7, 2)] {
            assert_eq!(volkenborn_truncated(&f, p, m).unwrap(), volkenborn_direct(&f, p, m).unwrap());
            assert_eq!(fermionic_truncated(&f, p, m).unwrap(), fermionic_direct(&f, p, m).unwrap());
        }
        assert_eq!(volkenborn_truncated(&f, 2, 6).unwrap(), volkenborn_direct(&f, 2, 6).unwrap());
    }

    #[test]
    fn fermionic_examples() {
        assert_eq!(fermionic_truncated(&mono(0), 3, 2).unwrap(), int(1));
        assert_eq!(fermionic_truncated(&mono(1), 3, 1).unwrap(), int(1));
        assert_eq!(fermionic_truncated(&mono(1), 3, 2).unwrap(), int(4));
        assert!(matches!(fermionic_truncated(&mono(1), 2, 2), Err(Error::Domain(_))));
        let sweep = convergence_sweep(Integral::Fermionic, 3, 3, 1..=6).unwrap();
        assert_eq!(sweep[0].target, rat(1, 4));
        assert!(strictly_improving(&sweep));
    }

    #[test]
    fn convergence_grids() {
        for k in 0..=6 {
            for p in [2, 3, 5] {
                let rows = convergence_sweep(Integral::Volkenborn, k, p, 2..=8).unwrap();
                assert!(strictly_improving(&rows), "volkenborn k={k} p={p}");
            }
            for p in [3, 5] {
                let rows = convergence_sweep(Integral::Fermionic, k, p, 1..=6).unwrap();
                assert!(strictly_improving(&rows), "fermionic k={k} p={p}");
            }
        }
    }

    #[test]
    fn integrand_checks() {
        let f = Poly::new(Var::Omega, vec![rat(1, 3)]);
        assert!(matches!(volkenborn_truncated(&f, 3, 2), Err(Error::Domain(_))));
        assert!(matches!(volkenborn_truncated(&mono(1), 4, 2), Err(Error::Domain(_))));
        assert!(matches!(volkenborn_truncated(&mono(8), 5, 1 << 20), Err(Error::Resource(_))));
        assert!(matches!(volkenborn_direct(&mono(1), 5, 12), Err(Error::Resource(_))));
    }

    #[test]
    fn csv_export() {
        let rows = convergence_sweep(Integral::Volkenborn, 1, 3, 1..=2).unwrap();
        let mut buf = Vec::new();
        write_sweep_csv(&rows, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "m,value,valuation\n1,1,1\n2,4,2\n");
    }
}
