use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial, int, to_f64, Rational};
use crate::numbers::{apostol_euler_numbers_in, y1};

/// Default tolerance of [`laplace_series_check`].
pub const LAPLACE_TOL: f64 = 1e-10;
/// Default tolerance of [`bernstein_series_check`].
pub const BERNSTEIN_TOL: f64 = 1e-9;
/// Hard cap on the number of terms any series evaluation may use.
pub const MAX_TERMS: usize = 100_000;

/// Outcome of a floating-point comparison between a truncated series and
/// its closed form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesEvalReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub terms: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_error: f64,
    pub last_term: f64,
    pub tolerance: f64,
    pub converged: bool,
}

impl SeriesEvalReport {
    fn new(id: &str, params: BTreeMap<String, String>, terms: usize, lhs: f64, rhs: f64, last_term: f64, tolerance: f64) -> Self {
        let abs_error = (lhs - rhs).abs();
        let converged = abs_error <= tolerance && last_term.abs() <= tolerance;
        Self { id: id.into(), params, terms, lhs, rhs, abs_error, last_term, tolerance, converged }
    }
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn signed(k: usize, x: Rational) -> Rational {
    if k % 2 == 0 {
        x
    } else {
        -x
    }
}

fn diverge<T>(msg: String) -> Result<T> {
    Err(Error::Divergence(msg))
}

/// `n! N_{0,n}(x;p)` through the Schoenberg sum; vanishes for `p > n`.
fn scaled_segment(n: usize, p: usize, x: &Rational) -> Rational {
    (0..=p.min(n + 1))
        .map(|j| signed(j, Rational::from_integer(binomial(n + 1, j as i64)) * num_traits::pow(x - int(j as i64), n)))
        .sum()
}

/// `Σ_{n<terms} N_{0,n}(ω+y;p) n!/y^{n+2}` against
/// `Σ_j (-1)^j [(ω+y-j)^j/(j-ω)^{j+1} + [j>=1] (ω+y-j)^{j-1}/(j-ω)^j] / y`.
///
/// Requires `ω < 0 < y` and `|ω+y-j| < y` for `j = 0..=p`.
pub fn laplace_series_check(p: usize, omega: &Rational, y: &Rational, terms: usize, tol: f64) -> Result<SeriesEvalReport> {
    if !omega.is_negative() {
        return diverge(format!("needs j - ω > 0 for every j, which fails at j = 0 for ω = {omega}"));
    }
    if !y.is_positive() {
        return diverge(format!("needs y > 0, got {y}"));
    }
    let x = omega + y;
    for j in 0..=p {
        if (&x - int(j as i64)).abs() >= *y {
            return diverge(format!("needs |ω + y - j| < y, which fails at j = {j}"));
        }
    }
    check_terms(terms)?;
    let mut lhs = 0.0;
    let mut last = 0.0;
    let mut ypow = y * y;
    for n in 0..terms {
        last = to_f64(&(scaled_segment(n, p, &x) / &ypow));
        lhs += last;
        ypow *= y;
    }
    let mut rhs = Rational::zero();
    for j in 0..=p {
        let a = &x - int(j as i64);
        let b = int(j as i64) - omega;
        let mut t = num_traits::pow(a.clone(), j) / num_traits::pow(b.clone(), j + 1);
        if j >= 1 {
            t += num_traits::pow(a, j - 1) / num_traits::pow(b, j);
        }
        rhs += signed(j, t);
    }
    let rhs = to_f64(&(rhs / y));
    let ps = params(&[("p", p.to_string()), ("omega", omega.to_string()), ("y", y.to_string())]);
    Ok(SeriesEvalReport::new("laplace-series", ps, terms, lhs, rhs, last, tol))
}

fn bernstein_value(d: i64, k: usize, x: &Rational) -> Rational {
    if d < 0 || d as usize > k {
        return Rational::zero();
    }
    let d = d as usize;
    Rational::from_integer(binomial(k, d as i64)) * num_traits::pow(x.clone(), d) * num_traits::pow(int(1) - x, k - d)
}

/// `Σ_{n<terms} n! N_{0,n}(ω;p)/(y+1)^{n+1}` against
/// `Σ_{n<terms} (-1)^n Σ_j (B_j^n(ω-j) - B_{j-1}^n(ω-j))/y^{n+1}`.
///
/// Requires `|1+j-ω| < y` and `|ω-j| < y+1` for `j = 0..=p`.
pub fn bernstein_series_check(p: usize, omega: &Rational, y: &Rational, terms: usize, tol: f64) -> Result<SeriesEvalReport> {
    if !y.is_positive() {
        return diverge(format!("needs y > 0, got {y}"));
    }
    let y1 = y + int(1);
    for j in 0..=p {
        let jq = int(j as i64);
        if (int(1) + &jq - omega).abs() >= *y {
            return diverge(format!("needs |1 + j - ω| < y, which fails at j = {j}"));
        }
        if (omega - &jq).abs() >= y1 {
            return diverge(format!("needs |ω - j| < y + 1, which fails at j = {j}"));
        }
    }
    check_terms(terms)?;
    let (mut lhs, mut rhs) = (0.0, 0.0);
    let (mut last_l, mut last_r) = (0.0f64, 0.0f64);
    let (mut ypow, mut y1pow) = (y.clone(), y1.clone());
    for n in 0..terms {
        last_l = to_f64(&(scaled_segment(n, p, omega) / &y1pow));
        let inner: Rational = (0..=p)
            .map(|j| {
                let x = omega - int(j as i64);
                bernstein_value(j as i64, n, &x) - bernstein_value(j as i64 - 1, n, &x)
            })
            .sum();
        last_r = to_f64(&signed(n, inner / &ypow));
        lhs += last_l;
        rhs += last_r;
        ypow *= y;
        y1pow *= &y1;
    }
    let ps = params(&[("p", p.to_string()), ("omega", omega.to_string()), ("y", y.to_string())]);
    let last = last_l.abs().max(last_r.abs());
    Ok(SeriesEvalReport::new("bernstein-series", ps, terms, lhs, rhs, last, tol))
}

fn check_terms(terms: usize) -> Result<()> {
    if terms > MAX_TERMS {
        return Err(Error::Resource(format!("{terms} terms exceed the cap of {MAX_TERMS}")));
    }
    Ok(())
}

/// Smallest term count at which `check` reports an error within `tol`.
pub fn terms_needed(mut check: impl FnMut(usize) -> Result<SeriesEvalReport>, tol: f64, max_terms: usize) -> Result<usize> {
    for terms in 1..=max_terms {
        if check(terms)?.abs_error <= tol {
            return Ok(terms);
        }
    }
    Err(Error::Divergence(format!("no agreement to {tol:e} within {max_terms} terms")))
}

/// `(2/(1-ρ)) Σ_n (-1)^n r^n n! y1(m,n)`, `r = ρ/(1-ρ)`, compared with the exact `ℰ_m(ρ)`.
///
/// The terms are bounded by `E_n = 2 n^m q^n / |1-ρ|` with `q = 2|r|`, so the
/// series is summed only for `q < 1` and stopped once the geometric tail of
/// the envelope drops below `tol/2`.
pub fn apostol_euler_series(m: usize, rho: &Rational, tol: f64) -> Result<SeriesEvalReport> {
    let one_minus = int(1) - rho;
    if one_minus.is_zero() {
        return diverge("the series needs ρ ≠ 1".into());
    }
    let r = rho / &one_minus;
    let q = to_f64(&(r.abs() * int(2)));
    if q >= 1.0 {
        return diverge(format!("needs 2|ρ/(1-ρ)| < 1, got 2|r| = {q}"));
    }
    let lead = 2.0 / to_f64(&one_minus).abs();
    let s = (1.0 + q) / 2.0;
    let mut sum = Rational::zero();
    let mut rpow = Rational::from_integer(1.into());
    let mut last;
    let mut n = 0usize;
    loop {
        if n > MAX_TERMS {
            return Err(Error::Resource(format!("no certified tail within {MAX_TERMS} terms")));
        }
        let coeff = y1(m, n) * Rational::from_integer(crate::exact::factorial(n));
        let t = signed(n, coeff * &rpow);
        last = to_f64(&t) * 2.0 / to_f64(&one_minus);
        sum += t;
        rpow *= &r;
        let nf = n as f64;
        let regime = n >= 1 && ((nf + 1.0) / nf).powi(m as i32) * q <= s;
        if regime || (m == 0 && n >= 1) {
            let env = if q == 0.0 { 0.0 } else { lead * nf.powi(m as i32) * q.powf(nf) };
            if env * s / (1.0 - s) <= tol / 2.0 {
                n += 1;
                break;
            }
        }
        n += 1;
    }
    let lhs = to_f64(&(sum * int(2) / &one_minus));
    let exact = apostol_euler_numbers_in(rho.clone(), m)?.pop().expect("nonempty");
    let ps = params(&[("m", m.to_string()), ("rho", rho.to_string())]);
    Ok(SeriesEvalReport::new("apostol-euler-series", ps, n, lhs, to_f64(&exact), last, tol))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn laplace_geometric_case() {
        let r = laplace_series_check(0, &rat(-1, 2), &int(1), 60, LAPLACE_TOL).unwrap();
        assert!((r.lhs - 2.0).abs() < 1e-12 && (r.rhs - 2.0).abs() < 1e-15);
        assert!(r.converged);
    }

    #[test]
    fn laplace_two_segment_case() {
        let r = laplace_series_check(1, &rat(-1, 2), &int(2), 120, LAPLACE_TOL).unwrap();
        assert!((r.rhs - 5.0 / 9.0).abs() < 1e-15);
        assert!(r.abs_error < 1e-13);
        // Truncation error decays like (3/4)^n.
        let e80 = laplace_series_check(1, &rat(-1, 2), &int(2), 80, LAPLACE_TOL).unwrap().abs_error;
        let e81 = laplace_series_check(1, &rat(-1, 2), &int(2), 81, LAPLACE_TOL).unwrap().abs_error;
        assert!(e81 < e80 && e81 < LAPLACE_TOL && e80 < 2.0 * LAPLACE_TOL);
    }

    #[test]
    fn laplace_domain() {
        let e = laplace_series_check(0, &rat(1, 2), &int(1), 10, LAPLACE_TOL);
        assert!(matches!(e, Err(Error::Divergence(m)) if m.contains("j - ω > 0")));
        let e = laplace_series_check(2, &rat(-1, 2), &int(1), 10, LAPLACE_TOL);
        assert!(matches!(e, Err(Error::Divergence(m)) if m.contains("|ω + y - j| < y")));
    }

    #[test]
    fn bernstein_series_cases() {
        let a = bernstein_series_check(0, &rat(1, 2), &int(1), 80, BERNSTEIN_TOL).unwrap();
        assert!((a.lhs - 2.0 / 3.0).abs() < 1e-12 && (a.rhs - 2.0 / 3.0).abs() < 1e-12);
        let b = bernstein_series_check(1, &rat(3, 2), &int(2), 80, BERNSTEIN_TOL).unwrap();
        assert!((b.lhs - 14.0 / 75.0).abs() < 1e-12);
        assert!(b.converged, "{b:?}");
        let e = bernstein_series_check(1, &rat(3, 2), &rat(1, 4), 80, BERNSTEIN_TOL);
        assert!(matches!(e, Err(Error::Divergence(m)) if m.contains("|1 + j - ω| < y")));
    }

    #[test]
    fn tighter_domain_needs_more_terms() {
        // With y = 1 the margin of |ω + y| < y is -ω.
        let needed = |omega: Rational| {
            terms_needed(|t| laplace_series_check(0, &omega, &int(1), t, 1e-10), 1e-10, 5000).unwrap()
        };
        let far = needed(rat(-1, 2));
        let near = needed(rat(-1, 4));
        assert!(near > far, "{near} vs {far}");
    }

    #[test]
    fn error_decreases_past_burn_in() {
        let errs: Vec<f64> = (10..40)
            .map(|t| laplace_series_check(1, &rat(-1, 2), &int(2), t, LAPLACE_TOL).unwrap().abs_error)
            .collect();
        assert!(errs.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn apostol_euler_examples() {
        let r = apostol_euler_series(1, &rat(1, 5), 1e-12).unwrap();
        assert!((r.lhs + 5.0 / 18.0).abs() <= 1e-12 && r.converged);
        let r = apostol_euler_series(0, &rat(1, 5), 1e-12).unwrap();
        assert!((r.rhs - 5.0 / 3.0).abs() < 1e-15 && r.converged);
        let e = apostol_euler_series(1, &rat(1, 3), 1e-12);
        assert!(matches!(e, Err(Error::Divergence(m)) if m.contains("2|ρ/(1-ρ)| < 1")));
    }

    #[test]
    fn apostol_euler_grid() {
        for m in 0..=6 {
            for rho in [rat(1, 5), rat(1, 4), rat(-1, 10)] {
                let r = apostol_euler_series(m, &rho, 1e-12).unwrap();
                assert!(r.converged, "{r:?}");
            }
        }
    }
}
