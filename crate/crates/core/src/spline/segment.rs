use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, int, Canonical, Poly, Rational, Var};

/// One polynomial piece `N_{0,n}(ω;p)` of the degree-`n` uniform B-spline.
///
/// The polynomial is kept as a global polynomial; `[p, p+1]` is metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct SplineSegment {
    pub degree: usize,
    pub p: i64,
    pub polynomial: Poly,
}

#[derive(Serialize)]
struct SegmentRecord {
    degree: usize,
    p: i64,
    coefficients: serde_json::Value,
    domain: [i64; 2],
}

impl SplineSegment {
    pub fn domain(&self) -> [i64; 2] {
        [self.p, self.p + 1]
    }

    pub fn is_zero(&self) -> bool {
        self.polynomial.is_zero()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rec = SegmentRecord {
            degree: self.degree,
            p: self.p,
            coefficients: self.polynomial.to_json(),
            domain: self.domain(),
        };
        serde_json::to_value(rec).expect("plain record")
    }
}

fn schoenberg_term(n: usize, j: usize) -> Rational {
    let c = Rational::from_integer(binomial(n + 1, j as i64));
    if j % 2 == 0 {
        c
    } else {
        -c
    }
}

/// `N_{0,n}(ω;p) = (1/n!) Σ_{j<=p} (-1)^j C(n+1,j) (ω-j)^n`, zero outside `0 <= p <= n`.
pub fn bspline_segment(n: usize, p: i64) -> SplineSegment {
    let mut poly = Poly::zero_in(Var::Omega);
    if (0..=n as i64).contains(&p) {
        for j in 0..=p as usize {
            let lin = Poly::new(Var::Omega, vec![int(-(j as i64)), int(1)]);
            poly = &poly + &lin.pow(n).scale(&schoenberg_term(n, j));
        }
        poly = poly.scale(&Rational::from_integer(factorial(n)).recip());
    }
    SplineSegment { degree: n, p, polynomial: poly }
}

/// Value of the degree-`n` uniform B-spline at `x >= 0`, summed directly
/// over the active knots.
pub fn bspline_eval(n: usize, x: &Rational) -> Result<Rational> {
    if x.is_negative() {
        return Err(Error::Domain(format!("B-spline evaluation needs x >= 0, got {x}")));
    }
    let p = x.floor().to_integer();
    if p > (n as i64).into() {
        return Ok(Rational::zero());
    }
    let p: usize = p.try_into().expect("bounded by n");
    let mut acc = Rational::zero();
    for j in 0..=p {
        let base = x - int(j as i64);
        acc += schoenberg_term(n, j) * num_traits::pow(base, n);
    }
    Ok(acc / Rational::from_integer(factorial(n)))
}

/// Samples `(x, N_n(x))` on `[start, stop]` with the given positive step.
pub fn bspline_samples(n: usize, start: &Rational, stop: &Rational, step: &Rational) -> Result<Vec<(Rational, Rational)>> {
    if !step.is_positive() {
        return Err(Error::Usage("sampling step must be positive".into()));
    }
    let count = ((stop - start) / step).floor().to_integer();
    if count.is_negative() {
        return Ok(Vec::new());
    }
    let count: usize = count
        .try_into()
        .map_err(|_| Error::Resource("too many sample points".into()))?;
    (0..=count)
        .map(|k| {
            let x = start + step * int(k as i64);
            bspline_eval(n, &x).map(|y| (x, y))
        })
        .collect()
}

/// Writes samples as `x,value` CSV rows under a header.
pub fn write_samples_csv<W: std::io::Write>(samples: &[(Rational, Rational)], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Resource(e.to_string());
    w.write_record(["x", "value"]).map_err(io)?;
    for (x, y) in samples {
        w.write_record([x.to_string(), y.to_string()]).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Resource(e.to_string()))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn printed_segments() {
        assert_eq!(bspline_segment(1, 1).polynomial, Poly::new(Var::Omega, vec![int(2), int(-1)]));
        let two_one = Poly::new(Var::Omega, vec![rat(-3, 2), int(3), int(-1)]);
        assert_eq!(bspline_segment(2, 1).polynomial, two_one);
        assert!(bspline_segment(2, 5).is_zero());
        assert!(bspline_segment(2, -1).is_zero());
        assert_eq!(bspline_segment(4, 0).polynomial, Poly::monomial(Var::Omega, rat(1, 24), 4));
    }

    #[test]
    fn point_values() {
        assert_eq!(bspline_eval(1, &rat(1, 2)).unwrap(), rat(1, 2));
        assert_eq!(bspline_eval(2, &rat(3, 2)).unwrap(), rat(3, 4));
        assert_eq!(bspline_eval(2, &rat(7, 2)).unwrap(), int(0));
        assert!(matches!(bspline_eval(2, &rat(-1, 3)), Err(Error::Domain(_))));
    }

    #[test]
    fn direct_evaluation_matches_segments() {
        for n in 0..=6 {
            for k in 0..=(8 * (n + 2)) {
                let x = rat(k as i64, 8);
                let p = x.floor().to_integer();
                let p: i64 = p.try_into().unwrap();
                let seg = bspline_segment(n, p).polynomial.eval(&x);
                assert_eq!(bspline_eval(n, &x).unwrap(), seg, "n = {n}, x = {x}");
            }
        }
    }

    #[test]
    fn local_support_and_nonnegativity() {
        for n in 0..=8usize {
            for p in -2..=(n as i64 + 3) {
                let seg = bspline_segment(n, p);
                assert_eq!(seg.is_zero(), p < 0 || p > n as i64, "support n = {n}, p = {p}");
                for k in 0..=8 {
                    let x = int(p) + rat(k, 8);
                    assert!(!seg.polynomial.eval(&x).is_negative());
                }
            }
        }
    }

    #[test]
    fn partition_of_unity() {
        for n in 0..=10usize {
            let mut sum = Poly::zero_in(Var::Omega);
            for j in 0..=n as i64 {
                sum = &sum + &bspline_segment(n, j).polynomial.shift(&int(j));
            }
            assert_eq!(sum, Poly::constant_in(Var::Omega, int(1)), "n = {n}");
        }
    }

    #[test]
    fn json_and_csv_export() {
        let v = bspline_segment(1, 1).to_json();
        assert_eq!(v["degree"], 1);
        assert_eq!(v["domain"], serde_json::json!([1, 2]));
        assert_eq!(v["coefficients"], serde_json::json!(["2", "-1"]));
        let samples = bspline_samples(1, &int(0), &int(2), &rat(1, 2)).unwrap();
        assert_eq!(samples.len(), 5);
        let mut buf = Vec::new();
        write_samples_csv(&samples, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("x,value\n0,0\n1/2,1/2\n"));
    }
}
