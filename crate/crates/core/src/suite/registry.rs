use serde_json::{json, Value};

use crate::analysis::{
    apostol_euler_series, bernstein_series_check, convergence_sweep, epi_check, fermionic_truncated,
    laplace_series_check, padic_valuation, strictly_improving, witt_check,
    Integral, Valuation, WittKind, BERNSTEIN_TOL, LAPLACE_TOL,
};
use crate::exact::{gf_expand, int, rat, Canonical, Expansion, GfKind, GfParams, Poly, Rational, Var};
use crate::numbers::{self, identities as id, ApostolMethod};
use crate::spline::{self, bernstein};
use crate::Witness;

use super::{Check, IdentityCase, Mode, Status};

macro_rules! case {
    ($id:literal, $mode:ident, $range:literal, $desc:literal, $run:expr) => {
        IdentityCase { id: $id, description: $desc, range: $range, mode: Mode::$mode, run: $run }
    };
}

/// All registered identities in their fixed reporting order.
pub fn registry() -> Vec<IdentityCase> {
    vec![
        case!("worpitzky", ExactSymbolic, "0 <= n <= max_n",
            "ω^n expands in the basis C(ω+v-1, n) with Eulerian weights", worpitzky),
        case!("eulerian-permutations", ExactSymbolic, "0 <= n <= min(max_n, 8)",
            "closed-form Eulerian rows equal permutation counts by increases", eulerian_permutations),
        case!("eulerian-row-invariants", ExactSymbolic, "0 <= n <= max_n",
            "Eulerian rows are palindromic with sum n!", eulerian_invariants),
        case!("eulerian-spline", ExactSymbolic, "0 <= n <= max_n",
            "A_{n,p} = n! N_{0,n}(p;p)", eulerian_spline),
        case!("eulerian-stirling", ExactSymbolic, "0 <= m <= max_n",
            "A_m(ρ) = (1-ρ)^m Σ_n n! S2(m,n) (ρ/(1-ρ))^n", eulerian_stirling),
        case!("eulerian-bernstein", ExactSymbolic, "0 <= m <= max_n",
            "A_m(ρ) = Σ_n n!/C(m,n) B_n^m(ρ) S2(m,n)", eulerian_bernstein),
        case!("eulerian-umbral", ExactSymbolic, "1 <= n <= max_n",
            "A_n(ρ) = ρ Σ_j C(n,j) (1-ρ)^{n-j} A_j(ρ)", eulerian_umbral),
        case!("eulerian-euler-operator", ExactSymbolic, "0 <= k <= max_n",
            "A_k(ρ) = (1-ρ)^{k+1} (ρ d/dρ)^k 1/(1-ρ)", eulerian_euler_operator),
        case!("frobenius-eulerian", ExactSymbolic, "1 <= n <= max_n",
            "A_n(ρ) = ρ (1-ρ)^n Σ_j C(n,j) H_j(1/ρ)", frobenius_eulerian),
        case!("apostol-closed-form", ExactSymbolic, "order max_n + 2",
            "the closed form of 𝔅_n(ρ) matches the series t/(ρe^t - 1)", apostol_closed_form),
        case!("apostol-eulerian", ExactSymbolic, "1 <= n <= max_n + 2",
            "A_{n-1}(ρ) = -(1-ρ)^n 𝔅_n(ρ)/n", apostol_eulerian),
        case!("apostol-geometric", ExactSymbolic, "1 <= n <= max_n",
            "𝔅_n(ρ) = n/(ρ-1) W_{n-1}(ρ/(1-ρ))", apostol_geometric),
        case!("apostol-geometric-shifted", ExactSymbolic, "1 <= n <= max_n",
            "𝔅_n(ρ/(1+ρ)) = -n(ρ+1) W_{n-1}(ρ)", apostol_geometric_shifted),
        case!("apostol-euler-operator", ExactSymbolic, "0 <= k <= max_n",
            "-𝔅_{k+1}(ρ)/(k+1) = (ρ d/dρ)^k 1/(1-ρ)", apostol_euler_operator),
        case!("apostol-difference", ExactSymbolic, "0 <= n <= max_n",
            "ρ𝔅_n(ω+1;ρ) - 𝔅_n(ω;ρ) = nω^{n-1}", apostol_difference),
        case!("apostol-difference-at-zero", ExactSymbolic, "0 <= n <= max_n",
            "ρ𝔅_n(1;ρ) - 𝔅_n(ρ) = [n = 1]", apostol_difference_at_zero),
        case!("apostol-constructions", ExactSymbolic, "0 <= n <= max_n",
            "binomial, Bernstein, array and Stirling constructions of 𝔅_n(ω;ρ) agree", apostol_constructions),
        case!("apostol-euler-relation", ExactSymbolic, "0 <= n <= max_n",
            "ℰ_n(ω;λ) = -2/(n+1) 𝔅_{n+1}(ω;-λ)", apostol_euler_relation),
        case!("apostol-spline", ExactSymbolic, "0 <= n <= max_n + 2",
            "𝔅_{n+1}(ρ) = (-1)^n (n+1)!/(ρ-1)^{n+1} Σ_j N_{0,n}(j;j) ρ^j", apostol_spline),
        case!("difference-operator", ExactSymbolic, "1 <= n <= max_n",
            "Σ_j (-1)^{j+1} C(n,j) j A_{j-1}(ρ)/(ρ-1)^j (ρ(ω+1)^{n-j} - ω^{n-j}) = nω^{n-1}", difference_operator),
        case!("witt-bernoulli", ExactSymbolic, "1 <= n <= max_n",
            "the Eulerian-weighted shift sum of Bernoulli numbers equals nB_{n-1}", witt_bernoulli),
        case!("witt-euler", ExactSymbolic, "1 <= n <= max_n",
            "the Eulerian-weighted shift sum of Euler numbers equals nE_{n-1}", witt_euler),
        case!("bspline-routes", ExactSymbolic, "0 <= p <= n <= max_n",
            "Schoenberg, generating-function, Bernstein, Leibniz and de Boor segments agree", bspline_routes),
        case!("bspline-derivative", ExactSymbolic, "0 <= p <= n <= max_n, v <= 4",
            "the Bernstein derivative formula equals symbolic differentiation", bspline_derivative),
        case!("bspline-partition-of-unity", ExactSymbolic, "0 <= n <= max_n",
            "Σ_j N_{0,n}(ω+j;j) = 1", partition_of_unity),
        case!("bspline-local-support", ExactSymbolic, "0 <= n <= max_n, -2 <= p <= n+2",
            "N_{0,n}(ω;p) vanishes exactly when p < 0 or p > n", local_support),
        case!("bspline-nonnegative", ExactSymbolic, "0 <= n <= max_n",
            "segments are nonnegative at eighth points of their interval", nonnegative),
        case!("bernstein-partition-of-unity", ExactSymbolic, "0 <= k <= max_n + 4",
            "Σ_d B_d^k(ω) = 1", bernstein_partition),
        case!("generating-functions", ExactSymbolic, "order max_n",
            "every generating function expands to the closed-form family", generating_functions),
        case!("volkenborn-linear", PadicConvergence, "1 <= m <= 8",
            "v_3 of the distance from the level-m Volkenborn sum of ω to -1/2 is m", volkenborn_linear),
        case!("volkenborn-convergence", PadicConvergence, "k <= min(max_n, 6), p in {2,3,5}, 2 <= m <= 8",
            "Volkenborn sums of ω^k approach B_k with strictly increasing valuation", volkenborn_convergence),
        case!("fermionic-linear", PadicConvergence, "m = 1, 2",
            "fermionic sums of ω at levels 1, 2 are 1 and 4, congruent to -1/2", fermionic_linear),
        case!("fermionic-convergence", PadicConvergence, "k <= min(max_n, 6), p in {3,5}, 1 <= m <= 6",
            "fermionic sums of ω^k approach E_k with strictly increasing valuation", fermionic_convergence),
        case!("laplace-series", NumericSeries, "p <= min(max_n, 3), ω in {-1/2,-1/4}, y in {1,2}",
            "Laplace-transformed segment series equals its closed form", laplace_series),
        case!("bernstein-series", NumericSeries, "p <= min(max_n, 2), ω in {1/2,3/2,5/2}, y in {2,3}",
            "segment series equals the alternating Bernstein series", bernstein_series),
        case!("apostol-euler-series", NumericSeries, "m <= max_n, ρ in {1/5,1/4,-1/10,1/3}",
            "the Stirling-type series for ℰ_m(ρ) converges to the exact value", apostol_euler_series_case),
    ]
}

fn n_range(lo: usize, hi: usize, f: impl Fn(usize) -> Check) -> Vec<Check> {
    (lo..=hi).map(f).collect()
}

fn worpitzky(max_n: usize) -> Vec<Check> {
    n_range(0, max_n, |n| Check::exact(format!("n={n}"), || id::worpitzky(n)))
}

fn row_json(row: &numbers::EulerianRow) -> Value {
    row.entries.to_json()
}

fn eulerian_permutations(max_n: usize) -> Vec<Check> {
    n_range(0, max_n.min(numbers::BRUTEFORCE_LIMIT - 1), |n| {
        Check::fallible(format!("n={n}"), || {
            let brute = numbers::eulerian_bruteforce(n)?;
            Ok(Witness::new(row_json(&numbers::eulerian_row(n)), row_json(&brute)))
        })
    })
}

fn eulerian_invariants(max_n: usize) -> Vec<Check> {
    n_range(0, max_n, |n| Check::exact(format!("n={n}"), || Witness::new(numbers::eulerian_row(n).satisfies_invariants(), true)))
}

fn eulerian_spline(max_n: usize) -> Vec<Check> {
    n_range(0, max_n, |n| {
        Check::exact(format!("n={n}"), || {
            Witness::new(row_json(&numbers::eulerian_row(n)), row_json(&spline::eulerian_from_spline(n)))
        })
    })
}

fn eulerian_stirling(max_n: usize) -> Vec<Check> {
    n_range(0, max_n, |m| Check::exact(format!("m={m}"), || id::eulerian_via_stirling(m)))
}

fn eulerian_bernstein(max_n: usize) -> Vec<Check> {
    n_range(0, max_n, |m| Check::exact(format!("m={m}"), || id::eulerian_via_bernstein(m)))
}

fn eulerian_umbral(max_n: usize) -> Vec<Check> {
    n_range(1, max_n, |n| Check::exact(format!("n={n}"), || id::eulerian_umbral(n)))
}

fn eulerian_euler_operator(max_n: usize) -> Vec<Check> {
    n_range(0, max_n, |k| Check::exact(format!("k={k}"), || id::eulerian_derivative(k)))
}

fn frobenius_eulerian(max_n: usize) -> Vec<Check> {
    n_range(1, max_n, |n| Check::exact(format!("n={n}"), || id::frobenius_link(n)))
}

fn apostol_closed_form(max_n: usize) -> Vec<Check> {
    let order = max_n + 2;
    vec![Check::fallible(format!("order={order}"), || {
        let s = gf_expand(GfKind::ApostolBernoulliNumbers, &GfParams::default(), order)?
            .into_ratfunc()
            .expect("symbolic ρ");
        Ok(Witness::new(s.into_coeffs(), numbers::apostol_bernoulli_numbers(order)))
    })]
}

fn apostol_eulerian(max_n: usize) -> Vec<Check> {
    n_range(1, max_n + 2, |n| Check::exact(format!("n={n}"), || id::apostol_eulerian(n)))
}

fn apostol_geometric(max_n: usize) -> Vec<Check> {
    n_range(1, max_n, |n| Check::exact(format!("n={n}"), || id::geometric_first(n)))
}

fn apostol_geometric_shifted(max_n: usize) -> Vec<Check> {
    n_range(1, max_n, |n| Check::exact(format!("n={n}"), || id::geometric_second(n)))
}

fn apostol_euler_operator(max_n: usize) -> Vec<Check> {
    n_range(0, max_n, |k| Check::exact(format!("k={k}"), || id::apostol_derivative(k)))
}

fn apostol_difference(max_n: usize) -> Vec<Check> {
    n_range(0, max_n, |n| Check::exact(format!("n={n}"), || id::apostol_shift(n)))
}

fn apostol_difference_at_zero(max_n: usize) -> Vec<Check> {
    n_range(0, max_n, |n| Check::exact(format!("n={n}"), || id::apostol_shift_at_zero(n)))
}

fn apostol_constructions(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for m in ApostolMethod::ALL.into_iter().skip(1) {
            if n == 0 && matches!(m, ApostolMethod::Array | ApostolMethod::Stirling) {
                continue;
            }
            out.push(Check::fallible(format!("n={n} method={m}"), || {
                let base = numbers::apostol_bernoulli_poly(n, ApostolMethod::Binomial)?;
                Ok(Witness::new(base, numbers::apostol_bernoulli_poly(n, m)?))
            }));
        }
    }
    out
}

fn apostol_euler_relation(max_n: usize) -> Vec<Check> {
    n_range(0, max_n, |n| Check::exact(format!("n={n}"), || id::apostol_euler_relation(n)))
}

fn apostol_spline(max_n: usize) -> Vec<Check> {
    n_range(0, max_n + 2, |n| {
        Check::exact(format!("n={n}"), || {
            Witness::new(numbers::apostol_bernoulli_number(n + 1), spline::apostol_from_spline(n))
        })
    })
}

fn difference_operator(max_n: usize) -> Vec<Check> {
    n_range(1, max_n, |n| Check::exact(format!("n={n}"), || epi_check(n)))
}

fn witt_bernoulli(max_n: usize) -> Vec<Check> {
    n_range(1, max_n, |n| Check::exact(format!("n={n}"), || witt_check(n, WittKind::Bernoulli)))
}

fn witt_euler(max_n: usize) -> Vec<Check> {
    n_range(1, max_n, |n| Check::exact(format!("n={n}"), || witt_check(n, WittKind::Euler)))
}

fn grid(max_n: usize) -> impl Iterator<Item = (usize, i64)> {
    (0..=max_n).flat_map(|n| (0..=n as i64).map(move |p| (n, p)))
}

fn bspline_routes(max_n: usize) -> Vec<Check> {
    grid(max_n)
        .map(|(n, p)| {
            Check::fallible(format!("n={n} p={p}"), || {
                let s = spline::bspline_segment(n, p).polynomial;
                let mut routes = vec![
                    spline::goldman_coefficients(p, n)?.swap_remove(n),
                    spline::bspline_via_bernstein(n, p)?,
                ];
                let mut expected = vec![s.clone(), s.clone()];
                if n >= 1 {
                    routes.push(spline::bspline_leibniz(n - 1, p, 1)?);
                    routes.push(spline::deboor_rhs(n, p)?);
                    expected.extend([s.clone(), s]);
                }
                Ok(Witness::new(expected, routes))
            })
        })
        .collect()
}

fn bspline_derivative(max_n: usize) -> Vec<Check> {
    grid(max_n)
        .map(|(n, p)| {
            Check::fallible(format!("n={n} p={p}"), || {
                let s = spline::bspline_segment(n, p).polynomial;
                let symbolic: Vec<Poly> = (0..=4).map(|v| s.nth_derivative(v)).collect();
                let formula = (0..=4).map(|v| spline::bspline_derivative(n, p, v)).collect::<Result<Vec<_>, _>>()?;
                Ok(Witness::new(symbolic, formula))
            })
        })
        .collect()
}

fn partition_of_unity(max_n: usize) -> Vec<Check> {
    n_range(0, max_n, |n| {
        Check::exact(format!("n={n}"), || {
            let sum = (0..=n as i64).fold(Poly::zero_in(Var::Omega), |acc, j| {
                &acc + &spline::bspline_segment(n, j).polynomial.shift(&int(j))
            });
            Witness::new(sum, Poly::constant_in(Var::Omega, int(1)))
        })
    })
}

fn local_support(max_n: usize) -> Vec<Check> {
    n_range(0, max_n, |n| {
        Check::exact(format!("n={n}"), || {
            let ps = -2..=n as i64 + 2;
            let zero: Vec<bool> = ps.clone().map(|p| spline::bspline_segment(n, p).is_zero()).collect();
            let expected: Vec<bool> = ps.map(|p| p < 0 || p > n as i64).collect();
            Witness::new(zero, expected)
        })
    })
}

fn nonnegative(max_n: usize) -> Vec<Check> {
    n_range(0, max_n, |n| {
        Check::exact(format!("n={n}"), || {
            let ok = (0..=n as i64).all(|p| {
                let s = spline::bspline_segment(n, p).polynomial;
                (0..=8).all(|k| s.eval(&(int(p) + rat(k, 8))) >= int(0))
            });
            Witness::new(ok, true)
        })
    })
}

fn bernstein_partition(max_n: usize) -> Vec<Check> {
    n_range(0, max_n + 4, |k| {
        Check::exact(format!("k={k}"), || {
            let sum = (0..=k as i64).fold(Poly::zero_in(Var::Omega), |acc, d| &acc + &bernstein(d, k));
            Witness::new(sum, Poly::constant_in(Var::Omega, int(1)))
        })
    })
}

fn coefficients(e: Expansion) -> Value {
    e.to_json()["coefficients"].clone()
}

/// Closed-form coefficients `0..=order` for one generating function.
fn closed_form(kind: GfKind, params: &GfParams, order: usize) -> crate::Result<Value> {
    use crate::exact::RatFunc;
    let rows = 0..=order;
    Ok(match kind {
        GfKind::Stirling2 => {
            let c = params.c.unwrap_or(0);
            rows.map(|n| Rational::from_integer(numbers::stirling2(n, c))).collect::<Vec<_>>().to_json()
        }
        GfKind::Array => rows.map(|n| numbers::array_poly(params.c.unwrap_or(0), n)).collect::<Vec<_>>().to_json(),
        GfKind::ApostolBernoulliNumbers => numbers::apostol_bernoulli_numbers(order).to_json(),
        GfKind::ApostolBernoulli => rows
            .map(|n| numbers::apostol_bernoulli_poly(n, ApostolMethod::Binomial))
            .collect::<crate::Result<Vec<_>>>()?
            .to_json(),
        GfKind::FrobeniusNumbers => rows.map(numbers::frobenius_number).collect::<Vec<_>>().to_json(),
        GfKind::Frobenius => rows.map(numbers::frobenius_poly).collect::<Vec<_>>().to_json(),
        GfKind::ApostolEulerNumbers => rows.map(numbers::apostol_euler_number).collect::<Vec<_>>().to_json(),
        GfKind::ApostolEuler => rows.map(numbers::apostol_euler_poly).collect::<Vec<_>>().to_json(),
        GfKind::Eulerian => rows.map(|n| RatFunc::from_poly(numbers::eulerian_poly(n))).collect::<Vec<_>>().to_json(),
        GfKind::Bernstein => {
            let d = params.d.unwrap_or(0) as i64;
            rows.map(|k| bernstein(d, k)).collect::<Vec<_>>().to_json()
        }
        GfKind::Goldman => {
            let p = params.p.unwrap_or(0);
            rows.map(|n| spline::bspline_segment(n, p).polynomial).collect::<Vec<_>>().to_json()
        }
        GfKind::Bernoulli => numbers::bernoulli_numbers(order).to_json(),
        GfKind::Euler => numbers::euler_numbers(order).to_json(),
        GfKind::Y1 => {
            let n = params.n.unwrap_or(0);
            rows.map(|m| numbers::y1(m, n)).collect::<Vec<_>>().to_json()
        }
    })
}

fn gf_params(kind: GfKind) -> Vec<GfParams> {
    let with = |f: &dyn Fn(usize) -> GfParams| (0..=3).map(f).collect::<Vec<_>>();
    match kind {
        GfKind::Stirling2 | GfKind::Array => with(&|c| GfParams { c: Some(c), ..Default::default() }),
        GfKind::Bernstein => with(&|d| GfParams { d: Some(d), ..Default::default() }),
        GfKind::Goldman => with(&|p| GfParams { p: Some(p as i64), ..Default::default() }),
        GfKind::Y1 => with(&|n| GfParams { n: Some(n), ..Default::default() }),
        _ => vec![GfParams::default()],
    }
}

fn describe(params: &GfParams) -> String {
    let mut s = String::new();
    for (k, v) in [("c", params.c), ("d", params.d), ("n", params.n)] {
        if let Some(v) = v {
            s.push_str(&format!(" {k}={v}"));
        }
    }
    if let Some(p) = params.p {
        s.push_str(&format!(" p={p}"));
    }
    s
}

fn generating_functions(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for kind in GfKind::ALL {
        for params in gf_params(kind) {
            let label = format!("kind={kind}{} order={max_n}", describe(&params));
            out.push(Check::fallible(label, || {
                let expanded = coefficients(gf_expand(kind, &params, max_n)?);
                Ok(Witness::new(expanded, closed_form(kind, &params, max_n)?))
            }));
        }
    }
    out
}

fn valuations(rows: &[crate::analysis::PadicApprox]) -> Vec<Valuation> {
    rows.iter().map(|r| r.distance_valuation).collect()
}

fn valuation_json(v: &[Valuation]) -> Value {
    Value::Array(v.iter().map(|v| json!(v.to_string())).collect())
}

fn volkenborn_linear(_: usize) -> Vec<Check> {
    vec![Check::fallible("k=1 p=3 m=1..8", || {
        let rows = convergence_sweep(Integral::Volkenborn, 1, 3, 1..=8)?;
        let expected: Vec<Valuation> = (1..=8).map(Valuation::Finite).collect();
        Ok(Witness::new(valuation_json(&valuations(&rows)), valuation_json(&expected)))
    })]
}

fn sweep(kind: Integral, k: usize, p: u64, ms: std::ops::RangeInclusive<u32>) -> Check {
    Check::timed(format!("k={k} p={p} m={}..{}", ms.start(), ms.end()), || {
        match convergence_sweep(kind, k, p, ms) {
            Ok(rows) => {
                let status = if strictly_improving(&rows) { Status::Pass } else { Status::Fail };
                (status, valuation_json(&valuations(&rows)).to_string(), "strictly increasing".into(), None)
            }
            Err(e) => (Status::Fail, e.to_string(), String::new(), None),
        }
    })
}

fn volkenborn_convergence(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for k in 0..=max_n.min(6) {
        for p in [2, 3, 5] {
            out.push(sweep(Integral::Volkenborn, k, p, 2..=8));
        }
    }
    out
}

fn fermionic_convergence(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for k in 0..=max_n.min(6) {
        for p in [3, 5] {
            out.push(sweep(Integral::Fermionic, k, p, 1..=6));
        }
    }
    out
}

fn fermionic_linear(_: usize) -> Vec<Check> {
    vec![Check::fallible("k=1 p=3 m=1,2", || {
        let f = Poly::x(Var::Omega);
        let values = [fermionic_truncated(&f, 3, 1)?, fermionic_truncated(&f, 3, 2)?];
        let congruent: Vec<bool> = values
            .iter()
            .zip([1, 2])
            .map(|(v, m)| padic_valuation(&(v - rat(-1, 2)), 3) >= Valuation::Finite(m))
            .collect();
        let lhs = json!({ "values": values.to_vec().to_json(), "congruent": congruent });
        let rhs = json!({ "values": ["1", "4"], "congruent": [true, true] });
        Ok(Witness::new(lhs, rhs))
    })]
}

fn laplace_series(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for p in 0..=max_n.min(3) {
        for omega in [rat(-1, 2), rat(-1, 4)] {
            for y in [int(1), int(2)] {
                out.push(Check::series(format!("p={p} omega={omega} y={y} terms=400"), || {
                    laplace_series_check(p, &omega, &y, 400, LAPLACE_TOL)
                }));
            }
        }
    }
    out
}

fn bernstein_series(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for p in 0..=max_n.min(2) {
        for omega in [rat(1, 2), rat(3, 2), rat(5, 2)] {
            for y in [int(2), int(3)] {
                out.push(Check::series(format!("p={p} omega={omega} y={y} terms=400"), || {
                    bernstein_series_check(p, &omega, &y, 400, BERNSTEIN_TOL)
                }));
            }
        }
    }
    out
}

fn apostol_euler_series_case(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for m in 0..=max_n {
        for rho in [rat(1, 5), rat(1, 4), rat(-1, 10), rat(1, 3)] {
            out.push(Check::series(format!("m={m} rho={rho} tol=1e-12"), || apostol_euler_series(m, &rho, 1e-12)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique_and_ordered() {
        let reg = registry();
        assert!(reg.len() >= 22);
        let ids: HashSet<_> = reg.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), reg.len());
        assert!(ids.contains("worpitzky"));
        let again: Vec<_> = registry().iter().map(|c| c.id).collect();
        assert_eq!(again, reg.iter().map(|c| c.id).collect::<Vec<_>>());
    }

    /// Every identity family in scope, mapped to the case that covers it.
    const COVERAGE: &[(&str, &str)] = &[
        ("Worpitzky identity", "worpitzky"),
        ("Eulerian numbers by permutations", "eulerian-permutations"),
        ("Eulerian numbers from spline knots", "eulerian-spline"),
        ("Eulerian polynomial via Stirling numbers", "eulerian-stirling"),
        ("Eulerian polynomial via Bernstein basis", "eulerian-bernstein"),
        ("Eulerian umbral recurrence", "eulerian-umbral"),
        ("Eulerian polynomial via Frobenius numbers", "frobenius-eulerian"),
        ("Apostol-Bernoulli closed form", "apostol-closed-form"),
        ("Apostol-Bernoulli and Eulerian link", "apostol-eulerian"),
        ("geometric polynomial relation", "apostol-geometric"),
        ("shifted geometric polynomial relation", "apostol-geometric-shifted"),
        ("Euler operator formula", "apostol-euler-operator"),
        ("Apostol-Bernoulli difference equation", "apostol-difference"),
        ("Apostol-Bernoulli polynomial constructions", "apostol-constructions"),
        ("Apostol-Euler and Apostol-Bernoulli relation", "apostol-euler-relation"),
        ("Apostol-Bernoulli numbers from splines", "apostol-spline"),
        ("difference operator via Volkenborn integral", "difference-operator"),
        ("Witt-type Bernoulli sum", "witt-bernoulli"),
        ("Witt-type Euler sum", "witt-euler"),
        ("five segment constructions", "bspline-routes"),
        ("segment derivative formula", "bspline-derivative"),
        ("partition of unity", "bspline-partition-of-unity"),
        ("local support", "bspline-local-support"),
        ("Laplace transform series", "laplace-series"),
        ("Bernstein series", "bernstein-series"),
        ("Apostol-Euler series", "apostol-euler-series"),
        ("Volkenborn integral", "volkenborn-convergence"),
        ("fermionic integral", "fermionic-convergence"),
    ];

    #[test]
    fn registry_covers_every_family() {
        let ids: HashSet<_> = registry().iter().map(|c| c.id).collect();
        for (family, id) in COVERAGE {
            assert!(ids.contains(id), "{family} has no case {id}");
        }
    }

    #[test]
    fn readme_indexes_every_id() {
        let readme = include_str!("../../../../README.md");
        for case in registry() {
            assert!(readme.contains(&format!("`{}`", case.id)), "README lacks {}", case.id);
        }
    }
}
