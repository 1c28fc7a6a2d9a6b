/// A family whose published presentation mixes more than one normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConventionEntry {
    pub family: &'static str,
    pub canonical: &'static str,
    pub discrepancy: &'static str,
}

pub const CONVENTION_LEDGER: &[ConventionEntry] = &[
    ConventionEntry {
        family: "eulerian",
        canonical: "A_n(ρ) = Σ_{j=0}^{n} A_{n,j} ρ^j, so A_0 = 1 and A_1 = ρ",
        discrepancy: "some listed values are A_n(ρ)/ρ, with the constant term written as A_{n,0} = 1",
    },
    ConventionEntry {
        family: "frobenius",
        canonical: "H_0 = 1, H_n = Σ_{j<n} C(n,j) H_j / (φ - 1)",
        discrepancy: "the recurrence is sometimes written with H_n on both sides and a 1/φ prefactor",
    },
    ConventionEntry {
        family: "bernoulli",
        canonical: "B_1 = -1/2, the value forced by the Volkenborn integral of x^n",
        discrepancy: "the opposite sign convention B_1 = +1/2 is also in common use",
    },
    ConventionEntry {
        family: "apostol_derivative",
        canonical: "-B_{k+1}(ρ)/(k+1) = (ρ d/dρ)^k {1/(1-ρ)}",
        discrepancy: "the divisor is sometimes printed as n+1 although the operator index is k",
    },
    ConventionEntry {
        family: "apostol_spline",
        canonical: "the spline link divides by (ρ-1)^{n+1}",
        discrepancy: "the factor (ρ-1)^{n+1} is sometimes printed as a multiplier",
    },
    ConventionEntry {
        family: "bspline_derivative",
        canonical: "N^{(v)} carries 1/n! and sign (-1)^{d+v-m}",
        discrepancy: "the uncorrected form equals (-1)^n n! times the true derivative",
    },
];
