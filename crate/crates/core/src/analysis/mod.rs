//! Truncated p-adic integrals, Witt-type identities and floating-point
//! checks of series identities.

mod padic;
mod series;
mod witt;

pub use padic::{
    convergence_sweep, fermionic_direct, fermionic_truncated, is_prime, padic_valuation,
    strictly_improving, volkenborn_direct, volkenborn_truncated, write_sweep_csv, Integral,
    PadicApprox, Valuation, DIRECT_LIMIT,
};
pub use series::{
    apostol_euler_series, bernstein_series_check, laplace_series_check, terms_needed,
    SeriesEvalReport, BERNSTEIN_TOL, LAPLACE_TOL, MAX_TERMS,
};
pub use witt::{epi_check, witt_check, WittKind};
