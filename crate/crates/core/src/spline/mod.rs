//! Bernstein basis polynomials and uniform B-spline segments, with several
//! independent constructions of each segment.

mod bernstein;
mod routes;
mod segment;

pub use bernstein::{bernstein, bernstein_in, bernstein_shifted};
pub use routes::{
    apostol_from_spline, bspline_derivative, bspline_leibniz, bspline_via_bernstein, deboor_rhs,
    eulerian_from_spline, goldman_coefficients,
};
pub use segment::{bspline_eval, bspline_samples, bspline_segment, write_samples_csv, SplineSegment};
