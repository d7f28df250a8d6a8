//! Shared numeric utilities: adaptive quadrature, compensated summation,
//! log-factorials, and a symmetric tridiagonal solve.

mod quadrature;
mod series;
mod tridiag;

pub use quadrature::{integrate, integrate_to_cutoff, GaussLegendre, IntegralEstimate, QuadratureSpec};
pub use series::{kahan_sum, log_factorial, KahanSum};
pub use tridiag::{tridiag_condition_estimate, tridiag_solve};
