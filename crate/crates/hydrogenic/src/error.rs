use thiserror::Error;

/// Errors surfaced by the library. Every message names the violated
/// invariant so CLI consumers can report it verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid quantum numbers (n, l) = ({n}, {l}): require n >= 1 and n >= l + 1")]
    InvalidQuantumNumbers { n: u32, l: u32 },

    #[error("invalid atom configuration: {0}")]
    InvalidConfig(String),

    #[error("ladder radicand is negative ({radicand}) for (n, l) = ({n}, {l})")]
    NegativeRadicand { n: u32, l: u32, radicand: i64 },

    #[error("basis for l = {l} requires n_max >= l + 2 (dim >= 2), got n_max = {n_max}")]
    BasisTooSmall { l: u32, n_max: u32 },

    #[error("operator bases differ: (l = {l_left}, n_max = {n_max_left}) vs (l = {l_right}, n_max = {n_max_right})")]
    BasisMismatch {
        l_left: u32,
        n_max_left: u32,
        l_right: u32,
        n_max_right: u32,
    },

    #[error("n = {n} lies outside the truncation window l + 1 <= n < n_max for (l, n_max) = ({l}, {n_max})")]
    OutOfTruncation { n: u32, l: u32, n_max: u32 },

    #[error("insufficient truncation headroom: require n <= n_max - 2, got n = {n} with n_max = {n_max}")]
    InsufficientHeadroom { n: u32, n_max: u32 },

    #[error("tridiagonal system is numerically singular at pivot {pivot} (condition estimate {cond_estimate:.3e})")]
    SingularSystem { pivot: usize, cond_estimate: f64 },

    #[error("quadrature did not converge within max_depth = {max_depth}: partial result {partial:.17e}, error estimate {estimate:.3e}")]
    QuadratureNonConvergence {
        max_depth: u32,
        partial: f64,
        estimate: f64,
    },

    #[error("moment <r^{k}> diverges for l = {l}: integrand power 2 + k + 2l at the origin is below -1")]
    DivergentMoment { k: i32, l: u32 },

    #[error("invalid spherical harmonic orders (l, m) = ({l}, {m}): require |m| <= l")]
    InvalidHarmonicOrder { l: u32, m: i32 },

    #[error("invalid radial polynomial: {0}")]
    InvalidPolyExp(String),

    #[error("invalid reference table: {0}")]
    InvalidTable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
