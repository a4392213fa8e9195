//! Exact symbolic verification of unramified local tensor-product
//! L-factor identities on n-fold covering groups of GL(r).
//!
//! Everything here is exact: rational coefficients, sparse multivariate
//! polynomials in the Satake parameters `x_1..x_r`, `y_1..y_m` and a formal
//! half-power-of-q unit `v`, and power series in `X = q^{-s}` truncated at a
//! configured order. Local integrals reduce to weighted torus sums at the
//! unramified level, so every identity is checked coefficient by coefficient
//! with zero tolerance.
//!
//! Module map:
//! - [`exactalg`]: rationals, sparse polynomials, partitions, symmetric
//!   functions (Schur / complete homogeneous / elementary), truncated series.
//! - [`groupcomb`]: cocharacters, Weyl permutations, coordinate pattern
//!   groups for unipotent radicals, modular-character exponent functionals.
//! - [`whittaker`]: unramified Whittaker value oracles (Casselman–Shalika
//!   for principal series, rank-one Speh-type values on covers).
//! - [`zeta`]: torus-sum evaluators for the local integrals, the reference
//!   Euler product, and the coefficient-exact comparator.

pub mod exactalg;
pub mod groupcomb;
pub mod whittaker;
pub mod zeta;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Series inversion requires constant term exactly 1.
    #[error("series constant term is not 1; cannot invert")]
    NonUnitConstantTerm,
    /// Specialization hit `0^e` with `e < 0`.
    #[error("specialization assigns zero to a variable carrying a negative exponent")]
    ZeroToNegativePower,
    /// Block sizes passed to a parabolic do not partition the ambient rank.
    #[error("block sizes {blocks:?} do not partition ambient rank {ambient}")]
    BadBlockPartition { blocks: Vec<usize>, ambient: usize },
    /// A fractional power of a modular character produced a non-half-integral
    /// exponent of q.
    #[error("exponent scaling by {num}/{den} is not half-integral: {detail}")]
    NonHalfIntegralExponent { num: i64, den: i64, detail: String },
    /// Vector length does not match the ambient rank.
    #[error("length {got} does not match expected rank {want}")]
    LengthMismatch { got: usize, want: usize },
    /// Requested verification path is not available for the given case.
    #[error("unsupported verification path: {detail}")]
    UnsupportedPath { detail: String },
    /// An internal consistency assertion failed; indicates a bug or a wrong
    /// convention, never bad user input.
    #[error("internal check failed [{check}]: {detail}")]
    Internal { check: String, detail: String },
}

impl Error {
    pub(crate) fn internal(check: &str, detail: impl Into<String>) -> Self {
        Error::Internal {
            check: check.to_string(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
