//! Combinatorial GL(N) scaffolding: cocharacters, permutation (Weyl)
//! matrices, coordinate pattern groups for unipotent radicals, parabolic
//! modular characters as exponent functionals, and change-of-variables
//! measure exponents.
//!
//! Everything lives at the level of valuations: unipotent coordinates are
//! never given values, only positions and measure exponents matter at the
//! unramified level.

mod cochar;
mod expchar;
pub mod identities;
mod patterns;
mod perm;

pub use cochar::Cochar;
pub use expchar::{conj_measure_factor, delta_borel, delta_parabolic, ExpChar};
pub use identities::{
    check_exponent_identities, exponent_identity_checks, structure_checks, CheckRecord,
    DeltaConvention,
};
pub use patterns::{build_patterns, CoordSet, UnipotentPatterns};
pub use perm::{build_w0, build_wj, PermMat};
