//! Exact-arithmetic kernel: rationals, sparse multivariate polynomials,
//! partitions, symmetric-function constructors and truncated power series.

mod mpoly;
mod partition;
mod rat;
mod series;
mod symfn;

pub use mpoly::{MPoly, VarCtx};
pub use partition::{partitions_bounded, Partition};
pub use rat::{rat, rat_int, rat_pow, Rat};
pub use series::TruncSeries;
pub use symfn::{epoly, hpoly, hpoly_pow, rat_hpoly_pow, rat_schur, schur, schur_tableaux};
