//! Torus-sum evaluators for the local integrals, the reference Euler
//! product and the coefficient-exact comparator.

mod case;
mod env;
mod euler;
mod eval;
mod verify;

pub use case::{CaseSpec, Mode, PathKind};
pub use env::{specialized_params, ParamEnv};
pub use euler::euler_product;
pub use eval::{eval_generating, eval_jpss, eval_tensor_rank1, EvalOptions};
pub use verify::{
    fnv1a64_hex, series_digest, verify_agreement, verify_consistency_rank1, verify_path,
    verify_theorem1, Mismatch, Status, VerificationReport,
};
