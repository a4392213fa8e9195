//! Whittaker-value oracles at the unramified level.
//!
//! Values of normalized unramified Whittaker functions on torus elements,
//! as exact polynomials in the Satake parameters and the half-power-of-q
//! unit `v`. Principal-series values (cover degree 1) come from the
//! Casselman–Shalika formula; on an n-fold cover the rank-one values of the
//! Speh-type unramified representation are supported on n-th-power torus
//! elements, and their closed form is pinned by the generating identity
//! with the Euler factor (checked in the tests by series division).

use std::sync::Arc;

use crate::exactalg::{hpoly_pow, schur, MPoly, Partition, VarCtx};
use crate::groupcomb::{build_w0, delta_borel, delta_parabolic, Cochar};
use crate::{Error, Result};

/// Satake parameters of an unramified representation: the ordered parameter
/// variables and the cover degree. Parameters are formal variables, so the
/// general-position hypothesis is automatic.
#[derive(Debug, Clone)]
pub struct SatakeParams {
    vars: Vec<usize>,
    cover: u32,
}

impl SatakeParams {
    pub fn new(vars: Vec<usize>, cover: u32) -> Self {
        assert!(cover >= 1, "cover degree must be at least 1");
        SatakeParams { vars, cover }
    }

    /// Rank of the group (number of parameters).
    pub fn rank(&self) -> usize {
        self.vars.len()
    }

    pub fn cover(&self) -> u32 {
        self.cover
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }
}

/// Casselman–Shalika value of the normalized unramified Whittaker function
/// of a principal series (cover degree 1) at the cocharacter `lam`:
/// `delta_B^{1/2}(p^lam) * s_lam(params)` for dominant `lam`, zero otherwise.
///
/// Dominant here means weakly decreasing with nonnegative tail; values off
/// the dominant cone vanish by psi-equivariance under torus conjugation.
pub fn cs_value(ctx: &Arc<VarCtx>, params: &SatakeParams, lam: &[i64]) -> Result<MPoly> {
    assert_eq!(
        params.cover(),
        1,
        "Casselman-Shalika route requires cover degree 1"
    );
    let n = params.rank();
    if lam.len() != n {
        return Err(Error::LengthMismatch {
            got: lam.len(),
            want: n,
        });
    }
    let dominant = lam.windows(2).all(|w| w[0] >= w[1]) && lam.last().is_none_or(|&l| l >= 0);
    if !dominant {
        return Ok(MPoly::zero(ctx));
    }
    let parts: Vec<u32> = lam.iter().map(|&l| l as u32).collect();
    let shape = Partition::new(parts);
    let half_exp = delta_borel(n)
        .scaled(1, 2)?
        .eval_v(&Cochar::new(lam.to_vec()));
    Ok(schur(ctx, &shape, params.vars()).times_v_pow(half_exp))
}

/// Rank-one value of the Speh-type unramified Whittaker function on the
/// n-fold cover of GL(nm), at `diag(p^{nk}, I_{nm-1})`:
/// `h_k(y_1^n, ..., y_m^n) * v^{-k (n^2 m - 2n + 1)}`.
pub fn speh_rank1_value(ctx: &Arc<VarCtx>, tau: &SatakeParams, k: u32) -> MPoly {
    let m = tau.rank();
    let n = tau.cover() as usize;
    assert!(n * m > 1, "rank-one values require nm > 1");
    let h = hpoly_pow(ctx, k, tau.vars(), tau.cover());
    let exp = -(k as i64) * ((n * n * m) as i64 - 2 * n as i64 + 1);
    h.times_v_pow(exp)
}

/// The same value addressed by the raw torus valuation: zero unless the
/// valuation is nonnegative and divisible by the cover degree.
pub fn speh_value_at_valuation(ctx: &Arc<VarCtx>, tau: &SatakeParams, val: i64) -> MPoly {
    let n = tau.cover() as i64;
    if val < 0 || val % n != 0 {
        return MPoly::zero(ctx);
    }
    speh_rank1_value(ctx, tau, (val / n) as u32)
}

/// Levi factorization of the generating-function vector at the interleaved
/// torus element `diag(A_1, ..., A_r)`, `A_i = diag(a_i, I_{nm-1})`:
/// the product of rank-one values at the `a_i` times the
/// `(nm-1)/(2nm)`-power of the modular character of the parabolic with `r`
/// blocks of size `nm`, evaluated at that element.
///
/// Zero when any `a_i` has negative valuation or valuation not divisible by
/// the cover degree.
pub fn levi_value(
    ctx: &Arc<VarCtx>,
    tau: &SatakeParams,
    r: usize,
    a_vals: &[i64],
) -> Result<MPoly> {
    let m = tau.rank();
    let n = tau.cover() as i64;
    let nm = m * tau.cover() as usize;
    assert!(nm > 1, "levi factorization requires nm > 1");
    if a_vals.len() != r {
        return Err(Error::LengthMismatch {
            got: a_vals.len(),
            want: r,
        });
    }
    if a_vals.iter().any(|&a| a < 0 || a % n != 0) {
        return Ok(MPoly::zero(ctx));
    }
    let mut prod = MPoly::one(ctx);
    for &a in a_vals {
        prod = &prod * &speh_rank1_value(ctx, tau, (a / n) as u32);
    }
    let w0 = build_w0(tau.cover() as usize, m, r)?;
    let interleaved = w0.conj_cochar(&Cochar::embedded(a_vals, nm * r));
    let delta = delta_parabolic(&vec![nm; r])?.scaled(nm as i64 - 1, 2 * nm as i64)?;
    Ok(prod.times_v_pow(delta.eval_v(&interleaved)))
}
