//! Parameter environment: the single place where evaluators obtain Satake
//! parameters, so the identical summation code runs either symbolically or
//! over random rational specializations.
//!
//! The specialized route deliberately substitutes numbers factor by factor
//! (scalar Jacobi-Trudi determinants and scalar homogeneous sums) rather
//! than specializing the finished series, so agreement between the two
//! modes exercises two genuinely different arithmetic paths.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::exactalg::{rat, rat_hpoly_pow, rat_pow, rat_schur, MPoly, Partition, Rat, VarCtx};
use crate::groupcomb::{build_w0, delta_borel, delta_parabolic, Cochar};
use crate::whittaker::{cs_value, speh_rank1_value, SatakeParams};
use crate::Result;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn draw_rat(state: &mut u64) -> Rat {
    // small nonzero rationals keep coefficient growth in check
    let n = (splitmix64(state) % 9) as i64 + 1;
    let d = (splitmix64(state) % 9) as i64 + 1;
    let sign = if splitmix64(state).is_multiple_of(2) {
        1
    } else {
        -1
    };
    rat(sign * n, d)
}

/// Deterministic random rational parameters for a case: `(x, y, v)` with
/// every value nonzero.
pub fn specialized_params(r: usize, m: usize, seed: u64) -> (Vec<Rat>, Vec<Rat>, Rat) {
    let mut state = seed ^ 0x51ab_f00d_0137_c0de;
    let x: Vec<Rat> = (0..r).map(|_| draw_rat(&mut state)).collect();
    let y: Vec<Rat> = (0..m).map(|_| draw_rat(&mut state)).collect();
    let v = draw_rat(&mut state);
    (x, y, v)
}

enum EnvKind {
    Symbolic {
        x_vars: Vec<usize>,
        y_vars: Vec<usize>,
    },
    Specialized {
        x: Vec<Rat>,
        y: Vec<Rat>,
        v: Rat,
    },
}

/// Evaluation environment for a fixed `(r, m)`.
pub struct ParamEnv {
    ctx: Arc<VarCtx>,
    r: usize,
    m: usize,
    kind: EnvKind,
}

impl ParamEnv {
    pub fn symbolic(r: usize, m: usize) -> Self {
        let ctx = VarCtx::for_case(r, m);
        let x_vars: Vec<usize> = (0..r).collect();
        let y_vars: Vec<usize> = (r..r + m).collect();
        ParamEnv {
            ctx,
            r,
            m,
            kind: EnvKind::Symbolic { x_vars, y_vars },
        }
    }

    pub fn specialized(r: usize, m: usize, seed: u64) -> Self {
        let (x, y, v) = specialized_params(r, m, seed);
        ParamEnv {
            ctx: VarCtx::scalar(),
            r,
            m,
            kind: EnvKind::Specialized { x, y, v },
        }
    }

    pub fn ctx(&self) -> &Arc<VarCtx> {
        &self.ctx
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self.kind, EnvKind::Symbolic { .. })
    }

    /// Assignment sending the symbolic context onto this environment's
    /// rational parameters (specialized environments only).
    pub fn assignment_for(&self, symbolic_ctx: &Arc<VarCtx>) -> Option<BTreeMap<usize, Rat>> {
        match &self.kind {
            EnvKind::Symbolic { .. } => None,
            EnvKind::Specialized { x, y, v } => {
                let mut map = BTreeMap::new();
                for (i, val) in x.iter().enumerate() {
                    map.insert(symbolic_ctx.index_of(&format!("x{}", i + 1))?, val.clone());
                }
                for (j, val) in y.iter().enumerate() {
                    map.insert(symbolic_ctx.index_of(&format!("y{}", j + 1))?, val.clone());
                }
                map.insert(symbolic_ctx.v_index()?, v.clone());
                Some(map)
            }
        }
    }

    fn constant(&self, value: Rat) -> MPoly {
        MPoly::constant(&self.ctx, value)
    }

    pub fn one(&self) -> MPoly {
        MPoly::one(&self.ctx)
    }

    pub fn x_pow(&self, i: usize, e: u32) -> MPoly {
        assert!(i < self.r);
        match &self.kind {
            EnvKind::Symbolic { x_vars, .. } => MPoly::var_pow(&self.ctx, x_vars[i], e),
            EnvKind::Specialized { x, .. } => {
                self.constant(rat_pow(&x[i], e as i64).expect("nonzero parameter"))
            }
        }
    }

    pub fn y_pow(&self, j: usize, e: u32) -> MPoly {
        assert!(j < self.m);
        match &self.kind {
            EnvKind::Symbolic { y_vars, .. } => MPoly::var_pow(&self.ctx, y_vars[j], e),
            EnvKind::Specialized { y, .. } => {
                self.constant(rat_pow(&y[j], e as i64).expect("nonzero parameter"))
            }
        }
    }

    pub fn v_pow(&self, e: i64) -> MPoly {
        match &self.kind {
            EnvKind::Symbolic { .. } => MPoly::v_pow(&self.ctx, e),
            EnvKind::Specialized { v, .. } => {
                self.constant(rat_pow(v, e).expect("v drawn nonzero"))
            }
        }
    }

    /// `prod_i x_i^{a_i}` with `a_i >= 0`.
    pub fn chi_monomial(&self, a_vals: &[i64]) -> MPoly {
        assert_eq!(a_vals.len(), self.r);
        let mut acc = self.one();
        for (i, &a) in a_vals.iter().enumerate() {
            assert!(a >= 0);
            acc = &acc * &self.x_pow(i, a as u32);
        }
        acc
    }

    /// Principal-series Whittaker value on the x-side at the dominant
    /// cocharacter `lam` (length r), cover degree 1.
    pub fn cs_x(&self, lam: &[i64]) -> Result<MPoly> {
        match &self.kind {
            EnvKind::Symbolic { x_vars, .. } => {
                let params = SatakeParams::new(x_vars.clone(), 1);
                cs_value(&self.ctx, &params, lam)
            }
            EnvKind::Specialized { x, v, .. } => Ok(self.scalar_cs(lam, x, v)),
        }
    }

    /// Same on the y-side (length m).
    pub fn cs_y(&self, lam: &[i64]) -> Result<MPoly> {
        match &self.kind {
            EnvKind::Symbolic { y_vars, .. } => {
                let params = SatakeParams::new(y_vars.clone(), 1);
                cs_value(&self.ctx, &params, lam)
            }
            EnvKind::Specialized { y, v, .. } => Ok(self.scalar_cs(lam, y, v)),
        }
    }

    fn scalar_cs(&self, lam: &[i64], vals: &[Rat], v: &Rat) -> MPoly {
        let dominant = lam.windows(2).all(|w| w[0] >= w[1]) && lam.last().is_none_or(|&l| l >= 0);
        if !dominant {
            return MPoly::zero(&self.ctx);
        }
        let parts: Vec<u32> = lam.iter().map(|&l| l as u32).collect();
        let shape = Partition::new(parts);
        let half_exp = delta_borel(vals.len())
            .scaled(1, 2)
            .expect("borel weights are integral")
            .eval_v(&Cochar::new(lam.to_vec()));
        let value = rat_schur(&shape, vals) * rat_pow(v, half_exp).expect("v nonzero");
        self.constant(value)
    }

    /// Rank-one Speh-type value at `diag(p^{nk}, I_{nm-1})` for the y-side
    /// parameters on the n-fold cover.
    pub fn speh(&self, n: usize, k: u32) -> MPoly {
        match &self.kind {
            EnvKind::Symbolic { y_vars, .. } => {
                let tau = SatakeParams::new(y_vars.clone(), n as u32);
                speh_rank1_value(&self.ctx, &tau, k)
            }
            EnvKind::Specialized { y, v, .. } => {
                let m = self.m;
                let exp = -(k as i64) * ((n * n * m) as i64 - 2 * n as i64 + 1);
                let value = rat_hpoly_pow(k, y, n as u32) * rat_pow(v, exp).expect("v nonzero");
                self.constant(value)
            }
        }
    }

    /// Levi-factorized value at the interleaved torus element, including the
    /// `(nm-1)/(2nm)` twist of the parabolic with `r` blocks of size `nm`.
    pub fn levi(&self, n: usize, r: usize, a_vals: &[i64]) -> Result<MPoly> {
        let m = self.m;
        let nm = n * m;
        if a_vals.iter().any(|&a| a < 0 || a % n as i64 != 0) {
            return Ok(MPoly::zero(&self.ctx));
        }
        let mut prod = self.one();
        for &a in a_vals {
            prod = &prod * &self.speh(n, (a / n as i64) as u32);
        }
        let w0 = build_w0(n, m, r)?;
        let interleaved = w0.conj_cochar(&Cochar::embedded(a_vals, nm * r));
        let delta = delta_parabolic(&vec![nm; r])?.scaled(nm as i64 - 1, 2 * nm as i64)?;
        Ok(&prod * &self.v_pow(delta.eval_v(&interleaved)))
    }
}
