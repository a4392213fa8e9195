//! Power series in the formal variable `X = q^(-s)`, truncated at a fixed
//! order, with [`MPoly`] coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::Arc;

use super::mpoly::{MPoly, VarCtx};
use super::rat::Rat;
use crate::{Error, Result};

/// Truncated series: `coeffs[d]` is the coefficient of `X^d`, `0 <= d <= order`.
/// Arithmetic never reads or writes beyond the truncation order.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    ctx: Arc<VarCtx>,
    coeffs: Vec<MPoly>,
}

impl TruncSeries {
    pub fn zero(ctx: &Arc<VarCtx>, order: usize) -> Self {
        TruncSeries {
            ctx: Arc::clone(ctx),
            coeffs: vec![MPoly::zero(ctx); order + 1],
        }
    }

    pub fn one(ctx: &Arc<VarCtx>, order: usize) -> Self {
        let mut s = Self::zero(ctx, order);
        s.coeffs[0] = MPoly::one(ctx);
        s
    }

    /// `1 - p * X^xdeg`, truncated. With `xdeg = 0` this is `1 - p`.
    pub fn one_minus_term(ctx: &Arc<VarCtx>, order: usize, xdeg: usize, p: &MPoly) -> Self {
        let mut s = Self::one(ctx, order);
        if xdeg <= order {
            s.coeffs[xdeg] = &s.coeffs[xdeg] - p;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn ctx(&self) -> &Arc<VarCtx> {
        &self.ctx
    }

    pub fn coeff(&self, d: usize) -> &MPoly {
        &self.coeffs[d]
    }

    /// Adds `p` to the coefficient of `X^d`. Panics when `d` exceeds the
    /// truncation order; enumeration bounds must prevent that.
    pub fn add_to_coeff(&mut self, d: usize, p: &MPoly) {
        assert!(d <= self.order(), "X-degree {d} beyond truncation order");
        self.coeffs[d] += p;
    }

    fn assert_compatible(&self, other: &TruncSeries) {
        assert_eq!(
            self.order(),
            other.order(),
            "series truncation order mismatch"
        );
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx,
            "series varctx mismatch"
        );
    }

    /// Multiplicative inverse up to the truncation order. The constant term
    /// must be exactly 1.
    pub fn invert(&self) -> Result<TruncSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let order = self.order();
        let mut inv = TruncSeries::zero(&self.ctx, order);
        inv.coeffs[0] = MPoly::one(&self.ctx);
        for d in 1..=order {
            // b_d = -(a_1 b_{d-1} + ... + a_d b_0)
            let mut acc = MPoly::zero(&self.ctx);
            for j in 1..=d {
                if self.coeffs[j].is_zero() || inv.coeffs[d - j].is_zero() {
                    continue;
                }
                acc += &(&self.coeffs[j] * &inv.coeffs[d - j]);
            }
            inv.coeffs[d] = -&acc;
        }
        Ok(inv)
    }

    /// Specializes every coefficient with the same assignment.
    pub fn specialize(&self, assign: &BTreeMap<usize, Rat>) -> Result<TruncSeries> {
        let coeffs: Result<Vec<MPoly>> = self.coeffs.iter().map(|c| c.specialize(assign)).collect();
        Ok(TruncSeries {
            ctx: Arc::clone(&self.ctx),
            coeffs: coeffs?,
        })
    }

    /// All coefficients as plain rationals, when every coefficient is constant.
    pub fn to_rat_coeffs(&self) -> Option<Vec<Rat>> {
        self.coeffs.iter().map(|c| c.try_to_rat()).collect()
    }

    /// X-degrees at which two equally-truncated series differ.
    pub fn diff_degrees(&self, other: &TruncSeries) -> Vec<(usize, MPoly)> {
        self.assert_compatible(other);
        let mut out = Vec::new();
        for d in 0..=self.order() {
            if self.coeffs[d] != other.coeffs[d] {
                out.push((d, &self.coeffs[d] - &other.coeffs[d]));
            }
        }
        out
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.assert_compatible(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        TruncSeries {
            ctx: Arc::clone(&self.ctx),
            coeffs,
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.assert_compatible(rhs);
        let order = self.order();
        let mut out = TruncSeries::zero(&self.ctx, order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &(a * b);
            }
        }
        out
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "X^{d}: {c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
