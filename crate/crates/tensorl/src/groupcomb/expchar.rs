//! Exponent functionals on torus valuations.
//!
//! An [`ExpChar`] records a product of `|entry|`-powers as a linear
//! functional: weights `w_i` (half-integers, stored doubled) such that the
//! factor evaluated at `diag(p^{c_1}, ..., p^{c_N})` equals
//! `q^{-(w_1 c_1 + ... + w_N c_N)}`. With `|p| = q^{-1}` this convention
//! makes the q-exponent of `delta_P(p^c)` exactly `-(w . c)`.

use num_rational::Rational64;

use super::cochar::Cochar;
use super::patterns::CoordSet;
use crate::{Error, Result};

/// Linear functional on valuations; `doubled[i]` is twice the weight of the
/// i-th diagonal coordinate, so half-integer weights stay exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpChar {
    doubled: Vec<i64>,
}

impl ExpChar {
    pub fn zero(n: usize) -> Self {
        ExpChar {
            doubled: vec![0; n],
        }
    }

    /// From integer weights.
    pub fn from_weights(weights: &[i64]) -> Self {
        ExpChar {
            doubled: weights.iter().map(|w| 2 * w).collect(),
        }
    }

    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        ExpChar { doubled }
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    pub fn doubled_weights(&self) -> &[i64] {
        &self.doubled
    }

    /// Exponent of `v = q^(1/2)` of the factor at `p^c`; always an integer
    /// because weights are half-integral.
    pub fn eval_v(&self, c: &Cochar) -> i64 {
        assert_eq!(c.len(), self.len(), "cocharacter length mismatch");
        -self
            .doubled
            .iter()
            .zip(c.vals())
            .map(|(w, v)| w * v)
            .sum::<i64>()
    }

    /// Exact rational exponent of `q` of the factor at `p^c`.
    pub fn eval_q(&self, c: &Cochar) -> Rational64 {
        Rational64::new(self.eval_v(c), 2)
    }

    /// The functional raised to the rational power `num/den`. Fails when a
    /// resulting weight is not half-integral; callers on the verified path
    /// never hit this, but the rejected parabolic convention does.
    pub fn scaled(&self, num: i64, den: i64) -> Result<ExpChar> {
        assert!(den != 0);
        let mut doubled = Vec::with_capacity(self.len());
        for (i, &d) in self.doubled.iter().enumerate() {
            let prod = d * num;
            if prod % den != 0 {
                return Err(Error::NonHalfIntegralExponent {
                    num,
                    den,
                    detail: format!("doubled weight {d} at coordinate {i}"),
                });
            }
            doubled.push(prod / den);
        }
        Ok(ExpChar { doubled })
    }

    /// Rational-power evaluation that tolerates non-half-integral weights;
    /// used by the reporting paths.
    pub fn eval_q_scaled(&self, c: &Cochar, num: i64, den: i64) -> Rational64 {
        assert_eq!(c.len(), self.len(), "cocharacter length mismatch");
        let dot: i64 = self.doubled.iter().zip(c.vals()).map(|(w, v)| w * v).sum();
        Rational64::new(-dot * num, 2 * den)
    }

    /// Pointwise sum (product of the underlying factors).
    pub fn plus(&self, other: &ExpChar) -> ExpChar {
        assert_eq!(self.len(), other.len());
        ExpChar {
            doubled: self
                .doubled
                .iter()
                .zip(&other.doubled)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Modular character of the standard parabolic with the given Levi block
/// sizes: the diagonal coordinates of block `b` get weight
/// `sum(sizes after b) - sum(sizes before b)`.
pub fn delta_parabolic(blocks: &[usize]) -> Result<ExpChar> {
    if blocks.is_empty() || blocks.contains(&0) {
        return Err(Error::BadBlockPartition {
            blocks: blocks.to_vec(),
            ambient: blocks.iter().sum(),
        });
    }
    let total: usize = blocks.iter().sum();
    let mut weights = Vec::with_capacity(total);
    let mut before = 0usize;
    for (b, &size) in blocks.iter().enumerate() {
        let after: usize = blocks[b + 1..].iter().sum();
        let w = after as i64 - before as i64;
        weights.extend(std::iter::repeat_n(w, size));
        before += size;
    }
    Ok(ExpChar::from_weights(&weights))
}

/// Borel modular character of GL(N): unit blocks, weight `N - 2i + 1` at the
/// i-th coordinate (1-indexed).
pub fn delta_borel(n: usize) -> ExpChar {
    delta_parabolic(&vec![1; n]).expect("unit blocks always partition")
}

/// The measure-change exponent for conjugating the coordinate group by a
/// diagonal element: each position `(i, j)` contributes `|d_i / d_j|`, i.e.
/// the weight vector `e_i - e_j`.
pub fn conj_measure_factor(coords: &CoordSet) -> ExpChar {
    let mut weights = vec![0i64; coords.ambient()];
    for &(i, j) in coords.coords() {
        weights[i] += 1;
        weights[j] -= 1;
    }
    ExpChar::from_weights(&weights)
}
