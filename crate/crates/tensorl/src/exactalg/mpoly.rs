//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A polynomial lives over a fixed, ordered variable context. One variable
//! may be designated as the formal unit `v` standing for `q^(1/2)`; it is the
//! only slot allowed to carry negative exponents (Laurent in `v`, polynomial
//! in everything else). Terms are kept in a `BTreeMap` so every polynomial
//! has a single canonical form independent of construction order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rat::{rat_pow, Rat};
use crate::Result;

/// Ordered list of variable names, with an optional designated `v` slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarCtx {
    names: Vec<String>,
    v_idx: Option<usize>,
}

impl VarCtx {
    /// Context with the given names; `v_name`, if present in `names`, is the
    /// designated half-power-of-q unit.
    pub fn new(names: Vec<String>, v_name: Option<&str>) -> Arc<Self> {
        let v_idx = v_name.map(|v| {
            names
                .iter()
                .position(|n| n == v)
                .expect("v variable must be listed in the context")
        });
        Arc::new(VarCtx { names, v_idx })
    }

    /// Standard context for a rank-(r, m) case: `x1..xr, y1..ym, v`.
    pub fn for_case(r: usize, m: usize) -> Arc<Self> {
        let mut names: Vec<String> = (1..=r).map(|i| format!("x{i}")).collect();
        names.extend((1..=m).map(|j| format!("y{j}")));
        names.push("v".to_string());
        VarCtx::new(names, Some("v"))
    }

    /// Empty context; polynomials over it are plain rational scalars.
    pub fn scalar() -> Arc<Self> {
        Arc::new(VarCtx {
            names: Vec::new(),
            v_idx: None,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn v_index(&self) -> Option<usize> {
        self.v_idx
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Sparse multivariate polynomial over [`VarCtx`].
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    ctx: Arc<VarCtx>,
    terms: BTreeMap<Vec<i32>, Rat>,
}

impl MPoly {
    pub fn zero(ctx: &Arc<VarCtx>) -> Self {
        MPoly {
            ctx: Arc::clone(ctx),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<VarCtx>) -> Self {
        Self::constant(ctx, Rat::one())
    }

    pub fn constant(ctx: &Arc<VarCtx>, c: Rat) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(vec![0; ctx.num_vars()], c);
        }
        p
    }

    pub fn var(ctx: &Arc<VarCtx>, idx: usize) -> Self {
        Self::var_pow(ctx, idx, 1)
    }

    /// `name(idx)^exp` with `exp >= 0`.
    pub fn var_pow(ctx: &Arc<VarCtx>, idx: usize, exp: u32) -> Self {
        assert!(idx < ctx.num_vars(), "variable index out of range");
        let mut exps = vec![0; ctx.num_vars()];
        exps[idx] = exp as i32;
        Self::monomial(ctx, exps, Rat::one())
    }

    /// `v^exp`; the only place negative exponents may enter.
    pub fn v_pow(ctx: &Arc<VarCtx>, exp: i64) -> Self {
        let v = ctx.v_index().expect("context has no v variable");
        let mut exps = vec![0; ctx.num_vars()];
        exps[v] = i32::try_from(exp).expect("v exponent out of range");
        Self::monomial(ctx, exps, Rat::one())
    }

    pub fn monomial(ctx: &Arc<VarCtx>, exps: Vec<i32>, coeff: Rat) -> Self {
        assert_eq!(
            exps.len(),
            ctx.num_vars(),
            "exponent vector length mismatch"
        );
        for (i, &e) in exps.iter().enumerate() {
            if e < 0 {
                assert_eq!(
                    Some(i),
                    ctx.v_index(),
                    "negative exponent on a non-v variable"
                );
            }
        }
        let mut p = Self::zero(ctx);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn ctx(&self) -> &Arc<VarCtx> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Rat)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exps: Vec<i32>, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn assert_same_ctx(&self, other: &MPoly) {
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx,
            "mpoly varctx mismatch: {:?} vs {:?}",
            self.ctx.names,
            other.ctx.names
        );
    }

    /// Multiply by `v^exp` (shifts every term).
    pub fn times_v_pow(&self, exp: i64) -> MPoly {
        if exp == 0 || self.is_zero() {
            return self.clone();
        }
        let v = self.ctx.v_index().expect("context has no v variable");
        let shift = i32::try_from(exp).expect("v exponent out of range");
        let mut out = MPoly::zero(&self.ctx);
        for (exps, c) in &self.terms {
            let mut e = exps.clone();
            e[v] += shift;
            out.terms.insert(e, c.clone());
        }
        out
    }

    pub fn pow(&self, exp: u32) -> MPoly {
        let mut acc = MPoly::one(&self.ctx);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Range of exponents of `v` over the stored terms, `None` for the zero
    /// polynomial or a context without `v`.
    pub fn v_exponent_range(&self) -> Option<(i32, i32)> {
        let v = self.ctx.v_index()?;
        let mut range: Option<(i32, i32)> = None;
        for exps in self.terms.keys() {
            let e = exps[v];
            range = Some(match range {
                None => (e, e),
                Some((lo, hi)) => (lo.min(e), hi.max(e)),
            });
        }
        range
    }

    /// Partial or total evaluation. Assigned variables are substituted
    /// exactly; unassigned ones remain. Assigning zero to a variable that
    /// carries a negative exponent is an evaluation error.
    pub fn specialize(&self, assign: &BTreeMap<usize, Rat>) -> Result<MPoly> {
        let mut out = MPoly::zero(&self.ctx);
        for (exps, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e = exps.clone();
            for (&idx, val) in assign {
                let exp = e[idx];
                if exp != 0 {
                    coeff *= rat_pow(val, exp as i64)?;
                    e[idx] = 0;
                }
            }
            out.add_term(e, coeff);
        }
        Ok(out)
    }

    /// The value of a constant polynomial, if it is one.
    pub fn try_to_rat(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            let (exps, c) = self.terms.iter().next().unwrap();
            if exps.iter().all(|&e| e == 0) {
                return Some(c.clone());
            }
        }
        None
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.assert_same_ctx(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.assert_same_ctx(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    // exponent vectors add under term multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.assert_same_ctx(rhs);
        let mut out = MPoly::zero(&self.ctx);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        let mut out = MPoly::zero(&self.ctx);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        self.assert_same_ctx(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(idx, &e)| {
                    if e == 1 {
                        self.ctx.name(idx).to_string()
                    } else {
                        format!("{}^{}", self.ctx.name(idx), e)
                    }
                })
                .collect();
            let abs = c.abs();
            let lead = if i == 0 {
                if c.is_negative() { "-" } else { "" }.to_string()
            } else if c.is_negative() {
                " - ".to_string()
            } else {
                " + ".to_string()
            };
            write!(f, "{lead}")?;
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::{rat, rat_int};

    fn ctx2() -> Arc<VarCtx> {
        VarCtx::for_case(1, 1) // x1, y1, v
    }

    #[test]
    fn add_cancels_and_doubles() {
        let ctx = ctx2();
        let x = MPoly::var(&ctx, 0);
        let y = MPoly::var(&ctx, 1);
        let sum = &(&x + &y) + &(&x - &y);
        let expected = &MPoly::constant(&ctx, rat_int(2)) * &x;
        assert_eq!(sum, expected);
    }

    #[test]
    fn difference_of_squares_in_v() {
        let ctx = ctx2();
        let one = MPoly::one(&ctx);
        let xv = &MPoly::var(&ctx, 0) * &MPoly::v_pow(&ctx, 1);
        let prod = &(&one - &xv) * &(&one + &xv);
        let expected = &one - &(&xv * &xv);
        assert_eq!(prod, expected);
    }

    #[test]
    fn mul_by_zero_is_zero() {
        let ctx = ctx2();
        let x = MPoly::var(&ctx, 0);
        let z = MPoly::zero(&ctx);
        assert!((&x * &z).is_zero());
    }

    #[test]
    #[should_panic(expected = "varctx mismatch")]
    fn ctx_mismatch_panics() {
        let a = MPoly::var(&VarCtx::for_case(1, 1), 0);
        let b = MPoly::var(&VarCtx::for_case(2, 1), 0);
        let _ = &a + &b;
    }

    #[test]
    fn specialize_examples() {
        let ctx = ctx2();
        let p = &MPoly::var(&ctx, 0) + &MPoly::var(&ctx, 1);
        let mut assign = BTreeMap::new();
        assign.insert(0, rat(1, 2));
        assign.insert(1, rat(1, 3));
        assert_eq!(p.specialize(&assign).unwrap().try_to_rat(), Some(rat(5, 6)));

        let vinv = MPoly::v_pow(&ctx, -1);
        let mut assign = BTreeMap::new();
        assign.insert(ctx.v_index().unwrap(), rat_int(2));
        assert_eq!(
            vinv.specialize(&assign).unwrap().try_to_rat(),
            Some(rat(1, 2))
        );

        let mut assign = BTreeMap::new();
        assign.insert(ctx.v_index().unwrap(), rat_int(0));
        assert!(vinv.specialize(&assign).is_err());
    }

    #[test]
    fn canonical_form_is_insertion_order_independent() {
        let ctx = ctx2();
        let terms = [
            (vec![1, 0, 0], rat_int(3)),
            (vec![0, 2, 0], rat(1, 2)),
            (vec![1, 1, -2], rat_int(-1)),
        ];
        let mut fwd = MPoly::zero(&ctx);
        for (e, c) in terms.iter() {
            fwd.add_term(e.clone(), c.clone());
        }
        let mut rev = MPoly::zero(&ctx);
        for (e, c) in terms.iter().rev() {
            rev.add_term(e.clone(), c.clone());
        }
        assert_eq!(fwd, rev);
        assert_eq!(fwd.to_string(), rev.to_string());
    }
}
