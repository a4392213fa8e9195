//! Symmetric-function constructors: complete homogeneous, elementary and
//! Schur polynomials over a chosen subset of context variables.
//!
//! Schur polynomials come in two permanent implementations: the
//! Jacobi–Trudi determinant in complete homogeneous polynomials (the one
//! used by the evaluators) and a direct semistandard-tableau enumeration
//! kept as the independent reference.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::mpoly::{MPoly, VarCtx};
use super::partition::Partition;
use super::rat::Rat;

/// Complete homogeneous symmetric polynomial `h_k` in the selected variables.
pub fn hpoly(ctx: &Arc<VarCtx>, k: u32, vars: &[usize]) -> MPoly {
    hpoly_pow(ctx, k, vars, 1)
}

/// `h_k` evaluated at the `power`-th powers of the selected variables,
/// i.e. `h_k(z_1^power, ..., z_N^power)`.
pub fn hpoly_pow(ctx: &Arc<VarCtx>, k: u32, vars: &[usize], power: u32) -> MPoly {
    if vars.is_empty() {
        return if k == 0 {
            MPoly::one(ctx)
        } else {
            MPoly::zero(ctx)
        };
    }
    let mut out = MPoly::zero(ctx);
    let mut exps = vec![0i32; ctx.num_vars()];
    fn rec(
        out: &mut MPoly,
        ctx: &Arc<VarCtx>,
        vars: &[usize],
        power: u32,
        pos: usize,
        remaining: u32,
        exps: &mut Vec<i32>,
    ) {
        if pos + 1 == vars.len() {
            exps[vars[pos]] = (remaining * power) as i32;
            *out += &MPoly::monomial(ctx, exps.clone(), Rat::one());
            exps[vars[pos]] = 0;
            return;
        }
        for take in 0..=remaining {
            exps[vars[pos]] = (take * power) as i32;
            rec(out, ctx, vars, power, pos + 1, remaining - take, exps);
        }
        exps[vars[pos]] = 0;
    }
    rec(&mut out, ctx, vars, power, 0, k, &mut exps);
    out
}

/// Elementary symmetric polynomial `e_k` in the selected variables.
pub fn epoly(ctx: &Arc<VarCtx>, k: u32, vars: &[usize]) -> MPoly {
    let k = k as usize;
    if k > vars.len() {
        return MPoly::zero(ctx);
    }
    let mut out = MPoly::zero(ctx);
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        out: &mut MPoly,
        ctx: &Arc<VarCtx>,
        vars: &[usize],
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
    ) {
        if chosen.len() == k {
            let mut exps = vec![0i32; ctx.num_vars()];
            for &v in chosen.iter() {
                exps[v] = 1;
            }
            *out += &MPoly::monomial(ctx, exps, Rat::one());
            return;
        }
        for i in start..vars.len() {
            chosen.push(vars[i]);
            rec(out, ctx, vars, k, i + 1, chosen);
            chosen.pop();
        }
    }
    rec(&mut out, ctx, vars, k, 0, &mut chosen);
    out
}

/// Schur polynomial `s_lam` in the selected variables, by the Jacobi–Trudi
/// determinant `det(h_{lam_i - i + j})`.
///
/// Returns the zero polynomial when `lam` has more rows than there are
/// variables (the mathematically correct value).
pub fn schur(ctx: &Arc<VarCtx>, lam: &Partition, vars: &[usize]) -> MPoly {
    let rows = lam.rows();
    if rows == 0 {
        return MPoly::one(ctx);
    }
    if rows > vars.len() {
        return MPoly::zero(ctx);
    }
    let h = |k: i64| -> MPoly {
        if k < 0 {
            MPoly::zero(ctx)
        } else {
            hpoly(ctx, k as u32, vars)
        }
    };
    let mat: Vec<Vec<MPoly>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| h(lam.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    det_poly(ctx, &mat)
}

fn det_poly(ctx: &Arc<VarCtx>, mat: &[Vec<MPoly>]) -> MPoly {
    let n = mat.len();
    if n == 0 {
        return MPoly::one(ctx);
    }
    if n == 1 {
        return mat[0][0].clone();
    }
    // cofactor expansion along the first row
    let mut acc = MPoly::zero(ctx);
    for j in 0..n {
        if mat[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| mat[i][c].clone())
                    .collect()
            })
            .collect();
        let term = &mat[0][j] * &det_poly(ctx, &minor);
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

/// Schur polynomial by direct enumeration of semistandard Young tableaux of
/// shape `lam` with entries in `1..=vars.len()`; rows weakly increase, columns
/// strictly increase. Reference implementation for the determinant route.
pub fn schur_tableaux(ctx: &Arc<VarCtx>, lam: &Partition, vars: &[usize]) -> MPoly {
    let rows = lam.rows();
    if rows == 0 {
        return MPoly::one(ctx);
    }
    let n = vars.len();
    if rows > n {
        return MPoly::zero(ctx);
    }
    let shape: Vec<usize> = (0..rows).map(|i| lam.part(i) as usize).collect();
    let mut tableau: Vec<Vec<usize>> = shape.iter().map(|&w| vec![0; w]).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &w)| (0..w).map(move |c| (r, c)))
        .collect();
    let mut out = MPoly::zero(ctx);
    fn fill(
        out: &mut MPoly,
        ctx: &Arc<VarCtx>,
        vars: &[usize],
        cells: &[(usize, usize)],
        tableau: &mut Vec<Vec<usize>>,
        pos: usize,
    ) {
        if pos == cells.len() {
            let mut exps = vec![0i32; ctx.num_vars()];
            for row in tableau.iter() {
                for &entry in row {
                    exps[vars[entry - 1]] += 1;
                }
            }
            *out += &MPoly::monomial(ctx, exps, Rat::one());
            return;
        }
        let (r, c) = cells[pos];
        let lo_row = if c > 0 { tableau[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { tableau[r - 1][c] + 1 } else { 1 };
        for entry in lo_row.max(lo_col)..=vars.len() {
            tableau[r][c] = entry;
            fill(out, ctx, vars, cells, tableau, pos + 1);
        }
        tableau[r][c] = 0;
    }
    fill(&mut out, ctx, vars, &cells, &mut tableau, 0);
    out
}

/// Scalar `h_k(z_1^power, ..., z_N^power)` at rational values.
pub fn rat_hpoly_pow(k: u32, vals: &[Rat], power: u32) -> Rat {
    if vals.is_empty() {
        return if k == 0 { Rat::one() } else { Rat::zero() };
    }
    let powered: Vec<Rat> = vals
        .iter()
        .map(|z| {
            let mut p = Rat::one();
            for _ in 0..power {
                p *= z;
            }
            p
        })
        .collect();
    // h_k via the recurrence on the number of variables
    fn rec(vals: &[Rat], pos: usize, remaining: u32) -> Rat {
        if pos + 1 == vals.len() {
            let mut p = Rat::one();
            for _ in 0..remaining {
                p *= &vals[pos];
            }
            return p;
        }
        let mut acc = Rat::zero();
        let mut zpow = Rat::one();
        for take in 0..=remaining {
            acc += &zpow * rec(vals, pos + 1, remaining - take);
            zpow *= &vals[pos];
        }
        acc
    }
    rec(&powered, 0, k)
}

/// Scalar Schur value at rational parameters, by the same Jacobi–Trudi
/// determinant evaluated numerically.
pub fn rat_schur(lam: &Partition, vals: &[Rat]) -> Rat {
    let rows = lam.rows();
    if rows == 0 {
        return Rat::one();
    }
    if rows > vals.len() {
        return Rat::zero();
    }
    let h = |k: i64| -> Rat {
        if k < 0 {
            Rat::zero()
        } else {
            rat_hpoly_pow(k as u32, vals, 1)
        }
    };
    let mat: Vec<Vec<Rat>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| h(lam.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    det_rat(&mat)
}

fn det_rat(mat: &[Vec<Rat>]) -> Rat {
    let n = mat.len();
    if n == 0 {
        return Rat::one();
    }
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut acc = Rat::zero();
    for j in 0..n {
        if mat[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rat>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| mat[i][c].clone())
                    .collect()
            })
            .collect();
        let term = &mat[0][j] * det_rat(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::partitions_bounded;
    use crate::exactalg::rat::{rat, rat_int};
    use std::collections::BTreeMap;

    fn ctx_xy(r: usize, m: usize) -> Arc<VarCtx> {
        VarCtx::for_case(r, m)
    }

    #[test]
    fn h_basics() {
        let ctx = ctx_xy(0, 2); // y1, y2, v
        let yvars = [0usize, 1];
        assert!(hpoly(&ctx, 0, &yvars).is_one());
        // h_k in one variable is y1^k
        let single = hpoly(&ctx, 3, &yvars[..1]);
        assert_eq!(single, MPoly::var_pow(&ctx, 0, 3));
        // h_2(y1, y2) = y1^2 + y1 y2 + y2^2
        let h2 = hpoly(&ctx, 2, &yvars);
        let expected = &(&MPoly::var_pow(&ctx, 0, 2) + &MPoly::var_pow(&ctx, 1, 2))
            + &(&MPoly::var(&ctx, 0) * &MPoly::var(&ctx, 1));
        assert_eq!(h2, expected);
    }

    /// Independent derivation of the h_k values: the coefficient of X^k in
    /// `prod_i (1 - y_i X)^{-1}` expanded by series division.
    #[test]
    fn h_from_series_division() {
        use crate::exactalg::TruncSeries;
        let ctx = ctx_xy(0, 3);
        let yvars = [0usize, 1, 2];
        let order = 4usize;
        let mut product = TruncSeries::one(&ctx, order);
        for &y in &yvars {
            let factor = TruncSeries::one_minus_term(&ctx, order, 1, &MPoly::var(&ctx, y))
                .invert()
                .unwrap();
            product = &product * &factor;
        }
        for k in 0..=order {
            assert_eq!(product.coeff(k), &hpoly(&ctx, k as u32, &yvars), "h_{k}");
        }
    }

    #[test]
    fn schur_small_shapes() {
        let ctx = ctx_xy(2, 0); // x1, x2, v
        let xvars = [0usize, 1];
        assert!(schur(&ctx, &Partition::empty(), &xvars).is_one());
        let s1 = schur(&ctx, &Partition::new(vec![1]), &xvars);
        assert_eq!(s1, &MPoly::var(&ctx, 0) + &MPoly::var(&ctx, 1));
        // shape (2,1) in two variables: tableaux 112/2 and 12/2
        let s21 = schur(&ctx, &Partition::new(vec![2, 1]), &xvars);
        let x1 = MPoly::var(&ctx, 0);
        let x2 = MPoly::var(&ctx, 1);
        let expected = &(&(&x1 * &x1) * &x2) + &(&x1 * &(&x2 * &x2));
        assert_eq!(s21, expected);
        assert_eq!(
            s21,
            schur_tableaux(&ctx, &Partition::new(vec![2, 1]), &xvars)
        );
    }

    #[test]
    fn schur_more_rows_than_vars_is_zero() {
        let ctx = ctx_xy(2, 0);
        let lam = Partition::new(vec![1, 1, 1]);
        assert!(schur(&ctx, &lam, &[0, 1]).is_zero());
        assert!(schur_tableaux(&ctx, &lam, &[0, 1]).is_zero());
    }

    #[test]
    fn jacobi_trudi_matches_tableaux() {
        for nvars in 1..=4usize {
            let ctx = ctx_xy(nvars, 0);
            let vars: Vec<usize> = (0..nvars).collect();
            for lam in partitions_bounded(6, 4) {
                let a = schur(&ctx, &lam, &vars);
                let b = schur_tableaux(&ctx, &lam, &vars);
                assert_eq!(a, b, "shape {lam} in {nvars} vars");
            }
        }
    }

    #[test]
    fn pieri_rank_one() {
        let ctx = ctx_xy(3, 0);
        let vars = [0usize, 1, 2];
        let s1 = schur(&ctx, &Partition::new(vec![1]), &vars);
        let lhs = &s1 * &s1;
        let rhs = &schur(&ctx, &Partition::new(vec![2]), &vars)
            + &schur(&ctx, &Partition::new(vec![1, 1]), &vars);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn elementary_basics() {
        let ctx = ctx_xy(3, 0);
        let vars = [0usize, 1, 2];
        assert!(epoly(&ctx, 0, &vars).is_one());
        assert!(epoly(&ctx, 4, &vars).is_zero());
        let e3 = epoly(&ctx, 3, &vars);
        let prod = &(&MPoly::var(&ctx, 0) * &MPoly::var(&ctx, 1)) * &MPoly::var(&ctx, 2);
        assert_eq!(e3, prod);
        // e_2 = s_(1,1)
        assert_eq!(
            epoly(&ctx, 2, &vars),
            schur(&ctx, &Partition::new(vec![1, 1]), &vars)
        );
    }

    #[test]
    fn schur_symmetry_under_specialization() {
        let ctx = ctx_xy(2, 0);
        let s1 = schur(&ctx, &Partition::new(vec![1]), &[0, 1]);
        let mut assign = BTreeMap::new();
        assign.insert(0usize, rat(3, 7));
        assign.insert(1usize, rat(3, 7));
        assert_eq!(
            s1.specialize(&assign).unwrap().try_to_rat(),
            Some(rat(6, 7))
        );
    }

    #[test]
    fn scalar_routes_match_symbolic() {
        let ctx = ctx_xy(3, 0);
        let vars = [0usize, 1, 2];
        let vals = [rat(1, 2), rat(2, 3), rat_int(-3)];
        let mut assign = BTreeMap::new();
        for (i, v) in vals.iter().enumerate() {
            assign.insert(i, v.clone());
        }
        for lam in partitions_bounded(5, 3) {
            let sym = schur(&ctx, &lam, &vars)
                .specialize(&assign)
                .unwrap()
                .try_to_rat()
                .unwrap();
            assert_eq!(sym, rat_schur(&lam, &vals), "shape {lam}");
        }
        for k in 0..=5u32 {
            for pw in 1..=3u32 {
                let sym = hpoly_pow(&ctx, k, &vars, pw)
                    .specialize(&assign)
                    .unwrap()
                    .try_to_rat()
                    .unwrap();
                assert_eq!(sym, rat_hpoly_pow(k, &vals, pw));
            }
        }
    }
}
