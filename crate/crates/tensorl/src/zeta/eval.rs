//! Torus-sum evaluators.
//!
//! Each local integral reduces, at the unramified level, to a weighted sum
//! over torus valuations. The evaluators assemble every summand from its
//! constituent factors (Whittaker oracle values, measure factors and
//! modular-character exponents computed by the other modules), assert the
//! degree and v-exponent laws per summand, and accumulate the result into a
//! truncated series in `X = q^{-s}`.

use crate::exactalg::{partitions_bounded, TruncSeries};
use crate::groupcomb::{build_patterns, build_w0};
use crate::groupcomb::{conj_measure_factor, delta_borel, Cochar};
use crate::{Error, Result};

use super::case::{CaseSpec, Mode};
use super::env::ParamEnv;

/// Evaluation switches.
#[derive(Debug, Clone, Copy, Default)]
pub struct EvalOptions {
    /// Corrupts one Whittaker oracle value (the first nontrivial one) so the
    /// comparator provably detects injected errors. Debug aid only.
    pub perturb: bool,
}

pub(crate) fn env_for(case: &CaseSpec) -> ParamEnv {
    match case.mode {
        Mode::Symbolic => ParamEnv::symbolic(case.r, case.m),
        Mode::Specialized => ParamEnv::specialized(case.r, case.m, case.seed),
    }
}

/// The classical torus sum for `n = 1`, `r < m`: over dominant `lam` with
/// nonnegative tail,
/// `delta_B^{-1}(p^lam) * W_x(p^lam) * W_y(diag(p^lam, I)) * q^{-|lam|(s - (m-r)/2)}`.
///
/// The modular-character contributions must cancel exactly; the summand is
/// asserted to carry no net power of `v`, so the coefficient of `X^{|lam|}`
/// is the product of the two Schur values.
pub fn eval_jpss(case: &CaseSpec, opts: &EvalOptions) -> Result<TruncSeries> {
    case.validate_for(super::PathKind::Classical)?;
    let env = env_for(case);
    eval_jpss_env(&env, case, opts)
}

pub(crate) fn eval_jpss_env(
    env: &ParamEnv,
    case: &CaseSpec,
    opts: &EvalOptions,
) -> Result<TruncSeries> {
    let (r, m, order) = (case.r, case.m, case.trunc);
    let mut series = TruncSeries::zero(env.ctx(), order);
    let borel_inv = delta_borel(r).scaled(-1, 1)?;
    for lam in partitions_bounded(order as u32, r) {
        let weight = lam.weight() as usize;
        let lam_r = lam.to_cochar_vals(r);
        let lam_m = lam.to_cochar_vals(m);
        let mut wx = env.cs_x(&lam_r)?;
        if opts.perturb && lam.weight() == 1 {
            wx = &wx + &env.one();
        }
        let wy = env.cs_y(&lam_m)?;
        // delta_B^{-1}(p^lam) and the variable shift q^{|lam|(m-r)/2}
        let borel_exp = borel_inv.eval_v(&Cochar::new(lam_r.clone()));
        let shift_exp = (m as i64 - r as i64) * weight as i64;
        let summand = &(&wx * &wy) * &env.v_pow(borel_exp + shift_exp);
        if env.is_symbolic() && !opts.perturb {
            if let Some((lo, hi)) = summand.v_exponent_range() {
                if lo != 0 || hi != 0 {
                    return Err(Error::internal(
                        "jpss_v_cancellation",
                        format!("net v-exponents ({lo},{hi}) at lam={lam}"),
                    ));
                }
            }
        }
        series.add_to_coeff(weight, &summand);
    }
    Ok(series)
}

/// Ordered tuples of nonnegative integers of length `parts` summing to
/// `total`.
fn compositions(total: usize, parts: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = vec![0i64; parts];
    fn rec(out: &mut Vec<Vec<i64>>, current: &mut Vec<i64>, pos: usize, remaining: usize) {
        if pos + 1 == current.len() {
            current[pos] = remaining as i64;
            out.push(current.clone());
            return;
        }
        for take in 0..=remaining {
            current[pos] = take as i64;
            rec(out, current, pos + 1, remaining - take);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut out, &mut current, 0, total);
    out
}

/// The generating-function chain for `nm > 1`: the sum over
/// `t = diag(p^{n k_1}, ..., p^{n k_r})`, `k_i >= 0`, of
///
/// `chi(t) * alpha(t) * [Levi-factorized value at w0 t0 w0^{-1}]
///  * delta_B^{-1/2}(t) * |t|^{s'}`,
///
/// with `s' = s - (mnr - 2r + 1)/2`. Every summand lands at X-degree
/// `n * sum(k)` and, symbolically, carries net v-exponent
/// `(n-1) * sum(k)` — both are asserted.
pub fn eval_generating(case: &CaseSpec, opts: &EvalOptions) -> Result<TruncSeries> {
    case.validate_for(super::PathKind::Generating)?;
    let env = env_for(case);
    eval_generating_env(&env, case, opts)
}

pub(crate) fn eval_generating_env(
    env: &ParamEnv,
    case: &CaseSpec,
    opts: &EvalOptions,
) -> Result<TruncSeries> {
    let (r, m, n, order) = (case.r, case.m, case.n, case.trunc);
    let nm = n * m;
    let ambient = nm * r;
    let patterns = build_patterns(n, m, r)?;
    let alpha = conj_measure_factor(&patterns.complement);
    let w0 = build_w0(n, m, r)?;
    let borel_half_inv = delta_borel(r).scaled(-1, 2)?;
    let sprime_weight = (m * n * r) as i64 - 2 * r as i64 + 1;

    let mut series = TruncSeries::zero(env.ctx(), order);
    for total in 0..=order / n {
        for k in compositions(total, r) {
            let a_vals: Vec<i64> = k.iter().map(|&ki| ki * n as i64).collect();
            let sum_a: i64 = a_vals.iter().sum();
            let xdeg = sum_a as usize;
            if xdeg != n * total {
                return Err(Error::internal(
                    "x_degree_law",
                    format!("degree {xdeg} != n*sum(k) = {} at k={k:?}", n * total),
                ));
            }

            let chi = env.chi_monomial(&a_vals);
            let mut levi = env.levi(n, r, &a_vals)?;
            if opts.perturb && total == 1 && k[0] == 1 {
                levi = &levi + &env.one();
            }
            let t = Cochar::new(a_vals.clone());
            let t0 = Cochar::embedded(&a_vals, ambient);
            let alpha_exp = alpha.eval_v(&w0.conj_cochar(&t0));
            let borel_exp = borel_half_inv.eval_v(&t);
            let sprime_exp = sum_a * sprime_weight;

            let summand = &(&chi * &levi) * &env.v_pow(alpha_exp + borel_exp + sprime_exp);
            if env.is_symbolic() && !opts.perturb && !summand.is_zero() {
                let want = (n as i64 - 1) * total as i64;
                match summand.v_exponent_range() {
                    Some((lo, hi)) if i64::from(lo) == want && i64::from(hi) == want => {}
                    got => {
                        return Err(Error::internal(
                            "generating_v_exponent",
                            format!("net v-exponents {got:?}, want {want}, at k={k:?}"),
                        ));
                    }
                }
            }
            series.add_to_coeff(xdeg, &summand);
        }
    }
    Ok(series)
}

/// The rank-one integral on the cover (`r = 1`, `nm > 1`): the sum over
/// `k >= 0` of `x_1^k * W(diag(p^k, I_{nm-1})) * q^{-k(s - (nm-1)/2)}`;
/// the Whittaker support forces `k` into `n Z_{>=0}`.
pub fn eval_tensor_rank1(case: &CaseSpec, opts: &EvalOptions) -> Result<TruncSeries> {
    case.validate_for(super::PathKind::RankOne)?;
    let env = env_for(case);
    eval_tensor_rank1_env(&env, case, opts)
}

pub(crate) fn eval_tensor_rank1_env(
    env: &ParamEnv,
    case: &CaseSpec,
    opts: &EvalOptions,
) -> Result<TruncSeries> {
    let (m, n, order) = (case.m, case.n, case.trunc);
    let nm = n * m;
    let mut series = TruncSeries::zero(env.ctx(), order);
    for val in 0..=order {
        if val % n != 0 {
            // off the n-th power support the Whittaker value vanishes
            continue;
        }
        let k = (val / n) as u32;
        let mut w = env.speh(n, k);
        if opts.perturb && k == 1 {
            w = &w + &env.one();
        }
        let shift_exp = val as i64 * (nm as i64 - 1);
        let summand = &(&env.x_pow(0, val as u32) * &w) * &env.v_pow(shift_exp);
        if env.is_symbolic() && !opts.perturb && !summand.is_zero() {
            let want = (n as i64 - 1) * k as i64;
            match summand.v_exponent_range() {
                Some((lo, hi)) if i64::from(lo) == want && i64::from(hi) == want => {}
                got => {
                    return Err(Error::internal(
                        "rank1_v_exponent",
                        format!("net v-exponents {got:?}, want {want}, at valuation {val}"),
                    ));
                }
            }
        }
        series.add_to_coeff(val, &summand);
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{hpoly, MPoly, VarCtx};
    use crate::zeta::euler::euler_product;

    #[test]
    fn jpss_first_coefficients() {
        // (r,m) = (1,2) at order 1: 1 + x1(y1 + y2) X
        let case = CaseSpec::symbolic(1, 2, 1, 1);
        let got = eval_jpss(&case, &EvalOptions::default()).unwrap();
        assert!(got.coeff(0).is_one());
        let ctx = VarCtx::for_case(1, 2);
        let expected = &MPoly::var(&ctx, 0) * &(&MPoly::var(&ctx, 1) + &MPoly::var(&ctx, 2));
        assert_eq!(got.coeff(1), &expected);
    }

    #[test]
    fn jpss_matches_euler_product() {
        // the Cauchy identity in series form
        let case = CaseSpec::symbolic(2, 3, 1, 6);
        let lhs = eval_jpss(&case, &EvalOptions::default()).unwrap();
        let rhs = euler_product(&case, false).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn generating_constant_term_and_linear_case() {
        let case = CaseSpec::symbolic(1, 2, 1, 3);
        let got = eval_generating(&case, &EvalOptions::default()).unwrap();
        assert!(got.coeff(0).is_one());
        let rhs = euler_product(&case, true).unwrap();
        assert_eq!(got, rhs);
    }

    #[test]
    fn generating_metaplectic_case() {
        // (r,m,n) = (2,1,2) at order 8 against the substituted Euler product
        let case = CaseSpec::symbolic(2, 1, 2, 8);
        let lhs = eval_generating(&case, &EvalOptions::default()).unwrap();
        let rhs = euler_product(&case, true).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank1_order_zero_is_one() {
        let case = CaseSpec::symbolic(1, 2, 2, 0);
        let got = eval_tensor_rank1(&case, &EvalOptions::default()).unwrap();
        assert_eq!(got.order(), 0);
        assert!(got.coeff(0).is_one());
    }

    #[test]
    fn rank1_values() {
        // (m,n) = (2,1) at order 2: 1 + x1 h_1(y) X + x1^2 h_2(y) X^2
        let case = CaseSpec::symbolic(1, 2, 1, 2);
        let got = eval_tensor_rank1(&case, &EvalOptions::default()).unwrap();
        let ctx = VarCtx::for_case(1, 2);
        let yvars = [1usize, 2];
        assert!(got.coeff(0).is_one());
        assert_eq!(
            got.coeff(1),
            &(&MPoly::var(&ctx, 0) * &hpoly(&ctx, 1, &yvars))
        );
        assert_eq!(
            got.coeff(2),
            &(&MPoly::var_pow(&ctx, 0, 2) * &hpoly(&ctx, 2, &yvars))
        );
    }

    #[test]
    fn rank1_double_cover_matches_euler() {
        let case = CaseSpec::symbolic(1, 1, 2, 4);
        let got = eval_tensor_rank1(&case, &EvalOptions::default()).unwrap();
        let rhs = euler_product(&case, true).unwrap();
        assert_eq!(got, rhs);
        assert!(got.coeff(1).is_zero());
        assert!(got.coeff(3).is_zero());
    }

    #[test]
    fn perturbation_breaks_equality() {
        let case = CaseSpec::symbolic(1, 2, 1, 3);
        let lhs = eval_jpss(&case, &EvalOptions { perturb: true }).unwrap();
        let rhs = euler_product(&case, false).unwrap();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn compositions_enumerate_ordered_tuples() {
        let c = compositions(2, 2);
        assert_eq!(c, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
    }
}
