//! The reference Euler product.

use crate::exactalg::TruncSeries;
use crate::Result;

use super::case::CaseSpec;
use super::env::ParamEnv;

/// The local tensor-product L-factor as a truncated series:
/// `prod_{i<=r, j<=m} (1 - x_i^n y_j^n q^{-s})^{-1}` in the plain variable
/// `X = q^{-s}`, or with the cover substitution `s -> ns - (n-1)/2` applied,
/// which turns each factor into `(1 - x_i^n y_j^n X^n v^{n-1})^{-1}`.
pub fn euler_product(case: &CaseSpec, substituted: bool) -> Result<TruncSeries> {
    let env = match case.mode {
        super::Mode::Symbolic => ParamEnv::symbolic(case.r, case.m),
        super::Mode::Specialized => ParamEnv::specialized(case.r, case.m, case.seed),
    };
    euler_product_env(&env, case, substituted)
}

pub(crate) fn euler_product_env(
    env: &ParamEnv,
    case: &CaseSpec,
    substituted: bool,
) -> Result<TruncSeries> {
    let n = case.n as u32;
    let order = case.trunc;
    let xdeg = if substituted { case.n } else { 1 };
    let mut product = TruncSeries::one(env.ctx(), order);
    for i in 0..case.r {
        for j in 0..case.m {
            let mut mono = &env.x_pow(i, n) * &env.y_pow(j, n);
            if substituted {
                mono = &mono * &env.v_pow(case.n as i64 - 1);
            }
            let factor = TruncSeries::one_minus_term(env.ctx(), order, xdeg, &mono).invert()?;
            product = &product * &factor;
        }
    }
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{MPoly, VarCtx};

    #[test]
    fn single_factor_plain() {
        // (r,m,n) = (1,1,1) at order 2: 1 + x1 y1 X + x1^2 y1^2 X^2
        let case = CaseSpec::symbolic(1, 1, 1, 2);
        let got = euler_product(&case, false).unwrap();
        let ctx = VarCtx::for_case(1, 1);
        let x1y1 = &MPoly::var(&ctx, 0) * &MPoly::var(&ctx, 1);
        let mut expected = TruncSeries::one(&ctx, 2);
        expected.add_to_coeff(1, &x1y1);
        expected.add_to_coeff(2, &x1y1.pow(2));
        assert_eq!(got, expected);
    }

    #[test]
    fn order_zero_is_one() {
        let case = CaseSpec::symbolic(2, 3, 2, 0);
        let got = euler_product(&case, true).unwrap();
        assert!(got.coeff(0).is_one());
    }

    #[test]
    fn double_cover_single_factor() {
        // (r,m,n) = (1,1,2) at order 4: 1 + x1^2 y1^2 v X^2 + x1^4 y1^4 v^2 X^4
        let case = CaseSpec::symbolic(1, 1, 2, 4);
        let got = euler_product(&case, true).unwrap();
        let ctx = VarCtx::for_case(1, 1);
        let mono = (&MPoly::var_pow(&ctx, 0, 2) * &MPoly::var_pow(&ctx, 1, 2)).times_v_pow(1);
        let mut expected = TruncSeries::one(&ctx, 4);
        expected.add_to_coeff(2, &mono);
        expected.add_to_coeff(4, &mono.pow(2));
        assert_eq!(got, expected);
        assert!(got.coeff(1).is_zero());
        assert!(got.coeff(3).is_zero());
    }
}
