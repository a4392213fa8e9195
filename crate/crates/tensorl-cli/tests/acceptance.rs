//! Acceptance suite: every exit criterion as one test, coefficient-exact
//! (zero tolerance), printing one pass/fail line per criterion.
//!
//! Run with `cargo test -p tensorl-cli --test acceptance -- --nocapture`
//! to see the lines.

use std::process::Command;
use std::time::{Duration, Instant};

use tensorl::exactalg::{MPoly, TruncSeries, VarCtx};
use tensorl::groupcomb::{exponent_identity_checks, structure_checks};
use tensorl::whittaker::{cs_value, speh_rank1_value, SatakeParams};
use tensorl::zeta::{
    verify_agreement, verify_consistency_rank1, verify_path, verify_theorem1, CaseSpec,
    EvalOptions, PathKind, Status,
};
use tensorl_cli::report;

fn pass(line: &str) {
    println!("PASS  {line}");
}

#[test]
fn criterion_1_linear_theorem_cases() {
    let opts = EvalOptions::default();
    for (r, m) in [(1usize, 2usize), (1, 3), (2, 3), (2, 4), (3, 4)] {
        let case = CaseSpec::symbolic(r, m, 1, 6);
        let start = Instant::now();
        let rep = verify_theorem1(&case, &opts).expect("case is supported");
        let took = start.elapsed();
        assert_eq!(rep.path, PathKind::Classical);
        assert_eq!(
            rep.status,
            Status::Equal,
            "(r,m)=({r},{m}): {:?}",
            rep.mismatches
        );
        assert!(
            took < Duration::from_secs(60),
            "(r,m)=({r},{m}) took {took:?}"
        );
    }
    pass("theorem (n=1): classical torus sum equals the Euler product for (r,m) in {(1,2),(1,3),(2,3),(2,4),(3,4)} at D=6");
}

#[test]
fn criterion_2_generating_chain_metaplectic_cases() {
    let opts = EvalOptions::default();
    let cases = [
        (1usize, 1usize, 2usize, 8usize),
        (1, 2, 2, 8),
        (2, 1, 2, 8),
        (2, 2, 2, 8),
        (1, 1, 3, 9),
        (1, 3, 2, 8),
        (3, 1, 2, 8),
    ];
    for (r, m, n, d) in cases {
        let case = CaseSpec::symbolic(r, m, n, d);
        let start = Instant::now();
        let rep = verify_path(&case, PathKind::Generating, &opts).expect("supported");
        let took = start.elapsed();
        assert_eq!(
            rep.status,
            Status::Equal,
            "(r,m,n)=({r},{m},{n}): {:?}",
            rep.mismatches
        );
        assert!(rep.checks.iter().all(|c| c.pass), "(r,m,n)=({r},{m},{n})");
        assert!(
            took < Duration::from_secs(120),
            "(r,m,n)=({r},{m},{n}) took {took:?}"
        );
    }
    pass("generating chain: torus sum equals the substituted Euler product for the seven cover cases at D=8 (D=9 for n=3)");
}

#[test]
fn criterion_3_two_route_consistency_rank_one() {
    let opts = EvalOptions::default();
    for (m, n) in [(2usize, 1usize), (1, 2), (2, 2), (3, 2), (1, 3)] {
        let case = CaseSpec::symbolic(1, m, n, 8);
        let rep = verify_consistency_rank1(&case, &opts).expect("supported");
        assert_eq!(
            rep.status,
            Status::Equal,
            "(m,n)=({m},{n}): {:?}",
            rep.mismatches
        );
    }
    pass("two-route consistency at r=1: rank-one integral = generating chain = Euler product for (m,n) in {(2,1),(1,2),(2,2),(3,2),(1,3)} at D=8");
}

#[test]
fn criterion_4_rank_one_oracle_cross_checks() {
    // cover degree 1 against the Casselman-Shalika values
    for m in 1..=4usize {
        if m < 2 {
            continue; // nm > 1 required
        }
        let ctx = VarCtx::for_case(1, m);
        let yvars: Vec<usize> = (1..=m).collect();
        let tau = SatakeParams::new(yvars, 1);
        for k in 0..=6u32 {
            let speh = speh_rank1_value(&ctx, &tau, k);
            let mut lam = vec![0i64; m];
            lam[0] = k as i64;
            let cs = cs_value(&ctx, &tau, &lam).unwrap();
            assert_eq!(speh, cs, "m={m} k={k}");
        }
    }
    // the generating identity, by independent series division, at D=12
    for m in 1..=3usize {
        for n in 1..=3usize {
            if n * m <= 1 {
                continue;
            }
            let ctx = VarCtx::for_case(1, m);
            let tau = SatakeParams::new((1..=m).collect(), n as u32);
            let order = 12usize;
            let mut product = TruncSeries::one(&ctx, order);
            for j in 1..=m {
                let mono = (&MPoly::var_pow(&ctx, 0, n as u32)
                    * &MPoly::var_pow(&ctx, j, n as u32))
                    .times_v_pow(n as i64 - 1);
                let factor = TruncSeries::one_minus_term(&ctx, order, n, &mono)
                    .invert()
                    .unwrap();
                product = &product * &factor;
            }
            for d in 0..=order {
                if d % n == 0 {
                    let k = (d / n) as u32;
                    let expected = (&MPoly::var_pow(&ctx, 0, n as u32 * k)
                        * &speh_rank1_value(&ctx, &tau, k))
                        .times_v_pow((n * k as usize) as i64 * (n as i64 * m as i64 - 1));
                    assert_eq!(product.coeff(d), &expected, "m={m} n={n} degree {d}");
                } else {
                    assert!(product.coeff(d).is_zero(), "m={m} n={n} degree {d}");
                }
            }
        }
    }
    pass("rank-one oracle: cover-1 values match Casselman-Shalika (m<=4, k<=6); generating identity by series division (m,n<=3, D=12)");
}

#[test]
fn criterion_5_structural_suite() {
    let start = Instant::now();
    let mut count = 0usize;
    for n in 1..=24usize {
        for m in 1..=24usize {
            for r in 1..=24usize {
                if n * m * r > 24 {
                    continue;
                }
                count += 1;
                let full = n * m * r <= 18;
                for rec in structure_checks(n, m, r) {
                    if !full
                        && (rec.name.starts_with("whittaker")
                            || rec.name.starts_with("measure")
                            || rec.name.starts_with("complement"))
                    {
                        continue;
                    }
                    assert!(rec.pass, "({n},{m},{r}) {}: {}", rec.name, rec.detail);
                }
            }
        }
    }
    let took = start.elapsed();
    assert!(
        took < Duration::from_secs(10),
        "structural suite took {took:?}"
    );
    pass(&format!(
        "structural suite: bijectivity and interleaving to nrm<=24, split partition and measure-factor closed form to nrm<=18 ({count} cases in {took:?})"
    ));
}

#[test]
fn criterion_6_exponent_identity_suite() {
    let mut discrepancies = Vec::new();
    for r in 1..=5usize {
        for m in 1..=5usize {
            for n in 1..=4usize {
                for rec in exponent_identity_checks(r, m, n) {
                    if !rec.pass {
                        discrepancies.push(((r, m, n), rec));
                    }
                }
            }
        }
    }
    // failures surface as PAPER_DISCREPANCY entries rather than aborting;
    // with the resolved parabolic convention the checks all hold
    if !discrepancies.is_empty() {
        for ((r, m, n), rec) in &discrepancies {
            println!(
                "PAPER_DISCREPANCY  ({r},{m},{n}) {}: {}",
                rec.name, rec.detail
            );
        }
    }
    assert!(
        discrepancies.is_empty(),
        "{} exponent-identity discrepancies",
        discrepancies.len()
    );
    pass("exponent identities: torus collapse and central twist exponents as linear forms for 1<=r,m<=5, 1<=n<=4 (100 cases, 0 discrepancies)");
}

#[test]
fn criterion_7_comparator_soundness_via_perturbation() {
    let out = Command::new(env!("CARGO_BIN_EXE_verify"))
        .args([
            "theorem1",
            "--r",
            "1",
            "--m",
            "2",
            "--n",
            "1",
            "--order",
            "6",
            "--perturb",
            "--format",
            "structured",
        ])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1), "perturbed run must exit 1");
    let doc = report::parse(&String::from_utf8_lossy(&out.stdout)).expect("structured report");
    let mismatched = doc
        .cases
        .iter()
        .filter(|c| c.status == report::STATUS_MISMATCH)
        .count();
    assert!(mismatched >= 1, "perturbation must surface as MISMATCH");
    assert!(doc.summary.mismatch >= 1);
    pass("comparator soundness: --perturb corrupts one oracle value, at least one MISMATCH is reported and the exit code is 1");
}

#[test]
fn criterion_8_symbolic_specialized_agreement() {
    let opts = EvalOptions::default();
    for (r, m) in [(1usize, 2usize), (1, 3), (2, 3), (2, 4), (3, 4)] {
        let mut case = CaseSpec::symbolic(r, m, 1, 6);
        case.seed = 1000 + (r * 10 + m) as u64;
        let rep = verify_agreement(&case, &opts, 20).expect("supported");
        assert_eq!(
            rep.status,
            Status::Equal,
            "(r,m)=({r},{m}): {:?}",
            rep.mismatches
        );
        assert!(rep.checks.iter().all(|c| c.pass));
    }
    pass("symbolic/specialized agreement: 20 random rational specializations per linear theorem case match the specialized symbolic series");
}
