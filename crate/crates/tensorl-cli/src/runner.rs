//! Suite execution: maps verification cases and sweep checks onto report
//! entries.

use std::time::Instant;

use tensorl::groupcomb::{exponent_identity_checks, structure_checks, CheckRecord};
use tensorl::zeta::{verify_path, CaseSpec, EvalOptions, PathKind, Status, VerificationReport};

use crate::report::{
    CaseEntry, CheckEntry, MismatchEntry, STATUS_EQUAL, STATUS_ERROR, STATUS_MISMATCH,
    STATUS_PAPER_DISCREPANCY,
};

fn check_entries(records: &[CheckRecord]) -> Vec<CheckEntry> {
    records
        .iter()
        .map(|r| CheckEntry {
            name: r.name.clone(),
            status: if r.pass { "PASS" } else { "FAIL" }.to_string(),
            detail: r.detail.clone(),
        })
        .collect()
}

fn entry_from_report(rep: &VerificationReport) -> CaseEntry {
    CaseEntry {
        r: rep.case.r,
        m: rep.case.m,
        n: rep.case.n,
        order: rep.case.trunc,
        mode: rep.case.mode.to_string(),
        path: rep.path.to_string(),
        status: match rep.status {
            Status::Equal => STATUS_EQUAL,
            Status::Mismatch => STATUS_MISMATCH,
            Status::PaperDiscrepancy => STATUS_PAPER_DISCREPANCY,
        }
        .to_string(),
        mismatches: rep
            .mismatches
            .iter()
            .map(|m| MismatchEntry {
                degree: m.degree,
                diff: m.diff.clone(),
            })
            .collect(),
        intermediate_checks: check_entries(&rep.checks),
        millis: rep.millis as u64,
    }
}

fn error_entry(case: &CaseSpec, path: PathKind, message: String, millis: u64) -> CaseEntry {
    CaseEntry {
        r: case.r,
        m: case.m,
        n: case.n,
        order: case.trunc,
        mode: case.mode.to_string(),
        path: path.to_string(),
        status: STATUS_ERROR.to_string(),
        mismatches: Vec::new(),
        intermediate_checks: vec![CheckEntry {
            name: "internal_error".to_string(),
            status: "FAIL".to_string(),
            detail: message,
        }],
        millis,
    }
}

/// Runs the identity-comparison cases (the theorem suite).
pub fn run_cases(cases: &[(CaseSpec, PathKind)], perturb: bool) -> Vec<CaseEntry> {
    let opts = EvalOptions { perturb };
    cases
        .iter()
        .map(|(case, path)| {
            let start = Instant::now();
            match verify_path(case, *path, &opts) {
                Ok(rep) => entry_from_report(&rep),
                Err(e) => error_entry(
                    case,
                    *path,
                    e.to_string(),
                    start.elapsed().as_millis() as u64,
                ),
            }
        })
        .collect()
}

fn sweep_entry(
    r: usize,
    m: usize,
    n: usize,
    path: &str,
    records: Vec<CheckRecord>,
    millis: u64,
) -> CaseEntry {
    let all_pass = records.iter().all(|c| c.pass);
    CaseEntry {
        r,
        m,
        n,
        order: 0,
        mode: "symbolic".to_string(),
        path: path.to_string(),
        status: if all_pass {
            STATUS_EQUAL
        } else {
            STATUS_PAPER_DISCREPANCY
        }
        .to_string(),
        mismatches: Vec::new(),
        intermediate_checks: check_entries(&records),
        millis,
    }
}

/// Structural suite: Weyl-element and pattern checks for all `(n, m, r)`
/// with `nrm <= bound`.
pub fn run_structure(bound: usize) -> Vec<CaseEntry> {
    let mut out = Vec::new();
    for n in 1..=bound {
        for m in 1..=bound {
            for r in 1..=bound {
                if n * m * r > bound {
                    continue;
                }
                let start = Instant::now();
                let records = structure_checks(n, m, r);
                out.push(sweep_entry(
                    r,
                    m,
                    n,
                    "structure",
                    records,
                    start.elapsed().as_millis() as u64,
                ));
            }
        }
    }
    out
}

/// Exponent-identity suite over the `(r, m, n)` box.
pub fn run_identities(rmax: usize, mmax: usize, nmax: usize) -> Vec<CaseEntry> {
    exponent_identity_checks_box(rmax, mmax, nmax)
        .into_iter()
        .map(|((r, m, n), records, millis)| sweep_entry(r, m, n, "identities", records, millis))
        .collect()
}

#[allow(clippy::type_complexity)]
fn exponent_identity_checks_box(
    rmax: usize,
    mmax: usize,
    nmax: usize,
) -> Vec<((usize, usize, usize), Vec<CheckRecord>, u64)> {
    let mut out = Vec::new();
    for r in 1..=rmax {
        for m in 1..=mmax {
            for n in 1..=nmax {
                let start = Instant::now();
                let records = exponent_identity_checks(r, m, n);
                out.push(((r, m, n), records, start.elapsed().as_millis() as u64));
            }
        }
    }
    out
}
