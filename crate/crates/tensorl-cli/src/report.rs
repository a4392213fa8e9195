//! Report document: deterministic serialization, digests and summaries.

use serde::{Deserialize, Serialize};

use tensorl::zeta::fnv1a64_hex;

/// Full run report. The structured rendering is byte-stable across runs for
/// identical inputs once timing fields are normalized away; `comparison
/// digest` always refers to the normalized payload.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub corpus_digest: String,
    pub cases: Vec<CaseEntry>,
    pub summary: Summary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseEntry {
    pub r: usize,
    pub m: usize,
    pub n: usize,
    pub order: usize,
    pub mode: String,
    pub path: String,
    pub status: String,
    pub mismatches: Vec<MismatchEntry>,
    pub intermediate_checks: Vec<CheckEntry>,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchEntry {
    pub degree: usize,
    pub diff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: String,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub equal: usize,
    pub mismatch: usize,
    pub paper_discrepancy: usize,
    pub error: usize,
}

pub const STATUS_EQUAL: &str = "EQUAL";
pub const STATUS_MISMATCH: &str = "MISMATCH";
pub const STATUS_PAPER_DISCREPANCY: &str = "PAPER_DISCREPANCY";
pub const STATUS_ERROR: &str = "ERROR";

/// Tallies entry statuses; the summary always equals this tally.
pub fn summarize(cases: &[CaseEntry]) -> Summary {
    let mut s = Summary::default();
    for c in cases {
        match c.status.as_str() {
            STATUS_EQUAL => s.equal += 1,
            STATUS_MISMATCH => s.mismatch += 1,
            STATUS_PAPER_DISCREPANCY => s.paper_discrepancy += 1,
            _ => s.error += 1,
        }
    }
    s
}

pub fn assemble(version: &str, corpus_digest: String, cases: Vec<CaseEntry>) -> ReportDocument {
    let summary = summarize(&cases);
    ReportDocument {
        version: version.to_string(),
        corpus_digest,
        cases,
        summary,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

/// Deterministic serialization of the report.
pub fn emit(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Structured => serde_json::to_string_pretty(doc).expect("report serializes") + "\n",
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "engine {}  corpus {}\n",
                doc.version, doc.corpus_digest
            ));
            for c in &doc.cases {
                out.push_str(&format!(
                    "[{}] r={} m={} n={} D={} mode={} path={} ({} ms)\n",
                    c.status, c.r, c.m, c.n, c.order, c.mode, c.path, c.millis
                ));
                for mm in &c.mismatches {
                    out.push_str(&format!("    X^{}: {}\n", mm.degree, mm.diff));
                }
                for ck in &c.intermediate_checks {
                    if ck.status != "PASS" || !c.mismatches.is_empty() {
                        out.push_str(&format!(
                            "    check {} = {}: {}\n",
                            ck.name, ck.status, ck.detail
                        ));
                    }
                }
            }
            out.push_str(&format!(
                "summary: {} equal, {} mismatch, {} paper-discrepancy, {} error\n",
                doc.summary.equal,
                doc.summary.mismatch,
                doc.summary.paper_discrepancy,
                doc.summary.error
            ));
            out
        }
    }
}

/// Parses a structured report.
pub fn parse(s: &str) -> Result<ReportDocument, serde_json::Error> {
    serde_json::from_str(s)
}

/// Copy with timing fields zeroed; this is the comparison payload used for
/// digests, baselines and determinism checks.
pub fn normalized(doc: &ReportDocument) -> ReportDocument {
    let mut d = doc.clone();
    for c in &mut d.cases {
        c.millis = 0;
    }
    d
}

/// Digest of the normalized structured payload.
pub fn comparison_digest(doc: &ReportDocument) -> String {
    fnv1a64_hex(emit(&normalized(doc), Format::Structured).as_bytes())
}
