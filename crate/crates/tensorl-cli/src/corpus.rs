//! Case corpus files: plain JSON, fully validated before any evaluation.

use serde::{Deserialize, Serialize};

use tensorl::zeta::{CaseSpec, Mode, PathKind};

/// Built-in corpus covering the standard verification matrix.
pub const DEFAULT_CORPUS: &str = include_str!("../data/default_corpus.json");

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusFile {
    pub defaults: Defaults,
    pub cases: Vec<CorpusCase>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Defaults {
    pub order: usize,
    pub mode: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusCase {
    pub r: usize,
    pub m: usize,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    match s {
        "symbolic" => Ok(Mode::Symbolic),
        "specialized" => Ok(Mode::Specialized),
        other => Err(format!("unknown mode '{other}'")),
    }
}

impl CorpusFile {
    pub fn parse(text: &str) -> Result<CorpusFile, String> {
        serde_json::from_str(text).map_err(|e| format!("corpus parse error: {e}"))
    }

    /// Resolves every case against the defaults and validates it for its
    /// route. All cases must validate before any evaluation starts.
    pub fn resolve(&self) -> Result<Vec<(CaseSpec, PathKind)>, String> {
        let default_mode = parse_mode(&self.defaults.mode)?;
        let mut out = Vec::with_capacity(self.cases.len());
        for (idx, c) in self.cases.iter().enumerate() {
            let mode = match &c.mode {
                Some(s) => parse_mode(s).map_err(|e| format!("case {idx}: {e}"))?,
                None => default_mode,
            };
            let case = CaseSpec {
                r: c.r,
                m: c.m,
                n: c.n,
                trunc: c.order.unwrap_or(self.defaults.order),
                mode,
                seed: c.seed.unwrap_or(0),
            };
            let path = match &c.path {
                Some(p) => {
                    PathKind::parse(p).ok_or_else(|| format!("case {idx}: unknown path '{p}'"))?
                }
                None => case
                    .default_path()
                    .map_err(|e| format!("case {idx}: {e}"))?,
            };
            case.validate_for(path)
                .map_err(|e| format!("case {idx}: {e}"))?;
            out.push((case, path));
        }
        Ok(out)
    }
}
