//! Case descriptions and path selection.

use std::fmt;

use crate::{Error, Result};

/// Whether parameters stay formal variables or are replaced by random
/// rationals drawn from the seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Specialized,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Symbolic => write!(f, "symbolic"),
            Mode::Specialized => write!(f, "specialized"),
        }
    }
}

/// Verification route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    /// Linear-group Whittaker-pair torus sum (`n = 1`, `r < m`) against the
    /// plain Euler product.
    Classical,
    /// Rank-one cover integral (`r = 1`, `nm > 1`) against the substituted
    /// Euler product.
    RankOne,
    /// The generating-function chain (`nm > 1`, any `r`) against the
    /// substituted Euler product.
    Generating,
    /// Two-route consistency at `r = 1`: rank-one sum vs generating chain
    /// vs Euler product.
    Consistency,
    /// Symbolic/specialized agreement under random rational parameters.
    Agreement,
}

impl PathKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PathKind::Classical => "classical",
            PathKind::RankOne => "rank1",
            PathKind::Generating => "generating",
            PathKind::Consistency => "consistency",
            PathKind::Agreement => "agreement",
        }
    }

    pub fn parse(s: &str) -> Option<PathKind> {
        match s {
            "classical" => Some(PathKind::Classical),
            "rank1" => Some(PathKind::RankOne),
            "generating" => Some(PathKind::Generating),
            "consistency" => Some(PathKind::Consistency),
            "agreement" => Some(PathKind::Agreement),
            _ => None,
        }
    }
}

impl fmt::Display for PathKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// One verification case: group sizes, cover degree, truncation order and
/// evaluation mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseSpec {
    pub r: usize,
    pub m: usize,
    pub n: usize,
    pub trunc: usize,
    pub mode: Mode,
    pub seed: u64,
}

impl CaseSpec {
    pub fn symbolic(r: usize, m: usize, n: usize, trunc: usize) -> Self {
        CaseSpec {
            r,
            m,
            n,
            trunc,
            mode: Mode::Symbolic,
            seed: 0,
        }
    }

    pub fn nm(&self) -> usize {
        self.n * self.m
    }

    fn supported_paths() -> &'static str {
        "classical (n=1, r<m), rank1 (r=1, nm>1), generating (nm>1), \
         consistency (r=1, nm>1), agreement (any of the former)"
    }

    /// Checks the standing hypotheses of the requested route.
    pub fn validate_for(&self, path: PathKind) -> Result<()> {
        if self.r < 1 || self.m < 1 || self.n < 1 {
            return Err(Error::UnsupportedPath {
                detail: format!(
                    "sizes must be positive, got (r,m,n)=({},{},{})",
                    self.r, self.m, self.n
                ),
            });
        }
        let ok = match path {
            PathKind::Classical => self.n == 1 && self.r < self.m,
            PathKind::RankOne | PathKind::Consistency => self.r == 1 && self.nm() > 1,
            PathKind::Generating => self.nm() > 1,
            PathKind::Agreement => return self.default_path().map(|_| ()),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedPath {
                detail: format!(
                    "(r,m,n)=({},{},{}) does not satisfy the {} hypotheses; supported paths: {}",
                    self.r,
                    self.m,
                    self.n,
                    path,
                    Self::supported_paths()
                ),
            })
        }
    }

    /// Default route for the case. The linear case (`n = 1`) runs the
    /// classical comparison and requires `r < m`; covers run the rank-one
    /// route when `r = 1` and the generating chain otherwise.
    pub fn default_path(&self) -> Result<PathKind> {
        if self.n == 1 {
            if self.r < self.m {
                return Ok(PathKind::Classical);
            }
            return Err(Error::UnsupportedPath {
                detail: format!(
                    "n=1 requires r<m on the classical path (got r={}, m={}); supported paths: {}",
                    self.r,
                    self.m,
                    Self::supported_paths()
                ),
            });
        }
        if self.nm() > 1 {
            if self.r == 1 {
                Ok(PathKind::RankOne)
            } else {
                Ok(PathKind::Generating)
            }
        } else {
            Err(Error::UnsupportedPath {
                detail: format!(
                    "nm must exceed 1; supported paths: {}",
                    Self::supported_paths()
                ),
            })
        }
    }
}

impl fmt::Display for CaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r={} m={} n={} D={} mode={}",
            self.r, self.m, self.n, self.trunc, self.mode
        )?;
        if self.mode == Mode::Specialized {
            write!(f, " seed={}", self.seed)?;
        }
        Ok(())
    }
}
