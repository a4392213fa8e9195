//! `verify` — batch verification front end.
//!
//! Runs identity suites over a case corpus, emits a deterministic report
//! and upholds the exit-code contract: 0 when nothing mismatched, 1 on any
//! mismatch or internal error, 2 on invalid flags or unsupported cases.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use tensorl::zeta::{fnv1a64_hex, CaseSpec, Mode, PathKind};
use tensorl_cli::corpus::{CorpusFile, DEFAULT_CORPUS};
use tensorl_cli::report::{self, assemble, emit, Format, STATUS_ERROR, STATUS_MISMATCH};
use tensorl_cli::runner;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Identity comparisons from the case corpus (or a single case).
    Theorem1,
    /// Exponent-identity sweep.
    Identities,
    /// Weyl-element and pattern-structure sweep.
    Structure,
    /// Everything.
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Symbolic,
    Specialized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Parser, Debug)]
#[command(name = "verify", version, about = "Exact identity verification suites")]
struct Cli {
    #[arg(value_enum)]
    suite: Suite,

    /// Rank of the first group (single-case mode; requires --m and --n).
    #[arg(long)]
    r: Option<usize>,
    /// Rank of the second group.
    #[arg(long)]
    m: Option<usize>,
    /// Cover degree.
    #[arg(long)]
    n: Option<usize>,
    /// Truncation order (default 6 for a single case).
    #[arg(long)]
    order: Option<usize>,
    /// Parameter mode for a single case.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Seed for specialized parameters.
    #[arg(long)]
    seed: Option<u64>,
    /// Corpus path, or "default" for the built-in corpus.
    #[arg(long, default_value = "default")]
    corpus: String,
    /// Report format.
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Corrupt one oracle value to demonstrate comparator soundness.
    #[arg(long)]
    perturb: bool,
}

const STRUCTURE_BOUND: usize = 24;
const IDENTITY_BOUNDS: (usize, usize, usize) = (5, 5, 4);

fn single_case(cli: &Cli) -> Result<Option<(CaseSpec, PathKind)>, String> {
    if cli.r.is_none() && cli.m.is_none() && cli.n.is_none() {
        return Ok(None);
    }
    let (r, m, n) = match (cli.r, cli.m, cli.n) {
        (Some(r), Some(m), Some(n)) => (r, m, n),
        _ => return Err("single-case mode requires --r, --m and --n together".to_string()),
    };
    let case = CaseSpec {
        r,
        m,
        n,
        trunc: cli.order.unwrap_or(6),
        mode: match cli.mode {
            Some(ModeArg::Specialized) => Mode::Specialized,
            _ => Mode::Symbolic,
        },
        seed: cli.seed.unwrap_or(0),
    };
    let path = case.default_path().map_err(|e| e.to_string())?;
    case.validate_for(path).map_err(|e| e.to_string())?;
    Ok(Some((case, path)))
}

fn load_corpus(cli: &Cli) -> Result<(String, Vec<(CaseSpec, PathKind)>), String> {
    let text = if cli.corpus == "default" {
        DEFAULT_CORPUS.to_string()
    } else {
        fs::read_to_string(&cli.corpus)
            .map_err(|e| format!("cannot read corpus '{}': {e}", cli.corpus))?
    };
    let digest = fnv1a64_hex(text.as_bytes());
    let cases = CorpusFile::parse(&text)?.resolve()?;
    Ok((digest, cases))
}

fn run(cli: &Cli) -> Result<(report::ReportDocument, ExitCode), String> {
    let wants_cases = matches!(cli.suite, Suite::Theorem1 | Suite::All);
    let mut entries = Vec::new();
    let corpus_digest;

    if wants_cases {
        if let Some((case, path)) = single_case(cli)? {
            corpus_digest = fnv1a64_hex(format!("single:{case} path={path}").as_bytes());
            entries.extend(runner::run_cases(&[(case, path)], cli.perturb));
        } else {
            let (digest, cases) = load_corpus(cli)?;
            corpus_digest = digest;
            entries.extend(runner::run_cases(&cases, cli.perturb));
        }
    } else {
        corpus_digest = fnv1a64_hex(b"none");
    }

    if matches!(cli.suite, Suite::Structure | Suite::All) {
        entries.extend(runner::run_structure(STRUCTURE_BOUND));
    }
    if matches!(cli.suite, Suite::Identities | Suite::All) {
        let (rmax, mmax, nmax) = IDENTITY_BOUNDS;
        entries.extend(runner::run_identities(rmax, mmax, nmax));
    }

    let doc = assemble(env!("CARGO_PKG_VERSION"), corpus_digest, entries);
    let failed = doc
        .cases
        .iter()
        .any(|c| c.status == STATUS_MISMATCH || c.status == STATUS_ERROR);
    let code = if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    };
    Ok((doc, code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((doc, code)) => {
            let rendered = emit(
                &doc,
                match cli.format {
                    FormatArg::Text => Format::Text,
                    FormatArg::Structured => Format::Structured,
                },
            );
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, rendered) {
                        eprintln!("error: cannot write report to {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{rendered}"),
            }
            code
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
