//! Files, reports and commands on top of `trapgraph-core`.
//!
//! Every subcommand of the `trapgraph` binary is a function here that
//! returns its standard output as a `String`, so tests can drive them
//! without spawning processes.

pub mod bench;
pub mod format;
pub mod report;
pub mod verify;

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;
use trapgraph_core::matching::{self, right_spread_greedy};
use trapgraph_core::oracle::SizeLimit;
use trapgraph_core::TrapezoidDiagram;

use crate::format::FormatError;
use crate::report::AnalysisReport;
use crate::verify::{Fault, VerifyError};

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Verify(VerifyError),
    #[error("{0}")]
    SizeLimit(#[from] SizeLimit),
}

impl Error {
    /// 0 success, 1 input/usage/IO, 2 verification mismatch, 3 size limit.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } | Error::Format { .. } | Error::Usage(_) => 1,
            Error::Verify(VerifyError::Mismatch(_)) => 2,
            Error::Verify(VerifyError::SizeLimit(_)) | Error::SizeLimit(_) => 3,
        }
    }
}

pub fn read_diagram(path: &Path) -> Result<TrapezoidDiagram, Error> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    format::parse(&text).map_err(|source| Error::Format {
        path: path.to_owned(),
        source,
    })
}

/// Writes `.trap` text to `out`, or returns it for standard output.
fn emit(d: &TrapezoidDiagram, out: Option<&Path>) -> Result<String, Error> {
    let text = format::serialize(d);
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|source| Error::Io {
                path: path.to_owned(),
                source,
            })?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

pub fn gen(n: usize, seed: u64, out: Option<&Path>) -> Result<String, Error> {
    if n == 0 {
        return Err(Error::Usage("n must be at least 1".into()));
    }
    emit(&TrapezoidDiagram::random(n, seed), out)
}

pub fn analyze(input: &Path, polynomial: bool, witness: bool) -> Result<String, Error> {
    let d = read_diagram(input)?;
    Ok(AnalysisReport::build(&d, polynomial, witness).to_string())
}

pub fn matching(input: &Path, audit: bool) -> Result<String, Error> {
    let d = read_diagram(input)?;
    if audit {
        let a = matching::audit(&d)?;
        Ok(report::matching_report(d.n(), &a.greedy, Some(&a)))
    } else {
        Ok(report::matching_report(
            d.n(),
            &right_spread_greedy(&d),
            None,
        ))
    }
}

pub fn counterexample(k: usize, out: Option<&Path>) -> Result<String, Error> {
    emit(&matching::counterexample(k), out)
}

pub fn verify(trials: usize, max_n: usize, seed: u64, fault: Fault) -> Result<String, Error> {
    let summary = verify::campaign(trials, max_n, seed, fault).map_err(Error::Verify)?;
    Ok(format!("{summary}\n"))
}

pub fn bench(
    sizes: &[usize],
    selection: bench::Selection,
    runs: usize,
    seed: u64,
) -> Result<String, Error> {
    if sizes.contains(&0) {
        return Err(Error::Usage("sizes must be at least 1".into()));
    }
    let mut out = String::from(bench::HEADER);
    out.push('\n');
    for row in bench::table(sizes, selection, runs, seed) {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    Ok(out)
}
