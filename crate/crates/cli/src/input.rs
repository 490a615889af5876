use std::fs;
use std::io::Read;
use std::path::PathBuf;

use cluster_fpoly::cluster::Matrix;
use serde::{Deserialize, Serialize};

/// One pattern computation request: an exchange matrix, a mutation sequence
/// in 1-based directions, and an optional degree cap for the sum engine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternInput {
    pub n: usize,
    pub rows: Vec<Vec<i64>>,
    pub seq: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<Vec<i64>>,
}

/// Everything that can go wrong in the CLI, with the documented exit code:
/// 2 parse, 3 invalid matrix, 4 identity violation, 5 engine disagreement.
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Core(cluster_fpoly::Error),
    Disagreement(String),
    VerifyFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Core(cluster_fpoly::Error::NotSkewSymmetrizable(_)) => 3,
            CliError::Core(_) => 4,
            CliError::VerifyFailed(_) => 4,
            CliError::Disagreement(_) => 5,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Parse(m) => format!("parse error: {m}"),
            CliError::Core(e) => format!("error: {e}"),
            CliError::Disagreement(m) => format!("engine disagreement: {m}"),
            CliError::VerifyFailed(m) => format!("verification failed: {m}"),
        }
    }
}

impl From<cluster_fpoly::Error> for CliError {
    fn from(e: cluster_fpoly::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

impl PatternInput {
    /// Checks the structural shape of the request (not skew-symmetrizability,
    /// which the core reports separately) and returns the 0-based sequence.
    pub fn validate(&self) -> CliResult<Vec<usize>> {
        if self.n == 0 {
            return Err(CliError::Parse("rank must be positive".into()));
        }
        if self.rows.len() != self.n || self.rows.iter().any(|r| r.len() != self.n) {
            return Err(CliError::Parse(format!(
                "rows must form an {0}x{0} matrix",
                self.n
            )));
        }
        if let Some(cap) = &self.cap {
            if cap.len() != self.n {
                return Err(CliError::Parse(format!(
                    "cap must have length {} to match the rank",
                    self.n
                )));
            }
        }
        self.seq
            .iter()
            .map(|&k| {
                if k == 0 || k > self.n {
                    Err(CliError::Parse(format!(
                        "direction {k} out of range 1..={}",
                        self.n
                    )))
                } else {
                    Ok(k - 1)
                }
            })
            .collect()
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_rows(self.rows.clone())
    }
}

/// Shared input flags: a JSON document (positional path or stdin) or the
/// --matrix/--seq/--cap shorthand.
#[derive(Debug, clap::Args)]
pub struct InputArgs {
    /// Path of a JSON input document ("-" for stdin); omit to use --matrix
    pub file: Option<PathBuf>,
    /// Path of a JSON file holding the matrix rows
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Comma-separated 1-based mutation directions, e.g. 1,2,1
    #[arg(long)]
    pub seq: Option<String>,
    /// Comma-separated degree cap for the sum engine, e.g. 3,4
    #[arg(long)]
    pub cap: Option<String>,
}

fn parse_int_list<T: std::str::FromStr>(s: &str, what: &str) -> CliResult<Vec<T>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<T>()
                .map_err(|_| CliError::Parse(format!("bad {what} entry {p:?}")))
        })
        .collect()
}

impl InputArgs {
    pub fn load(&self) -> CliResult<PatternInput> {
        if let Some(path) = &self.matrix {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
            let rows: Vec<Vec<i64>> = serde_json::from_str(&text)
                .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
            let seq = match &self.seq {
                Some(s) => parse_int_list(s, "seq")?,
                None => Vec::new(),
            };
            let cap = match &self.cap {
                Some(s) => Some(parse_int_list(s, "cap")?),
                None => None,
            };
            return Ok(PatternInput { n: rows.len(), rows, seq, cap });
        }
        let text = match &self.file {
            Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
                .map_err(|e| CliError::Parse(format!("{}: {e}", p.display())))?,
            _ => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
                buf
            }
        };
        serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))
    }
}
