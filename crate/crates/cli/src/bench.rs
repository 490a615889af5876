use std::fs;
use std::path::PathBuf;

use clap::ValueEnum;
use cluster_fpoly::gupta::cross_check_engines;

use crate::input::{CliError, CliResult, PatternInput};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Both,
}

#[derive(clap::Args)]
pub struct BenchArgs {
    /// JSON input documents to time, one per file
    #[arg(required = true)]
    files: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

struct Row {
    label: String,
    n: usize,
    len: usize,
    engine: String,
    time_ms: f64,
    terms: usize,
}

pub fn cmd_bench(args: &BenchArgs) -> CliResult<()> {
    let mut rows = Vec::new();
    for path in &args.files {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        let input: PatternInput = serde_json::from_str(&text)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        let seq = input.validate()?;
        let label = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        let report = cross_check_engines(&input.matrix(), &seq)?;
        if !report.agree {
            return Err(CliError::Disagreement(format!("input {label}")));
        }
        for e in &report.engines {
            rows.push(Row {
                label: label.clone(),
                n: input.n,
                len: seq.len(),
                engine: e.name.to_string(),
                time_ms: e.elapsed.as_secs_f64() * 1e3,
                terms: e.poly.num_terms(),
            });
        }
    }

    if matches!(args.format, Format::Text | Format::Both) {
        println!(
            "{:<20} {:>3} {:>4}  {:<15} {:>12} {:>8}",
            "input", "n", "len", "engine", "time_ms", "terms"
        );
        for r in &rows {
            println!(
                "{:<20} {:>3} {:>4}  {:<15} {:>12.3} {:>8}",
                r.label, r.n, r.len, r.engine, r.time_ms, r.terms
            );
        }
    }
    if matches!(args.format, Format::Csv | Format::Both) {
        println!("input,n,len,engine,time_ms,terms");
        for r in &rows {
            println!("{},{},{},{},{:.3},{}", r.label, r.n, r.len, r.engine, r.time_ms, r.terms);
        }
    }
    Ok(())
}
