mod bench;
mod doc;
mod fpoly;
mod input;
mod verify;

use clap::{Parser, Subcommand};

use crate::input::{CliResult, InputArgs};

#[derive(Parser)]
#[command(
    name = "cafp",
    about = "Exact mutation data and F-polynomials of skew-symmetrizable cluster patterns",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the mutation trace: c/g-vector data and exponent tables
    Trace(TraceArgs),
    /// Compute F-polynomials by one or all engines
    Fpoly(fpoly::FpolyArgs),
    /// Run the structural identity suites along the sequence
    Verify(verify::VerifyArgs),
    /// Time every engine on one or more inputs
    Bench(bench::BenchArgs),
}

#[derive(clap::Args)]
struct TraceArgs {
    #[command(flatten)]
    input: InputArgs,
}

fn cmd_trace(args: &TraceArgs) -> CliResult<()> {
    let input = args.input.load()?;
    let seq = input.validate()?;
    let trace = cluster_fpoly::gupta::build_trace(&input.matrix(), &seq)?;
    doc::emit(&doc::ResultDocument {
        d: trace.d.d.clone(),
        trace: Some(doc::TraceDoc::from_trace(&trace)),
        engines: None,
        agreement: None,
        verification: None,
        input,
    });
    Ok(())
}

/// Honors CAFP_THREADS as a cap on batch-verification parallelism.
fn configure_threads() {
    if let Ok(v) = std::env::var("CAFP_THREADS") {
        if let Ok(k) = v.parse::<usize>() {
            if k > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
        }
    }
}

fn main() {
    configure_threads();
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Trace(args) => cmd_trace(args),
        Command::Fpoly(args) => fpoly::cmd_fpoly(args),
        Command::Verify(args) => verify::cmd_verify(args),
        Command::Bench(args) => bench::cmd_bench(args),
    };
    if let Err(e) = outcome {
        eprintln!("{}", e.message());
        std::process::exit(e.exit_code());
    }
}
