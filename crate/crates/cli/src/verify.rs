use clap::ValueEnum;
use cluster_fpoly::cluster::{mutate_seed, Matrix, VerificationReport};
use cluster_fpoly::gupta::{build_trace, cross_check_engines, tilde_c, MutationTrace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::doc::{emit, ResultDocument, TraceDoc, VerificationDoc};
use crate::input::{CliError, CliResult, InputArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Dualities,
    Signcoherence,
    Engines,
    Involution,
    Tildec,
}

#[derive(clap::Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Subset of identity suites to run (default: all of them)
    #[arg(long, value_enum, value_delimiter = ',')]
    checks: Vec<Check>,
    /// Verify this many randomly generated patterns instead of one input
    #[arg(long)]
    random: Option<usize>,
    /// RNG seed for --random (printed for reproducibility)
    #[arg(long, default_value_t = 42)]
    rng_seed: u64,
}

fn selected(args: &VerifyArgs) -> Vec<Check> {
    if args.checks.is_empty() {
        vec![
            Check::Dualities,
            Check::Signcoherence,
            Check::Engines,
            Check::Involution,
            Check::Tildec,
        ]
    } else {
        args.checks.clone()
    }
}

/// Runs the selected suites along one mutation sequence. Failures become
/// report entries; only malformed input is an error.
fn run_checks(b: &Matrix, seq: &[usize], checks: &[Check]) -> CliResult<(MutationTrace, VerificationReport)> {
    let trace = build_trace(b, seq)?;
    let mut report = VerificationReport::default();

    if checks.contains(&Check::Dualities) || checks.contains(&Check::Signcoherence) {
        let mut dual_fail: Option<String> = None;
        let mut sign_fail: Option<String> = None;
        for (t, s) in trace.seeds.iter().enumerate() {
            for c in cluster_fpoly::cluster::verify_seed(s).checks {
                if c.passed {
                    continue;
                }
                let slot = if c.name == "sign_coherence" { &mut sign_fail } else { &mut dual_fail };
                if slot.is_none() {
                    *slot = Some(format!("seed {t}, {}: {}", c.name, c.detail));
                }
            }
        }
        let per_seed_ok = format!("all {} seeds pass", trace.seeds.len());
        if checks.contains(&Check::Dualities) {
            report.push("dualities", dual_fail.is_none(), dual_fail.clone().unwrap_or_else(|| per_seed_ok.clone()));
        }
        if checks.contains(&Check::Signcoherence) {
            report.push("sign_coherence", sign_fail.is_none(), sign_fail.unwrap_or(per_seed_ok));
        }
    }

    if checks.contains(&Check::Involution) {
        let mut ok = true;
        let mut detail = format!("{} double mutations return the seed", seq.len());
        for (j, &k) in seq.iter().enumerate() {
            match mutate_seed(&trace.seeds[j + 1], k) {
                Ok(back) if back == trace.seeds[j] => {}
                Ok(_) => {
                    ok = false;
                    detail = format!("step {}: mutating back in direction {} changed the seed", j + 1, k + 1);
                    break;
                }
                Err(e) => {
                    ok = false;
                    detail = format!("step {}: {e}", j + 1);
                    break;
                }
            }
        }
        report.push("involution", ok, detail);
    }

    if checks.contains(&Check::Tildec) {
        match tilde_c(&trace) {
            Ok(cols) => report.push("tilde_c", true, format!("{} columns cross-checked", cols.len())),
            Err(e) => report.push("tilde_c", false, e.to_string()),
        }
    }

    if checks.contains(&Check::Engines) {
        match cross_check_engines(b, seq) {
            Ok(r) => report.push(
                "engines",
                r.agree,
                if r.agree {
                    format!("four engines agree on {} terms", r.polynomial().num_terms())
                } else {
                    "engines disagree".to_string()
                },
            ),
            Err(e) => report.push("engines", false, e.to_string()),
        }
    }

    Ok((trace, report))
}

fn failure_error(report: &VerificationReport) -> CliError {
    let engines_failed = report
        .checks
        .iter()
        .any(|c| c.name == "engines" && !c.passed);
    let names: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.as_str())
        .collect();
    if engines_failed && names.len() == 1 {
        CliError::Disagreement("the four engines produced different F-polynomials".into())
    } else {
        CliError::VerifyFailed(names.join(", "))
    }
}

#[derive(Debug, Serialize)]
struct RandomCaseDoc {
    rows: Vec<Vec<i64>>,
    /// 1-based directions.
    seq: Vec<usize>,
    all_passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    failures: Vec<String>,
}

#[derive(Debug, Serialize)]
struct RandomSummaryDoc {
    rng_seed: u64,
    count: usize,
    all_passed: bool,
    cases: Vec<RandomCaseDoc>,
}

/// Random skew-symmetrizable matrix: choose a symmetrizer first, then keep
/// upper-triangle entries whose mirrored entry stays integral.
fn random_case(rng: &mut ChaCha8Rng) -> (Matrix, Vec<usize>) {
    let n = rng.gen_range(2..=3);
    let d: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
    let mut b = Matrix::zero(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = rng.gen_range(-2..=2i64);
            let mirrored = -d[j] * v;
            if mirrored % d[i] == 0 && (mirrored / d[i]).abs() <= 2 {
                b.set(i, j, v);
                b.set(j, i, mirrored / d[i]);
            }
        }
    }
    let len = rng.gen_range(1..=6);
    let mut seq = Vec::with_capacity(len);
    let mut prev = usize::MAX;
    for _ in 0..len {
        let mut k = rng.gen_range(0..n);
        if k == prev {
            k = (k + 1) % n;
        }
        seq.push(k);
        prev = k;
    }
    (b, seq)
}

fn cmd_verify_random(args: &VerifyArgs, count: usize) -> CliResult<()> {
    let checks = selected(args);
    eprintln!("rng seed {}", args.rng_seed);
    let mut rng = ChaCha8Rng::seed_from_u64(args.rng_seed);
    let cases: Vec<(Matrix, Vec<usize>)> = (0..count).map(|_| random_case(&mut rng)).collect();

    let docs: Vec<RandomCaseDoc> = cases
        .par_iter()
        .map(|(b, seq)| {
            let (passed, failures) = match run_checks(b, seq, &checks) {
                Ok((_, report)) => (
                    report.all_passed(),
                    report
                        .checks
                        .iter()
                        .filter(|c| !c.passed)
                        .map(|c| format!("{}: {}", c.name, c.detail))
                        .collect(),
                ),
                Err(e) => (false, vec![e.message()]),
            };
            RandomCaseDoc {
                rows: b.rows().to_vec(),
                seq: seq.iter().map(|k| k + 1).collect(),
                all_passed: passed,
                failures,
            }
        })
        .collect();

    let failed = docs.iter().filter(|c| !c.all_passed).count();
    emit(&RandomSummaryDoc { rng_seed: args.rng_seed, count, all_passed: failed == 0, cases: docs });
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::VerifyFailed(format!("{failed} of {count} random cases failed")))
    }
}

pub fn cmd_verify(args: &VerifyArgs) -> CliResult<()> {
    if let Some(count) = args.random {
        return cmd_verify_random(args, count);
    }
    let input = args.input.load()?;
    let seq = input.validate()?;
    let (trace, report) = run_checks(&input.matrix(), &seq, &selected(args))?;
    let doc = ResultDocument {
        d: trace.d.d.clone(),
        trace: Some(TraceDoc::from_trace(&trace)),
        engines: None,
        agreement: None,
        verification: Some(VerificationDoc::from_report(&report)),
        input,
    };
    emit(&doc);
    if report.all_passed() {
        Ok(())
    } else {
        Err(failure_error(&report))
    }
}
