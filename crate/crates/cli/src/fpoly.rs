use std::time::Instant;

use clap::ValueEnum;
use cluster_fpoly::arith::ExponentVector;
use cluster_fpoly::fg::q_composite_f;
use cluster_fpoly::gupta::{build_trace, cross_check_engines, f_product, f_sum};

use crate::doc::{emit, poly_terms, EngineDoc, ResultDocument, TraceDoc};
use crate::input::{CliError, CliResult, InputArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recurrence,
    Product,
    Sum,
    Fg,
    All,
}

#[derive(clap::Args)]
pub struct FpolyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Engine to run (default: all, with an agreement verdict)
    #[arg(long, value_enum, default_value_t = Method::All)]
    method: Method,
    /// Include per-engine wall time in the document
    #[arg(long)]
    timings: bool,
}

pub fn cmd_fpoly(args: &FpolyArgs) -> CliResult<()> {
    let input = args.input.load()?;
    let seq = input.validate()?;
    let b = input.matrix();
    let trace = build_trace(&b, &seq)?;
    let fin = trace.final_direction().unwrap_or(0);

    let mut engines = Vec::new();
    let mut agreement = None;
    match args.method {
        Method::All => {
            let report = cross_check_engines(&b, &seq)?;
            for e in &report.engines {
                engines.push(EngineDoc {
                    name: e.name.to_string(),
                    terms: poly_terms(&e.poly),
                    text: e.poly.render(),
                    truncated: None,
                    time_ms: args.timings.then(|| e.elapsed.as_secs_f64() * 1e3),
                });
            }
            agreement = Some(if report.agree { "agree" } else { "disagree" }.to_string());
            if !report.agree {
                emit_doc(&input, &trace, engines, agreement);
                return Err(CliError::Disagreement(
                    "the four engines produced different F-polynomials".into(),
                ));
            }
        }
        Method::Recurrence => {
            let t = Instant::now();
            let f = trace.recurrence_f(fin).clone();
            engines.push(engine_doc("recurrence", &f, None, args.timings, t));
        }
        Method::Product => {
            let t = Instant::now();
            let f = f_product(&trace, fin)?;
            engines.push(engine_doc("product", &f, None, args.timings, t));
        }
        Method::Sum => {
            // without an explicit cap, the recurrence result's degree vector
            // bounds the tuple search exactly
            let t = Instant::now();
            let cap = match &input.cap {
                Some(c) => ExponentVector::new(c.clone()),
                None => trace.recurrence_f(fin).degree_vector(),
            };
            let s = f_sum(&trace, &cap);
            engines.push(engine_doc("sum", &s.poly, Some(s.truncated), args.timings, t));
        }
        Method::Fg => {
            let t = Instant::now();
            let f = q_composite_f(&trace, fin)?;
            engines.push(engine_doc("fock-goncharov", &f, None, args.timings, t));
        }
    }
    emit_doc(&input, &trace, engines, agreement);
    Ok(())
}

fn engine_doc(
    name: &str,
    f: &cluster_fpoly::arith::SparsePolynomial,
    truncated: Option<bool>,
    timings: bool,
    started: Instant,
) -> EngineDoc {
    EngineDoc {
        name: name.to_string(),
        terms: poly_terms(f),
        text: f.render(),
        truncated,
        time_ms: timings.then(|| started.elapsed().as_secs_f64() * 1e3),
    }
}

fn emit_doc(
    input: &crate::input::PatternInput,
    trace: &cluster_fpoly::gupta::MutationTrace,
    engines: Vec<EngineDoc>,
    agreement: Option<String>,
) {
    emit(&ResultDocument {
        input: input.clone(),
        d: trace.d.d.clone(),
        trace: Some(TraceDoc::from_trace(trace)),
        engines: Some(engines),
        agreement,
        verification: None,
    });
}
