use cluster_fpoly::arith::SparsePolynomial;
use cluster_fpoly::cluster::VerificationReport;
use cluster_fpoly::gupta::MutationTrace;
use serde::Serialize;

use crate::input::PatternInput;

/// One polynomial term: exponent vector and decimal coefficient. The
/// coefficient travels as a string so downstream consumers never lose
/// precision to a fixed-width integer type.
#[derive(Debug, Clone, Serialize)]
pub struct Term {
    pub exp: Vec<i64>,
    pub coef: String,
}

pub fn poly_terms(p: &SparsePolynomial) -> Vec<Term> {
    // BTreeMap order is graded-lex ascending already
    p.terms()
        .map(|(e, c)| Term { exp: e.0.clone(), coef: c.to_string() })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct StepDoc {
    /// 1-based step number and mutation direction.
    pub step: usize,
    pub direction: usize,
    pub c: Vec<i64>,
    pub epsilon: i64,
    pub c_plus: Vec<i64>,
    pub c_hat_plus: Vec<i64>,
    pub g: Vec<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceDoc {
    pub steps: Vec<StepDoc>,
    pub e_table: Vec<Vec<i64>>,
    pub a_table: Vec<Vec<i64>>,
}

impl TraceDoc {
    pub fn from_trace(trace: &MutationTrace) -> Self {
        TraceDoc {
            steps: trace
                .steps
                .iter()
                .enumerate()
                .map(|(j, s)| StepDoc {
                    step: j + 1,
                    direction: s.direction + 1,
                    c: s.data.c.clone(),
                    epsilon: s.data.epsilon,
                    c_plus: s.data.c_plus.clone(),
                    c_hat_plus: s.data.c_hat_plus.clone(),
                    g: s.g.clone(),
                })
                .collect(),
            e_table: trace.e_table.clone(),
            a_table: trace.a_table.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EngineDoc {
    pub name: String,
    pub terms: Vec<Term>,
    pub text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncated: Option<bool>,
    /// Present only under --timings, so default documents stay byte-identical
    /// across runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub time_ms: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationDoc {
    pub checks: Vec<CheckDoc>,
    pub all_passed: bool,
}

impl VerificationDoc {
    pub fn from_report(r: &VerificationReport) -> Self {
        VerificationDoc {
            checks: r
                .checks
                .iter()
                .map(|c| CheckDoc {
                    name: c.name.clone(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
            all_passed: r.all_passed(),
        }
    }
}

/// The single output schema shared by trace/fpoly/verify: input echo plus
/// whichever sections the subcommand produced.
#[derive(Debug, Serialize)]
pub struct ResultDocument {
    pub input: PatternInput,
    pub d: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub engines: Option<Vec<EngineDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationDoc>,
}

pub fn emit(doc: &impl Serialize) {
    let out = serde_json::to_string_pretty(doc).expect("document serialization");
    println!("{out}");
}
