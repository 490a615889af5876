use num_rational::Ratio;
use num_traits::One;

use crate::cluster::seed::{inner_product_d, tropical_sign, SeedState};

/// Outcome of one structural identity check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(CheckResult { name: name.to_string(), passed, detail });
    }
}

/// Checks the structural identities of a seed: first duality G_t·B_t =
/// B0·C_t, the δ-pairing form of second duality (g_i, d_j·c_j)_D = δ_ij,
/// sign-coherence of every C-column, and constant term 1 with nonnegative
/// exponents for every F-polynomial. Failures are report entries, not
/// errors.
pub fn verify_seed(s: &SeedState) -> VerificationReport {
    let n = s.rank();
    let mut report = VerificationReport::default();

    let lhs = s.g.matmul(&s.b);
    let rhs = s.b0.matmul(&s.c);
    report.push(
        "first_duality",
        lhs == rhs,
        if lhs == rhs {
            "G_t*B_t = B0*C_t".to_string()
        } else {
            format!("G_t*B_t = {lhs:?} but B0*C_t = {rhs:?}")
        },
    );

    let mut delta_ok = true;
    let mut delta_detail = String::from("(g_i, d_j c_j)_D = delta_ij");
    'outer: for i in 0..n {
        for j in 0..n {
            let val = inner_product_d(&s.g.column(i), &s.c.column(j), &s.d, s.d.d[j]);
            let expect = Ratio::from_integer(i64::from(i == j));
            if val != expect {
                delta_ok = false;
                delta_detail = format!(
                    "(g_{}, d_{} c_{})_D = {} expected {}",
                    i + 1,
                    j + 1,
                    j + 1,
                    val,
                    expect
                );
                break 'outer;
            }
        }
    }
    report.push("second_duality", delta_ok, delta_detail);

    let mut sc_ok = true;
    let mut sc_detail = String::from("every C-column has a uniform sign");
    for j in 0..n {
        if let Err(e) = tropical_sign(&s.c.column(j)) {
            sc_ok = false;
            sc_detail = format!("column {}: {e}", j + 1);
            break;
        }
    }
    report.push("sign_coherence", sc_ok, sc_detail);

    let mut f_ok = true;
    let mut f_detail = String::from("every F_i is a polynomial with constant term 1");
    for (i, f) in s.f.iter().enumerate() {
        if !f.constant_term().is_one() || !f.is_polynomial() {
            f_ok = false;
            f_detail = format!("F_{} = {f}", i + 1);
            break;
        }
    }
    report.push("f_constant_term", f_ok, f_detail);

    report
}
