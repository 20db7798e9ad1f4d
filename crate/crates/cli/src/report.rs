//! Serializable report schema for `hk-poly --json`.

use serde::Serialize;

use reeshk::hkrees::{AdSign, HkMode, HkReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct ReportDoc {
    pub schema_version: u32,
    pub inputs: InputsDoc,
    pub mode: ModeDoc,
    pub samples: Vec<SampleDoc>,
    pub polynomial: PolynomialDoc,
    pub multiplicity: String,
    pub bound_check: BoundDoc,
}

#[derive(Serialize)]
pub struct InputsDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: usize,
    pub dimension: usize,
    pub f_vector: Vec<i64>,
    pub h_vector: Vec<i64>,
    pub multiplicity_e: i64,
}

#[derive(Serialize)]
pub struct ModeDoc {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub postulation: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ad_sign: Option<&'static str>,
    pub s_min: i64,
}

#[derive(Serialize)]
pub struct SampleDoc {
    pub s: i64,
    pub value: String,
}

#[derive(Serialize)]
pub struct PolynomialDoc {
    pub monomial: String,
    pub binomial: String,
    /// Constant term first, exact rationals as strings.
    pub monomial_coefficients: Vec<String>,
    /// Coefficient of `B_k(s) = C(s+k-1, k)` at index `k`.
    pub binomial_coefficients: Vec<String>,
}

#[derive(Serialize)]
pub struct BoundDoc {
    pub leading: String,
    pub bound: String,
    pub equal: bool,
}

impl ReportDoc {
    pub fn new(name: Option<String>, report: &HkReport) -> Self {
        let mode = match report.mode {
            HkMode::CohenMacaulay { postulation } => ModeDoc {
                kind: "cohen-macaulay",
                postulation: Some(postulation),
                delta: None,
                ad_sign: None,
                s_min: report.s_min,
            },
            HkMode::NonCohenMacaulay { delta, ad_sign } => ModeDoc {
                kind: "non-cohen-macaulay",
                postulation: None,
                delta: Some(delta),
                ad_sign: Some(match ad_sign {
                    AdSign::Negative => "negative",
                    AdSign::Zero => "zero",
                }),
                s_min: report.s_min,
            },
        };
        ReportDoc {
            schema_version: SCHEMA_VERSION,
            inputs: InputsDoc {
                name,
                vertices: report.vertex_count,
                dimension: report.fh.d,
                f_vector: report.fh.f.clone(),
                h_vector: report.fh.h.clone(),
                multiplicity_e: report.fh.e,
            },
            mode,
            samples: report
                .samples
                .iter()
                .map(|(s, v)| SampleDoc { s: *s, value: v.to_string() })
                .collect(),
            polynomial: PolynomialDoc {
                monomial: report.polynomial.to_string(),
                binomial: report.binomial.to_string(),
                monomial_coefficients: report
                    .polynomial
                    .coeffs()
                    .iter()
                    .map(|c| c.to_string())
                    .collect(),
                binomial_coefficients: report
                    .binomial
                    .coeffs()
                    .iter()
                    .map(|c| c.to_string())
                    .collect(),
            },
            multiplicity: report.multiplicity.to_string(),
            bound_check: BoundDoc {
                leading: report.bound_check.leading.to_string(),
                bound: report.bound_check.bound.to_string(),
                equal: report.bound_check.equal,
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
