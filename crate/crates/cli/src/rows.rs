use fano_chern::catalog::{PairDocument, Positivity};
use fano_chern::checks::IdentityCheck;
use fano_chern::families::{evaluate, minimal_pair, FamilySpec, Status};
use fano_chern::numeric::format_rational;
use serde::Serialize;

use crate::report::CsvRow;

#[derive(Debug, Serialize)]
pub struct Coefficient {
    pub label: String,
    pub value: String,
}

/// One family evaluated at one degree `k`.
#[derive(Debug, Serialize)]
pub struct FamilyRow {
    pub spec: String,
    pub kind: String,
    pub k: Option<u32>,
    pub n: Option<u32>,
    pub degree: u32,
    pub ch_coeffs: Vec<Coefficient>,
    pub verdict: Status,
    pub note: Option<String>,
    pub oracle: Option<Status>,
    pub pair: Option<String>,
    pub twist_class: Option<Vec<String>>,
    pub twist: Option<Positivity>,
    pub agree: bool,
    pub failures: Vec<IdentityCheck>,
}

pub fn family_row(spec: &FamilySpec, degree: u32) -> fano_chern::Result<FamilyRow> {
    let eval = evaluate(spec, degree)?;
    let (k, n) = match spec {
        FamilySpec::CompleteIntersection { n, .. } => (None, Some(*n)),
        other => other.k_n().map_or((None, None), |(k, n)| (Some(k), Some(n))),
    };
    let pair = eval.pair.as_ref();
    Ok(FamilyRow {
        spec: spec.to_string(),
        kind: spec.kind().to_string(),
        k,
        n,
        degree,
        ch_coeffs: eval
            .verdict
            .witnesses
            .iter()
            .map(|(label, c)| Coefficient { label: label.clone(), value: format_rational(c) })
            .collect(),
        verdict: eval.verdict.status,
        note: eval.verdict.note.clone(),
        oracle: eval.oracle,
        pair: pair.map(|p| p.label.clone()),
        twist_class: pair.map(|p| p.twist_class().iter().map(i64::to_string).collect()),
        twist: eval.twist,
        agree: eval.agree(),
        failures: eval.checks.failures().cloned().collect(),
    })
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(ToString::to_string).unwrap_or_default()
}

impl CsvRow for FamilyRow {
    fn header() -> &'static [&'static str] {
        &["kind", "k", "n", "params", "ch_coeffs", "verdict", "oracle", "twist", "agree"]
    }

    fn record(&self) -> Vec<String> {
        let coeffs = if self.ch_coeffs.is_empty() {
            format!("ch{}: fact record", self.degree)
        } else {
            let terms: Vec<String> = self.ch_coeffs.iter().map(|c| format!("{}={}", c.label, c.value)).collect();
            format!("ch{}: {}", self.degree, terms.join(" "))
        };
        vec![
            self.kind.clone(),
            opt(&self.k),
            opt(&self.n),
            self.spec.clone(),
            coeffs,
            self.verdict.to_string(),
            opt(&self.oracle),
            opt(&self.twist),
            self.agree.to_string(),
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct PairItem {
    pub spec: String,
    pub pair: PairDocument,
    pub classification: Option<String>,
}

pub fn pair_item(spec: &FamilySpec) -> fano_chern::Result<PairItem> {
    let pair = minimal_pair(spec)?;
    let classification = if pair.picard_rank() >= 2 && pair.positivity_of_twist() == Positivity::Ample {
        Some(pair.classify()?.to_string())
    } else {
        None
    };
    Ok(PairItem { spec: spec.to_string(), pair: pair.document(), classification })
}

impl CsvRow for PairItem {
    fn header() -> &'static [&'static str] {
        &["params", "label", "dim", "picard_rank", "twist", "twist_positivity", "l_degrees", "classification"]
    }

    fn record(&self) -> Vec<String> {
        vec![
            self.spec.clone(),
            self.pair.label.clone(),
            self.pair.dim.to_string(),
            self.pair.picard_rank.to_string(),
            self.pair.twist.join(" "),
            self.pair.twist_positivity.to_string(),
            self.pair.extremal_l_degrees.join(" "),
            opt(&self.classification),
        ]
    }
}

/// One parameter point of a verification suite.
#[derive(Debug, Serialize)]
pub struct VerifyItem {
    pub suite: String,
    pub at: String,
    pub checks: usize,
    pub failures: Vec<IdentityCheck>,
    pub pass: bool,
}

impl CsvRow for VerifyItem {
    fn header() -> &'static [&'static str] {
        &["suite", "at", "checks", "failures", "pass"]
    }

    fn record(&self) -> Vec<String> {
        vec![self.suite.clone(), self.at.clone(), self.checks.to_string(), self.failures.len().to_string(), self.pass.to_string()]
    }
}
