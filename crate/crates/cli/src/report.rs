use std::fmt::Write as _;

use logforms::{IntLaurent, IntPoly};
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::InputInfo;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    pub fn skipped(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Skipped,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Settings {
    pub degree_cap: Option<i64>,
    pub seed: u64,
    pub samples: usize,
    pub twist_route: bool,
}

/// Deconing data for `--chart`: the chosen hyperplane becomes the line at
/// infinity.
#[derive(Clone, Debug, Serialize)]
pub struct Chart {
    pub hyperplane: usize,
    pub label: String,
    pub affine_hyperplanes: usize,
    pub description: String,
}

/// Everything a command produces. The JSON form carries no timing so that
/// identical inputs give identical bytes.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input: InputInfo,
    pub settings: Settings,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chart: Option<Chart>,
    pub result: Value,
    pub checks: Vec<Check>,
    /// Names of the results each reported value rests on.
    pub theorems: Vec<String>,
    #[serde(skip)]
    pub summary: Vec<String>,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self, seconds: f64) -> String {
        let mut out = String::new();
        let digest = &self.input.sha256[..12.min(self.input.sha256.len())];
        let _ = writeln!(
            out,
            "{} on {} (l = {}, n = {}, sha256 {digest}…)",
            self.command, self.input.source, self.input.l, self.input.n
        );
        if let Some(c) = &self.chart {
            let _ = writeln!(out, "chart: {}", c.description);
        }
        for line in &self.summary {
            let _ = writeln!(out, "  {line}");
        }
        for c in &self.checks {
            let _ = writeln!(out, "{} {}: {}", c.status.tag(), c.name, c.detail);
        }
        for t in &self.theorems {
            let _ = writeln!(out, "by: {t}");
        }
        let _ = writeln!(out, "time: {seconds:.2} s");
        out
    }
}

/// Coefficients lowest degree first.
pub fn poly_json(p: &IntPoly) -> Value {
    json!(p.coeffs())
}

/// A Laurent polynomial as its lowest degree and the coefficient run from
/// there.
pub fn laurent_json(p: &IntLaurent) -> Value {
    match (p.min_degree(), p.max_degree()) {
        (Some(lo), Some(hi)) => json!({
            "lowest_degree": lo,
            "coefficients": (lo..=hi).map(|e| p.coeff(e)).collect::<Vec<_>>(),
        }),
        _ => json!({ "lowest_degree": 0, "coefficients": [] }),
    }
}

pub fn laurent_text(p: &IntLaurent) -> String {
    let terms: Vec<String> = p
        .terms()
        .map(|(e, c)| match e {
            0 => format!("{c}"),
            1 => format!("{c} t"),
            _ => format!("{c} t^{e}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}
