//! Run reports: a deterministic, schema-stable record of one verification
//! run, renderable as JSON, CSV, or markdown.

use serde::Serialize;

use ramanujan_core::suite::EngineConfig;

pub const SCHEMA_ID: &str = "ramanujan-report/v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Flagged,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
        }
    }
}

/// One verified item. `time_ms` is the only field allowed to differ between
/// identical runs.
#[derive(Debug, Clone, Serialize)]
pub struct ReportItem {
    pub id: String,
    pub n: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub status: Status,
    pub method_lhs: String,
    pub method_rhs: String,
    pub terms: u64,
    pub panels: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed_text: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed_value: Option<f64>,
    pub time_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub source: String,
    pub quad_abs_tol: f64,
    pub series_rel_tol: f64,
    pub g_abs_tol: f64,
    pub identity_tol: f64,
    pub max_series_terms: usize,
    pub max_panels: usize,
}

impl ConfigEcho {
    pub fn new(source: &str, engine: &EngineConfig) -> Self {
        ConfigEcho {
            source: source.to_string(),
            quad_abs_tol: engine.quad_abs_tol,
            series_rel_tol: engine.series_rel_tol,
            g_abs_tol: engine.g_abs_tol,
            identity_tol: engine.identity_tol,
            max_series_terms: engine.max_series_terms,
            max_panels: engine.max_panels,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub schema: String,
    pub suite: String,
    pub config: ConfigEcho,
    pub items: Vec<ReportItem>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(suite: &str, config: ConfigEcho, items: Vec<ReportItem>) -> Self {
        let summary = Summary {
            pass: items.iter().filter(|i| i.status == Status::Pass).count(),
            fail: items.iter().filter(|i| i.status == Status::Fail).count(),
            flagged: items.iter().filter(|i| i.status == Status::Flagged).count(),
        };
        RunReport {
            tool: "ramanujan-cli".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            schema: SCHEMA_ID.to_string(),
            suite: suite.to_string(),
            config,
            items,
            summary,
        }
    }

    pub fn any_failure(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "id,n,lhs,rhs,abs_residual,rel_residual,status,method_lhs,method_rhs,terms,panels,time_ms\n",
        );
        for i in &self.items {
            out.push_str(&format!(
                "{},{},{:.17e},{:.17e},{:.3e},{:.3e},{},{},{},{},{},{:.3}\n",
                i.id,
                i.n,
                i.lhs,
                i.rhs,
                i.abs_residual,
                i.rel_residual,
                i.status.as_str(),
                i.method_lhs,
                i.method_rhs,
                i.terms,
                i.panels,
                i.time_ms
            ));
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!(
            "# {} report\n\n{} pass, {} fail, {} flagged\n\n| id | n | lhs | rhs | residual | status |\n|---|---|---|---|---|---|\n",
            self.suite, self.summary.pass, self.summary.fail, self.summary.flagged
        );
        for i in &self.items {
            out.push_str(&format!(
                "| {} | {} | {:.12} | {:.12} | {:.2e} | {} |\n",
                i.id,
                i.n,
                i.lhs,
                i.rhs,
                i.abs_residual,
                i.status.as_str()
            ));
        }
        out
    }
}
