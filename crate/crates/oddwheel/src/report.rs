//! JSON and CSV report formats.
//!
//! Every JSON report is an envelope with a `schema_version`, the command name,
//! the numeric settings, the command-specific `result` and, unless disabled,
//! the wall time in seconds. Floats are rounded to 12 significant digits.

use serde::Serialize;

use oddwheel_core::search::{Optimum, SearchReport};

use crate::settings::Settings;

pub const SCHEMA_VERSION: u32 = 1;

/// `x` rounded to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

pub fn round12_all(xs: &[f64]) -> Vec<f64> {
    xs.iter().copied().map(round12).collect()
}

/// Human-readable float with at most 12 significant digits.
pub fn fmt12(x: f64) -> String {
    format!("{}", round12(x))
}

#[derive(Debug, Clone, Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub schema_version: u32,
    pub command: &'a str,
    pub settings: &'a Settings,
    pub result: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time: Option<f64>,
}

impl<'a, T: Serialize> Envelope<'a, T> {
    pub fn new(command: &'a str, settings: &'a Settings, result: T, wall_time: Option<f64>) -> Self {
        Envelope { schema_version: SCHEMA_VERSION, command, settings, result, wall_time: wall_time.map(round12) }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum OptimumJson {
    Exact(u64),
    Real { value: f64, tol: f64 },
}

impl From<Optimum> for OptimumJson {
    fn from(o: Optimum) -> Self {
        match o {
            Optimum::Exact(v) => OptimumJson::Exact(v),
            Optimum::Real { value, tol } => OptimumJson::Real { value: round12(value), tol },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReportJson {
    pub n: usize,
    pub k: usize,
    pub objective: &'static str,
    pub optimum: OptimumJson,
    pub argmax: Vec<String>,
    pub graphs_scanned: u64,
    pub wheel_free_count: u64,
    pub isomorph_reduced: bool,
}

impl From<&SearchReport> for SearchReportJson {
    fn from(r: &SearchReport) -> Self {
        SearchReportJson {
            n: r.n,
            k: r.k,
            objective: r.objective.as_str(),
            optimum: r.optimum.into(),
            argmax: r.argmax.clone(),
            graphs_scanned: r.graphs_scanned,
            wheel_free_count: r.wheel_free_count,
            isomorph_reduced: r.isomorph_reduced,
        }
    }
}

/// Full JSON document for a search run.
pub fn search_json(report: &SearchReport, settings: &Settings, wall_time: Option<f64>) -> String {
    Envelope::new("bruteforce", settings, SearchReportJson::from(report), wall_time).to_json()
}

pub const SEARCH_CSV_HEADER: &str = "n,k,objective,optimum,argmax_count,graphs_scanned,wheel_free_count,isomorph_reduced,wall_time";

/// One CSV summary row (no trailing newline); `wall_time` is empty when absent.
pub fn search_csv_row(r: &SearchReport, wall_time: Option<f64>) -> String {
    let optimum = match r.optimum {
        Optimum::Exact(v) => v.to_string(),
        Optimum::Real { value, .. } => fmt12(value),
    };
    format!(
        "{},{},{},{},{},{},{},{},{}",
        r.n,
        r.k,
        r.objective.as_str(),
        optimum,
        r.argmax.len(),
        r.graphs_scanned,
        r.wheel_free_count,
        r.isomorph_reduced,
        wall_time.map(fmt12).unwrap_or_default()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round12(4.328031289495609), 4.3280312895);
        assert_eq!(round12(1.0 / 3.0), 0.333333333333);
        assert_eq!(round12(0.0), 0.0);
        assert_eq!(fmt12(9.000000000000002), "9");
        assert_eq!(round12(123456789012345.0), 123456789012000.0);
    }

    #[test]
    fn envelope_omits_missing_time() {
        let s = Settings { tol: 1e-9, max_iter: 10, seed: 0, env: Default::default() };
        let json = Envelope::new("x", &s, 1u8, None).to_json();
        assert!(!json.contains("wall_time"));
        assert!(json.contains("\"schema_version\": 1"));
        let json = Envelope::new("x", &s, 1u8, Some(0.5)).to_json();
        assert!(json.contains("\"wall_time\": 0.5"));
    }
}
