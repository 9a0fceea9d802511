use std::collections::BTreeMap;

use oddwheel_core::spectral::{PowerIteration, DEFAULT_MAX_ITER};
use serde::Serialize;

/// Overrides the default tolerance of every command.
pub const TOL_ENV: &str = "ODDWHEEL_TOL";
/// Overrides the power-iteration step budget.
pub const MAX_ITER_ENV: &str = "ODDWHEEL_MAX_ITER";

/// Numeric settings shared by all commands; recorded in every report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Settings {
    pub tol: f64,
    pub max_iter: usize,
    pub seed: u64,
    /// Environment overrides that were set when the run started.
    pub env: BTreeMap<String, String>,
}

impl Settings {
    pub fn new(tol: f64, max_iter: Option<usize>, seed: u64) -> Self {
        Settings { tol, max_iter: max_iter.unwrap_or(DEFAULT_MAX_ITER), seed, env: captured_env() }
    }

    pub fn solver(&self) -> PowerIteration {
        PowerIteration { tol: self.tol, max_iter: self.max_iter }
    }
}

pub fn captured_env() -> BTreeMap<String, String> {
    [TOL_ENV, MAX_ITER_ENV]
        .iter()
        .filter_map(|&k| std::env::var(k).ok().map(|v| (k.to_string(), v)))
        .collect()
}
