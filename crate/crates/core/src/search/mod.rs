//! Exhaustive oracles for `ex(n, W_{2k+1})` and `spex(n, W_{2k+1})` at tiny
//! `n`, and a deterministic spectral hill-climb for medium `n`.
//!
//! The brute forces are split into shard-local passes ([`run_shard`]) and an
//! associative, commutative merge ([`ShardOutcome::merge`]), so any
//! partition of the work reproduces the single-shard report bit for bit.
//! Objectives are only evaluated on saturated graphs (no edge can be added
//! without a wheel): both objectives are monotone under edge addition, and a
//! graph attaining either maximum is saturated. Spectral radii are computed on
//! the canonical relabeling so every shard sees identical floating-point values.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::canon::{canonical_form, graph_from_code};
use crate::detect::is_wheel_free;
use crate::graph6;
use crate::spectral::{spectral_radius, SpectralError, DEFAULT_TOL};

mod enumerate;
mod local;

pub use enumerate::{iso_reduced, IsoReducedOutcome, LabeledWheelFree, SmallGraph};
pub use local::{local_search, local_search_spex, LocalSearch, LOCAL_IMPROVEMENT};

/// Largest order for full labeled enumeration.
pub const MAX_LABELED: usize = 7;
/// Largest order for isomorph-reduced generation.
pub const MAX_ISO: usize = 8;
/// Default tie tolerance for spectral optima.
pub const DEFAULT_SPEX_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("n = {n} exceeds the limit of {limit} for {} enumeration", if *isomorph_reduced { "isomorph-reduced" } else { "labeled" })]
    SizeLimit { n: usize, limit: usize, isomorph_reduced: bool },
    #[error("k must be at least 2, got {0}")]
    BadK(usize),
    #[error("shard {index} of {count} is invalid")]
    BadShard { index: usize, count: usize },
    #[error("tolerance must be nonnegative and finite, got {0}")]
    BadTolerance(f64),
    #[error("start graph contains W_{{2k+1}} for k = {0}")]
    NotWheelFree(usize),
    #[error("spectral computation failed: {0}")]
    Spectral(#[from] SpectralError),
    #[error("argmax verification failed: {0}")]
    Verification(&'static str),
}

/// A static slice `index` of `count` of an enumeration space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub fn single() -> Self {
        Shard { index: 0, count: 1 }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.count == 0 || self.index >= self.count {
            return Err(SearchError::BadShard { index: self.index, count: self.count });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    Edges,
    Lambda1,
}

impl Objective {
    pub fn as_str(self) -> &'static str {
        match self {
            Objective::Edges => "edges",
            Objective::Lambda1 => "lambda1",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Optimum {
    Exact(u64),
    Real { value: f64, tol: f64 },
}

impl Optimum {
    pub fn as_f64(&self) -> f64 {
        match *self {
            Optimum::Exact(v) => v as f64,
            Optimum::Real { value, .. } => value,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    /// Generate one graph per isomorphism class instead of every labeled graph.
    pub isomorph_reduced: bool,
    /// Tie tolerance for [`Objective::Lambda1`]; ignored for edges.
    pub tol: f64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { isomorph_reduced: false, tol: DEFAULT_SPEX_TOL }
    }
}

/// Result of an exhaustive search. Wall time is measured by the caller.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport {
    pub n: usize,
    pub k: usize,
    pub objective: Objective,
    pub optimum: Optimum,
    /// graph6 strings of canonical representatives, sorted, one per isomorphism class.
    pub argmax: Vec<String>,
    /// Labeled graphs covered (labeled mode) or one-vertex extensions examined (isomorph-reduced mode).
    pub graphs_scanned: u64,
    /// Wheel-free labeled graphs, or wheel-free isomorphism classes.
    pub wheel_free_count: u64,
    pub isomorph_reduced: bool,
}

/// Shard-local partial result.
#[derive(Debug, Clone, PartialEq)]
pub struct ShardOutcome {
    pub n: usize,
    pub k: usize,
    pub objective: Objective,
    pub isomorph_reduced: bool,
    pub tol: f64,
    pub graphs_scanned: u64,
    pub wheel_free_count: u64,
    /// Canonical code to objective value, for codes within `tol` of the best seen.
    pub candidates: BTreeMap<u64, f64>,
}

impl ShardOutcome {
    fn new(n: usize, k: usize, objective: Objective, opts: &SearchOptions) -> Self {
        ShardOutcome {
            n,
            k,
            objective,
            isomorph_reduced: opts.isomorph_reduced,
            tol: if objective == Objective::Edges { 0.0 } else { opts.tol },
            graphs_scanned: 0,
            wheel_free_count: 0,
            candidates: BTreeMap::new(),
        }
    }

    fn best(&self) -> Option<f64> {
        self.candidates.values().copied().reduce(f64::max)
    }

    fn offer(&mut self, code: u64, value: f64) {
        if let Some(b) = self.best() {
            if value < b - self.tol {
                return;
            }
        }
        self.candidates.insert(code, value);
        self.prune();
    }

    fn prune(&mut self) {
        if let Some(b) = self.best() {
            let tol = self.tol;
            self.candidates.retain(|_, v| *v >= b - tol);
        }
    }

    /// Max-merge of two shards of the same search.
    pub fn merge(mut self, other: ShardOutcome) -> ShardOutcome {
        assert_eq!(
            (self.n, self.k, self.objective, self.isomorph_reduced),
            (other.n, other.k, other.objective, other.isomorph_reduced),
            "merging outcomes of different searches"
        );
        self.graphs_scanned += other.graphs_scanned;
        self.wheel_free_count += other.wheel_free_count;
        self.candidates.extend(other.candidates);
        self.prune();
        self
    }

    /// Re-verifies every argmax graph and builds the report.
    pub fn finalize(self) -> Result<SearchReport, SearchError> {
        let best = self.best().ok_or(SearchError::Verification("no wheel-free graph found"))?;
        let mut argmax = Vec::new();
        for (&code, &value) in &self.candidates {
            let g = graph_from_code(self.n, code);
            if !is_wheel_free(&g, self.k) {
                return Err(SearchError::Verification("argmax graph contains a wheel"));
            }
            let again = objective_value(&g, self.objective)?;
            let ok = match self.objective {
                Objective::Edges => again == value,
                Objective::Lambda1 => (again - value).abs() <= 1e-12 && (again - best).abs() <= self.tol,
            };
            if !ok {
                return Err(SearchError::Verification("argmax graph does not attain the optimum"));
            }
            argmax.push(graph6::encode(&g));
        }
        argmax.sort();
        let optimum = match self.objective {
            Objective::Edges => Optimum::Exact(best as u64),
            Objective::Lambda1 => Optimum::Real { value: best, tol: self.tol },
        };
        Ok(SearchReport {
            n: self.n,
            k: self.k,
            objective: self.objective,
            optimum,
            argmax,
            graphs_scanned: self.graphs_scanned,
            wheel_free_count: self.wheel_free_count,
            isomorph_reduced: self.isomorph_reduced,
        })
    }
}

fn objective_value(g: &crate::Graph, objective: Objective) -> Result<f64, SearchError> {
    Ok(match objective {
        Objective::Edges => g.edge_count() as f64,
        Objective::Lambda1 if g.order() == 0 => 0.0,
        Objective::Lambda1 => spectral_radius(g, DEFAULT_TOL)?.lambda1,
    })
}

fn check_params(n: usize, k: usize, opts: &SearchOptions) -> Result<(), SearchError> {
    if k < 2 {
        return Err(SearchError::BadK(k));
    }
    if !(opts.tol >= 0.0 && opts.tol.is_finite()) {
        return Err(SearchError::BadTolerance(opts.tol));
    }
    let limit = if opts.isomorph_reduced { MAX_ISO } else { MAX_LABELED };
    if n > limit {
        return Err(SearchError::SizeLimit { n, limit, isomorph_reduced: opts.isomorph_reduced });
    }
    Ok(())
}

/// One shard of an exhaustive search.
pub fn run_shard(
    n: usize,
    k: usize,
    objective: Objective,
    opts: &SearchOptions,
    shard: Shard,
) -> Result<ShardOutcome, SearchError> {
    check_params(n, k, opts)?;
    shard.validate()?;
    let mut out = ShardOutcome::new(n, k, objective, opts);
    let mut cache: BTreeMap<u64, f64> = BTreeMap::new();
    let mut consider = |mut g: SmallGraph, out: &mut ShardOutcome| -> Result<(), SearchError> {
        if !g.is_saturated(k) {
            return Ok(());
        }
        let code = canonical_form(g.rows()).code;
        let value = match cache.get(&code) {
            Some(&v) => v,
            None => {
                let v = objective_value(&graph_from_code(n, code), objective)?;
                cache.insert(code, v);
                v
            }
        };
        out.offer(code, value);
        Ok(())
    };
    if opts.isomorph_reduced {
        let gen = iso_reduced(n, k, shard)?;
        out.graphs_scanned = gen.examined;
        out.wheel_free_count = gen.classes.len() as u64;
        for (_, g) in gen.classes {
            consider(g, &mut out)?;
        }
    } else {
        let mut it = LabeledWheelFree::new(n, k, shard)?;
        for (g, _) in it.by_ref() {
            out.wheel_free_count += 1;
            consider(g, &mut out)?;
        }
        out.graphs_scanned = it.covered;
    }
    Ok(out)
}

/// Runs every shard in turn and merges them.
pub fn run_sharded(n: usize, k: usize, objective: Objective, opts: &SearchOptions, shards: usize) -> Result<SearchReport, SearchError> {
    let mut merged: Option<ShardOutcome> = None;
    for index in 0..shards.max(1) {
        let part = run_shard(n, k, objective, opts, Shard { index, count: shards.max(1) })?;
        merged = Some(match merged {
            None => part,
            Some(m) => m.merge(part),
        });
    }
    merged.expect("at least one shard").finalize()
}

pub fn brute_force_ex_with(n: usize, k: usize, opts: &SearchOptions) -> Result<SearchReport, SearchError> {
    run_sharded(n, k, Objective::Edges, opts, 1)
}

pub fn brute_force_spex_with(n: usize, k: usize, opts: &SearchOptions) -> Result<SearchReport, SearchError> {
    run_sharded(n, k, Objective::Lambda1, opts, 1)
}

/// `ex(n, W_{2k+1})` by labeled enumeration (`n <= 7`).
pub fn brute_force_ex(n: usize, k: usize) -> Result<SearchReport, SearchError> {
    brute_force_ex_with(n, k, &SearchOptions::default())
}

/// `spex(n, W_{2k+1})` by labeled enumeration (`n <= 7`), ties collected within `tol`.
pub fn brute_force_spex(n: usize, k: usize, tol: f64) -> Result<SearchReport, SearchError> {
    brute_force_spex_with(n, k, &SearchOptions { tol, ..SearchOptions::default() })
}

/// Every wheel-free labeled graph on `n <= 7` vertices, each exactly once.
pub fn enumerate_wheel_free(n: usize, k: usize) -> Result<impl Iterator<Item = crate::Graph>, SearchError> {
    Ok(LabeledWheelFree::new(n, k, Shard::single())?.map(|(g, _)| g.to_graph()))
}

/// One canonical representative per isomorphism class of wheel-free graphs on `n <= 8` vertices.
pub fn enumerate_wheel_free_classes(n: usize, k: usize) -> Result<impl Iterator<Item = crate::Graph>, SearchError> {
    Ok(iso_reduced(n, k, Shard::single())?.classes.into_iter().map(|(_, g)| g.to_graph()))
}
