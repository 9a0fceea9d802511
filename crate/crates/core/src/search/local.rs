//! First-improvement hill-climbing on `lambda1` over wheel-free graphs.
//!
//! Moves are scanned in a fixed order: every edge addition `{u, v}` in
//! lexicographic order, then every swap (remove `e`, add `f`) with `e` and `f`
//! in lexicographic order. A move is taken as soon as it keeps the graph
//! wheel-free and raises `lambda1` by more than [`LOCAL_IMPROVEMENT`]; the scan
//! then restarts. Pure removals are never scanned because deleting an edge
//! cannot raise `lambda1`.

use alloc::vec;
use alloc::vec::Vec;

use crate::detect::{is_wheel_free, wheel_through_edge};
use crate::graph::Graph;
use crate::spectral::{PowerIteration, SpectralResult};

use super::SearchError;

/// Minimum gain in `lambda1` for a move to be accepted.
pub const LOCAL_IMPROVEMENT: f64 = 1e-10;

const LOCAL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct LocalSearch {
    pub graph: Graph,
    pub lambda1: f64,
    /// Accepted moves.
    pub moves: usize,
    /// The final scan found no improving move; `false` when the budget ran out first.
    pub local_max: bool,
}

fn eigen(g: &Graph, warm: &[f64]) -> Result<SpectralResult, SearchError> {
    let solver = PowerIteration::with_tol(LOCAL_TOL);
    // keep every entry positive so no component is lost from a warm start
    let start: Vec<f64> = warm.iter().map(|&x| x + 1e-3).collect();
    Ok(solver.run_from(g, &start)?)
}

fn try_add(g: &mut Graph, k: usize, u: usize, v: usize, current: &SpectralResult) -> Result<Option<SpectralResult>, SearchError> {
    g.add_edge(u, v);
    if wheel_through_edge(g, u, v, k).is_none() {
        let r = eigen(g, &current.vector)?;
        if r.lambda1 > current.lambda1 + LOCAL_IMPROVEMENT {
            return Ok(Some(r));
        }
    }
    g.remove_edge(u, v);
    Ok(None)
}

/// Applies the first improving move to `g`, if any.
fn find_move(g: &mut Graph, k: usize, current: &SpectralResult) -> Result<Option<SpectralResult>, SearchError> {
    let n = g.order();
    let non_edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
    for &(u, v) in &non_edges {
        if let Some(r) = try_add(g, k, u, v, current)? {
            return Ok(Some(r));
        }
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for &(a, b) in &edges {
        g.remove_edge(a, b);
        for &(u, v) in &non_edges {
            if let Some(r) = try_add(g, k, u, v, current)? {
                return Ok(Some(r));
            }
        }
        g.add_edge(a, b);
    }
    Ok(None)
}

/// Runs the hill-climb for at most `budget` accepted moves.
pub fn local_search(start: &Graph, k: usize, budget: usize) -> Result<LocalSearch, SearchError> {
    if !is_wheel_free(start, k) {
        return Err(SearchError::NotWheelFree(k));
    }
    let mut g = start.clone();
    let n = g.order();
    if n == 0 {
        return Ok(LocalSearch { graph: g, lambda1: 0.0, moves: 0, local_max: true });
    }
    let mut current = eigen(&g, &vec![1.0; n])?;
    let mut moves = 0;
    while moves < budget {
        match find_move(&mut g, k, &current)? {
            Some(r) => {
                current = r;
                moves += 1;
            }
            None => return Ok(LocalSearch { graph: g, lambda1: current.lambda1, moves, local_max: true }),
        }
    }
    Ok(LocalSearch { graph: g, lambda1: current.lambda1, moves, local_max: false })
}

/// The graph reached by [`local_search`].
pub fn local_search_spex(start: &Graph, k: usize, budget: usize) -> Result<Graph, SearchError> {
    local_search(start, k, budget).map(|r| r.graph)
}
