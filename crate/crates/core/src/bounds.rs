//! Closed-form extremal numbers and the inequalities used as cross-checks.
//!
//! Integer formulas are exact. The real-valued bounds are one-sided and slack,
//! so double precision is enough for them.

use alloc::vec::Vec;

use crate::graph::{triangle_count, Graph};
use crate::spectral::{spectral_radius, SpectralError};

/// Maximum number of edges of an `n`-vertex `W_5`-free graph.
pub fn ex_w5(n: usize) -> u64 {
    let n = n as u64;
    if n % 4 == 2 {
        n * n / 4 + n / 2 - 1
    } else {
        n * n / 4 + n / 2
    }
}

fn yuan_value(n: usize, k: usize, n0: usize) -> u64 {
    (n0 * (n - n0) + (k - 1) * n0 / 2 + 1) as u64
}

/// `max { n0 n1 + floor((k-1) n0 / 2) + 1 : n0 + n1 = n }`, the edge count of
/// the `W_{2k+1}`-extremal graphs for `k >= 3` and large `n`.
pub fn ex_w_odd(n: usize, k: usize) -> u64 {
    assert!(k >= 3, "ex_w_odd is defined for k >= 3");
    (0..=n).map(|n0| yuan_value(n, k, n0)).max().expect("non-empty range")
}

/// All `n0` attaining [`ex_w_odd`], increasing.
pub fn ex_w_odd_argmax(n: usize, k: usize) -> Vec<usize> {
    let best = ex_w_odd(n, k);
    (0..=n).filter(|&n0| yuan_value(n, k, n0) == best).collect()
}

/// `n^2/4 + nk/4`, a strict upper bound on [`ex_w_odd`] once `n` is large.
pub fn ex_w_odd_upper(n: usize, k: usize) -> f64 {
    let n = n as f64;
    n * n / 4.0 + n * k as f64 / 4.0
}

/// `8 (k - 1) n^(1 + 1/k)`, an upper bound on the number of edges of a
/// `C_{2k}`-free graph on `n` vertices.
pub fn even_circuit_bound(n: usize, k: usize) -> f64 {
    assert!(k >= 2, "even circuit bound needs k >= 2");
    8.0 * (k as f64 - 1.0) * libm::pow(n as f64, 1.0 + 1.0 / k as f64)
}

/// `(n + k - 1) / 2`, a strict lower bound on the spectral Turán number of `W_{2k+1}`.
pub fn spex_lower(n: usize, k: usize) -> f64 {
    (n as f64 + k as f64 - 1.0) / 2.0
}

/// Margin used to decide `lambda1 > n/2` numerically.
pub const APPLICABILITY_MARGIN: f64 = 1e-9;

/// Evaluation of `e(G) > lambda1^2 - 6t/n`, which holds whenever `lambda1 > n/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeLowerBound {
    /// `lambda1 > n/2 + APPLICABILITY_MARGIN`.
    pub applicable: bool,
    /// The inequality holds, or it is not applicable.
    pub holds: bool,
    pub edges: u64,
    pub lambda1: f64,
    pub triangles: u64,
    pub rhs: f64,
}

pub fn edge_lower_bound(g: &Graph) -> Result<EdgeLowerBound, SpectralError> {
    let n = g.order();
    let lambda1 = spectral_radius(g, 1e-10)?.lambda1;
    let triangles = triangle_count(g);
    let edges = g.edge_count() as u64;
    let rhs = lambda1 * lambda1 - 6.0 * triangles as f64 / n as f64;
    let applicable = lambda1 > n as f64 / 2.0 + APPLICABILITY_MARGIN;
    Ok(EdgeLowerBound { applicable, holds: !applicable || edges as f64 > rhs, edges, lambda1, triangles, rhs })
}

/// `true` unless `g` is a counterexample to the edge lower bound.
pub fn edge_lower_bound_holds(g: &Graph) -> Result<bool, SpectralError> {
    edge_lower_bound(g).map(|b| b.holds)
}
