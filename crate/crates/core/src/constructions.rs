//! Constructors for the extremal and near-extremal families.
//!
//! Every constructor verifies its output with [`crate::detect`] before
//! returning it; a failed check is reported as
//! [`ConstructionError::Verification`] and the graph is discarded.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::bounds::{ex_w5, ex_w_odd, ex_w_odd_argmax};
use crate::detect::{contains_path, is_wheel_free};
use crate::graph::{complete_bipartite, disjoint_union, join, Graph, GraphError};
use crate::half::HalfInt;
use crate::spectral::{part_sizes, QuotientError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("k = {k} is too small (need k >= {min})")]
    KTooSmall { k: usize, min: usize },
    #[error("no (k-1)-regular P_(2k-1)-free graph recipe for m = {m} < 2k = {}", 2 * k)]
    UFamilyTooSmall { k: usize, m: usize },
    #[error("n = {n} is too small: {reason}")]
    TooSmall { n: usize, reason: &'static str },
    #[error("invalid candidate (n = {n}, k = {k}, s = {s}): {reason}")]
    Candidate { n: usize, k: usize, s: HalfInt, reason: &'static str },
    #[error(transparent)]
    Parts(#[from] QuotientError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal verification failed: {0}")]
    Verification(&'static str),
}

/// A member of the candidate family: `K_{|L|,|R|}` with `|L| = n/2 + s`,
/// a graph from `U_{k,|L|}` inside `L` and a single edge inside `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CandidateSpec {
    pub n: usize,
    pub k: usize,
    pub s: HalfInt,
    l: usize,
    r: usize,
}

impl CandidateSpec {
    pub fn new(n: usize, k: usize, s: HalfInt) -> Result<Self, ConstructionError> {
        if k < 3 {
            return Err(ConstructionError::KTooSmall { k, min: 3 });
        }
        let bad = |reason| ConstructionError::Candidate { n, k, s, reason };
        if s.abs() > HalfInt::ONE {
            return Err(bad("|s| must be at most 1"));
        }
        let (l, r) = part_sizes(n, s)?;
        if l < 2 * k {
            return Err(bad("n/2 + s must be at least 2k"));
        }
        if r < 2 {
            return Err(bad("n/2 - s must be at least 2"));
        }
        Ok(CandidateSpec { n, k, s, l, r })
    }

    pub fn l_size(&self) -> usize {
        self.l
    }

    pub fn r_size(&self) -> usize {
        self.r
    }

    /// `n/2 - 1 <= |L|, |R| <= n/2 + 1`.
    pub fn is_almost_equipartite(&self) -> bool {
        self.l.abs_diff(self.r) <= 2
    }

    /// The quotient matrix is exact (no loop correction) iff `(k-1)|L|` is even.
    pub fn is_equitable(&self) -> bool {
        ((self.k - 1) * self.l).is_multiple_of(2)
    }
}

/// Component sizes for a member of `U_{k,m}`, all within `[k, 2k-2]`.
///
/// For even `k` every regular component has even size; when `m` is odd the
/// first component has odd size `k + 1` and carries the single degree-`(k-2)`
/// vertex.
fn component_sizes(k: usize, m: usize) -> Vec<usize> {
    let mut sizes = Vec::new();
    let mut rest = m;
    if k.is_multiple_of(2) && m % 2 == 1 {
        sizes.push(k + 1);
        rest -= k + 1;
    }
    let start = sizes.len();
    let q = rest / k;
    sizes.extend(core::iter::repeat_n(k, q));
    let mut extra = rest % k;
    for c in sizes[start..].iter_mut().rev() {
        let add = extra.min(k - 2);
        *c += add;
        extra -= add;
    }
    debug_assert_eq!(extra, 0);
    sizes
}

/// Circulant `d`-regular graph on `c > d` vertices (`c` even when `d` is odd).
fn circulant(c: usize, d: usize) -> Graph {
    let mut g = Graph::empty(c).expect("small component");
    for v in 0..c {
        for off in 1..=d / 2 {
            g.add_edge(v, (v + off) % c);
        }
        if d % 2 == 1 {
            g.add_edge(v, (v + c / 2) % c);
        }
    }
    g
}

/// Odd `c > d` with `d` odd: vertex 0 has degree `d - 1`, all others degree `d`.
fn nearly_regular_odd(c: usize, d: usize) -> Graph {
    let mut g = circulant(c, d - 1);
    let half = (c - 1) / 2;
    for v in 1..=half {
        g.add_edge(v, v + half);
    }
    g
}

/// A member of `U_{k,m}`: `(k-1)`-regular, or nearly so when `(k-1) m` is odd,
/// with every component of at most `2k - 2` vertices (so no path on `2k - 1`).
///
/// The deficient vertex, when there is one, is vertex 0.
pub fn u_family(k: usize, m: usize) -> Result<Graph, ConstructionError> {
    if k < 3 {
        return Err(ConstructionError::KTooSmall { k, min: 3 });
    }
    if m < 2 * k {
        return Err(ConstructionError::UFamilyTooSmall { k, m });
    }
    let d = k - 1;
    let parts: Vec<Graph> = component_sizes(k, m)
        .into_iter()
        .map(|c| if d % 2 == 1 && c % 2 == 1 { nearly_regular_odd(c, d) } else { circulant(c, d) })
        .collect();
    let g = disjoint_union(&parts)?;
    verify_u_member(&g, k)?;
    Ok(g)
}

/// Checks degrees, `K_{1,k}`-freeness and `P_{2k-1}`-freeness.
pub fn verify_u_member(g: &Graph, k: usize) -> Result<(), ConstructionError> {
    let m = g.order();
    let degrees = g.degrees();
    let low = degrees.iter().filter(|&&d| d == k - 2).count();
    let expected_low = ((k - 1) * m % 2 == 1) as usize;
    if degrees.iter().any(|&d| d != k - 1 && d != k - 2) || low != expected_low {
        return Err(ConstructionError::Verification("U-family member has the wrong degree sequence"));
    }
    if g.max_degree() >= k {
        return Err(ConstructionError::Verification("U-family member contains K_{1,k}"));
    }
    if contains_path(g, 2 * k - 1).is_some() {
        return Err(ConstructionError::Verification("U-family member contains P_{2k-1}"));
    }
    Ok(())
}

fn single_edge(r: usize) -> Graph {
    Graph::from_edges(r, &[(0, 1)]).expect("r >= 2")
}

fn with_matching(g: &mut Graph, offset: usize, size: usize) {
    for i in 0..size / 2 {
        g.add_edge(offset + 2 * i, offset + 2 * i + 1);
    }
}

/// The `W_5`-extremal graphs: a complete bipartite graph plus a maximum
/// matching inside each part. One graph (balanced parts, the larger part first
/// for odd `n`) unless `n = 2 (mod 4)`, where the `(n/2, n/2)` and
/// `(n/2 + 1, n/2 - 1)` variants are both returned, in that order.
pub fn ex_w5_graph(n: usize) -> Result<Vec<Graph>, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::TooSmall { n, reason: "need at least 2 vertices" });
    }
    let mut splits = vec![(n.div_ceil(2), n / 2)];
    if n % 4 == 2 {
        splits.push((n / 2 + 1, n / 2 - 1));
    }
    let mut out = Vec::new();
    for (a, b) in splits {
        let mut g = complete_bipartite(a, b)?;
        with_matching(&mut g, 0, a);
        with_matching(&mut g, a, b);
        if !is_wheel_free(&g, 2) {
            return Err(ConstructionError::Verification("W_5-extremal graph contains W_5"));
        }
        if g.edge_count() as u64 != ex_w5(n) {
            return Err(ConstructionError::Verification("W_5-extremal graph has the wrong edge count"));
        }
        out.push(g);
    }
    Ok(out)
}

/// The `W_{2k+1}`-extremal graphs for `k >= 3`: `K_{n0, n-n0}` with a member of
/// `U_{k,n0}` in the larger part and one edge in the smaller part, one graph per
/// maximizing `n0`.
pub fn yuan_extremal(n: usize, k: usize) -> Result<Vec<Graph>, ConstructionError> {
    if k < 3 {
        return Err(ConstructionError::KTooSmall { k, min: 3 });
    }
    let target = ex_w_odd(n, k);
    let mut out = Vec::new();
    for n0 in ex_w_odd_argmax(n, k) {
        if n - n0 < 2 {
            return Err(ConstructionError::TooSmall { n, reason: "smaller part needs two vertices" });
        }
        let g = join(&u_family(k, n0)?, &single_edge(n - n0))?;
        if g.edge_count() as u64 != target {
            return Err(ConstructionError::Verification("extremal graph has the wrong edge count"));
        }
        if !is_wheel_free(&g, k) {
            return Err(ConstructionError::Verification("extremal graph contains W_{2k+1}"));
        }
        out.push(g);
    }
    Ok(out)
}

/// The candidate of [`CandidateSpec`]: `L` is `0..|L|` (with `U_{k,|L|}`
/// inside, deficient vertex at 0), `R` follows with the edge on its two lowest
/// vertices.
pub fn spex_candidate(n: usize, k: usize, s: HalfInt) -> Result<Graph, ConstructionError> {
    let spec = CandidateSpec::new(n, k, s)?;
    build_candidate(&spec)
}

pub fn build_candidate(spec: &CandidateSpec) -> Result<Graph, ConstructionError> {
    let g = join(&u_family(spec.k, spec.l)?, &single_edge(spec.r))?;
    if !is_wheel_free(&g, spec.k) {
        return Err(ConstructionError::Verification("candidate contains W_{2k+1}"));
    }
    Ok(g)
}

/// The lower-bound graph `G_1 + (K_2 ∪ (⌊n/2⌋ - 2) K_1)` with `|G_1| = ⌈n/2⌉`.
pub fn tilde_g(n: usize, k: usize) -> Result<Graph, ConstructionError> {
    if k < 3 {
        return Err(ConstructionError::KTooSmall { k, min: 3 });
    }
    if n < 4 * k {
        return Err(ConstructionError::TooSmall { n, reason: "need n >= 4k" });
    }
    spex_candidate(n, k, tilde_s(n))
}

/// `s = ⌈n/2⌉ - n/2`.
pub fn tilde_s(n: usize) -> HalfInt {
    HalfInt::from_twice((n % 2) as i64)
}

/// The test vector for the Rayleigh bound on [`tilde_g`]: ones on the first
/// `⌈n/2⌉` entries and `eta` on the rest.
pub fn tilde_test_vector(n: usize, eta: f64) -> Vec<f64> {
    let c = n.div_ceil(2);
    (0..n).map(|i| if i < c { 1.0 } else { eta }).collect()
}

/// Values of `s` for the spectral extremal candidate by the parity of `k` and `n mod 4`.
///
/// For `k` even and `n = 2 (mod 4)` both `0` and `1` are returned; they differ
/// only at order `o(1/n)` and the caller compares them numerically.
pub fn select_s(n: usize, k: usize) -> Vec<HalfInt> {
    if k % 2 == 1 {
        return vec![tilde_s(n)];
    }
    match n % 4 {
        0 => vec![HalfInt::ZERO],
        1 => vec![-HalfInt::HALF],
        2 => vec![HalfInt::ZERO, HalfInt::ONE],
        _ => vec![HalfInt::HALF],
    }
}

/// All `s` with `|s| <= 1` that give a valid candidate for `(n, k)`.
pub fn admissible_s(n: usize, k: usize) -> Vec<HalfInt> {
    (-2..=2)
        .map(HalfInt::from_twice)
        .filter(|&s| CandidateSpec::new(n, k, s).is_ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::max_degree;

    #[test]
    fn u_family_small_cases() {
        let g = u_family(3, 6).unwrap();
        assert_eq!(g, disjoint_union(&[Graph::complete(3).unwrap(), Graph::complete(3).unwrap()]).unwrap());
        let g = u_family(3, 7).unwrap();
        assert_eq!(g, disjoint_union(&[Graph::complete(3).unwrap(), Graph::cycle(4).unwrap()]).unwrap());
        let g = u_family(6, 12).unwrap();
        assert!(g.degrees().iter().all(|&d| d == 5));
        assert!(contains_path(&g, 11).is_none());
        assert!(matches!(u_family(3, 5), Err(ConstructionError::UFamilyTooSmall { .. })));
        assert!(matches!(u_family(2, 5), Err(ConstructionError::KTooSmall { .. })));
    }

    #[test]
    fn u_family_nearly_regular() {
        let g = u_family(4, 9).unwrap();
        assert_eq!(g.degree(0), 2);
        assert!((1..9).all(|v| g.degree(v) == 3));
        for k in 3..=10 {
            for m in 2 * k..2 * k + 30 {
                let g = u_family(k, m).unwrap();
                assert_eq!(g.order(), m);
                assert!(g.components().iter().all(|c| c.len() <= 2 * k - 2));
                assert!(max_degree(&g) < k);
            }
        }
    }

    #[test]
    fn ex_w5_examples() {
        let g = ex_w5_graph(8).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].edge_count(), 20);
        let g = ex_w5_graph(6).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.iter().all(|g| g.edge_count() == 11));
        assert_eq!(ex_w5_graph(4).unwrap()[0], Graph::complete(4).unwrap());
        for n in 4..=60 {
            for g in ex_w5_graph(n).unwrap() {
                assert_eq!(g.edge_count() as u64, ex_w5(n));
            }
        }
    }

    #[test]
    fn yuan_example() {
        let gs = yuan_extremal(100, 3).unwrap();
        assert_eq!(gs.len(), 2);
        assert!(gs.iter().all(|g| g.edge_count() == 2551));
    }

    #[test]
    fn candidate_spec_rules() {
        assert!(CandidateSpec::new(20, 3, HalfInt::ZERO).is_ok());
        assert!(CandidateSpec::new(20, 3, HalfInt::from_int(2)).is_err());
        assert!(CandidateSpec::new(20, 3, HalfInt::HALF).is_err());
        assert!(CandidateSpec::new(10, 3, HalfInt::from_int(-1)).is_err());
        assert!(CandidateSpec::new(20, 2, HalfInt::ZERO).is_err());
        let spec = CandidateSpec::new(21, 3, HalfInt::HALF).unwrap();
        assert_eq!((spec.l_size(), spec.r_size()), (11, 10));
        assert!(spec.is_almost_equipartite());
    }

    #[test]
    fn select_s_rules() {
        assert_eq!(select_s(23, 3), vec![HalfInt::HALF]);
        assert_eq!(select_s(21, 3), vec![HalfInt::HALF]);
        assert_eq!(select_s(20, 5), vec![HalfInt::ZERO]);
        assert_eq!(select_s(21, 4), vec![-HalfInt::HALF]);
        assert_eq!(select_s(22, 4), vec![HalfInt::ZERO, HalfInt::ONE]);
        assert_eq!(select_s(23, 6), vec![HalfInt::HALF]);
        assert_eq!(select_s(24, 6), vec![HalfInt::ZERO]);
        assert_eq!(admissible_s(20, 3).len(), 3);
    }

    #[test]
    fn tilde_g_layout() {
        let g = tilde_g(25, 3).unwrap();
        assert_eq!(g.order(), 25);
        assert!(g.has_edge(13, 14));
        assert!(!g.has_edge(14, 15));
        assert!(matches!(tilde_g(11, 3), Err(ConstructionError::TooSmall { .. })));
    }
}
