//! Simple undirected graphs stored as rows of adjacency bitsets.
//!
//! Rows are `ceil(n / 64)` words wide, so graphs with at most 64 vertices use a
//! single machine word per vertex and word-level operations throughout. Larger
//! graphs (the constructions routinely reach a few hundred vertices) use the
//! same layout with wider rows.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

/// Upper bound on the number of vertices a [`Graph`] may hold.
pub const MAX_VERTICES: usize = 8192;

/// Largest graph accepted by [`max_cut_exact`].
pub const MAX_CUT_LIMIT: usize = 28;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph capacity exceeded: {requested} vertices requested, at most {max} supported")]
    Capacity { requested: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),
    #[error("graph on {n} vertices is too large for exact max-cut (limit {limit})")]
    TooLargeForMaxCut { n: usize, limit: usize },
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity { requested: n, max: MAX_VERTICES });
        }
        let words = words_for(n);
        Ok(Graph { n, words, rows: vec![0; n * words] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; for `n < 3` this is a path.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::path(n)?;
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        Ok(g)
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        Ok(g)
    }

    /// Wheel on `rim + 1` vertices: hub 0 joined to a cycle on `1..=rim`.
    pub fn wheel(rim: usize) -> Result<Self, GraphError> {
        join(&Graph::empty(1)?, &Graph::cycle(rim)?)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Adjacency row of `v` as a bitset over vertex indices.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adds `{u, v}`. Panics on out-of-range vertices or a loop.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> BitIter<'_> {
        BitIter::new(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Adjacency lists, used by the eigensolver.
    pub fn adjacency_lists(&self) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|v| self.neighbors(v).map(|u| u as u32).collect())
            .collect()
    }

    /// Checks the structural invariants (no loops, symmetric rows, no stray bits past `n`).
    pub fn is_well_formed(&self) -> bool {
        for u in 0..self.n {
            if self.has_edge(u, u) {
                return false;
            }
            let row = self.row(u);
            if !self.n.is_multiple_of(64) && self.words > 0 && row[self.words - 1] >> (self.n % 64) != 0 {
                return false;
            }
            if self.neighbors(u).any(|v| !self.has_edge(v, u)) {
                return false;
            }
        }
        true
    }

    /// Vertices of each connected component, components ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Same graph with vertices renamed by `perm`: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

/// Iterator over set bits of a bitset slice.
pub struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> BitIter<'a> {
    pub fn new(words: &'a [u64]) -> Self {
        BitIter { words, idx: 0, cur: words.first().copied().unwrap_or(0) }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    join(&Graph::empty(a)?, &Graph::empty(b)?)
}

/// Join `g + h`: `g` on the low indices, `h` shifted after it, all cross pairs adjacent.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let mut out = disjoint_union(&[g.clone(), h.clone()])?;
    let a = g.order();
    for u in 0..a {
        for v in 0..h.order() {
            out.add_edge(u, a + v);
        }
    }
    Ok(out)
}

/// Block-diagonal union, parts placed in order.
pub fn disjoint_union(parts: &[Graph]) -> Result<Graph, GraphError> {
    let total: usize = parts.iter().map(Graph::order).sum();
    let mut out = Graph::empty(total)?;
    let mut offset = 0;
    for p in parts {
        for (u, v) in p.edges() {
            out.add_edge(offset + u, offset + v);
        }
        offset += p.order();
    }
    Ok(out)
}

/// Subgraph induced by `vs`, relabeled `0..|vs|` in the order given.
pub fn induced_subgraph(g: &Graph, vs: &[usize]) -> Result<Graph, GraphError> {
    let mut out = Graph::empty(vs.len())?;
    for &v in vs {
        g.check_vertex(v)?;
    }
    for (i, &u) in vs.iter().enumerate() {
        for (j, &v) in vs.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                out.add_edge(i, j);
            }
        }
    }
    Ok(out)
}

pub fn triangle_count(g: &Graph) -> u64 {
    let w = g.row_words();
    let mut t = 0u64;
    for (u, v) in g.edges() {
        // common neighbours above v
        let (ru, rv) = (g.row(u), g.row(v));
        for i in (v + 1) / 64..w {
            let mut common = ru[i] & rv[i];
            if i == (v + 1) / 64 {
                let shift = (v + 1) % 64;
                common &= u64::MAX.checked_shl(shift as u32).unwrap_or(0);
            }
            t += common.count_ones() as u64;
        }
    }
    t
}

/// A vertex bipartition `(S, complement)` with its crossing edge count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cut {
    pub side_mask: u64,
    pub cross_edges: usize,
}

impl Cut {
    pub fn of(g: &Graph, side_mask: u64) -> Cut {
        let cross_edges = g
            .edges()
            .filter(|&(u, v)| (side_mask >> u & 1) != (side_mask >> v & 1))
            .count();
        Cut { side_mask, cross_edges }
    }
}

/// Maximum cut by exhaustive search over `2^(n-1)` bipartitions.
///
/// The last vertex is always on the complement side, so every reported
/// `side_mask` is the numerically smaller of the two equivalent masks; among
/// optimal cuts the smallest mask wins.
pub fn max_cut_exact(g: &Graph) -> Result<Cut, GraphError> {
    let n = g.order();
    if n > MAX_CUT_LIMIT {
        return Err(GraphError::TooLargeForMaxCut { n, limit: MAX_CUT_LIMIT });
    }
    if n <= 1 {
        return Ok(Cut { side_mask: 0, cross_edges: 0 });
    }
    let adj: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let free = n - 1;
    let mut best = Cut { side_mask: 0, cross_edges: 0 };
    let mut mask = 0u64;
    let mut cut = 0i64;
    // Gray-code walk: step i flips vertex trailing_zeros(i).
    for i in 1u64..(1u64 << free) {
        let v = i.trailing_zeros() as usize;
        let same = if mask >> v & 1 == 1 { adj[v] & mask } else { adj[v] & !mask };
        let other = adj[v] & !same;
        cut += same.count_ones() as i64 - other.count_ones() as i64;
        mask ^= 1 << v;
        let c = cut as usize;
        if c > best.cross_edges || (c == best.cross_edges && mask < best.side_mask) {
            best = Cut { side_mask: mask, cross_edges: c };
        }
    }
    Ok(best)
}
