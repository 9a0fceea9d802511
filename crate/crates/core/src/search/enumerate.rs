//! Enumeration of `W_{2k+1}`-free graphs on a handful of vertices.
//!
//! Labeled mode walks the edge-set bitmasks in increasing order as a DFS over
//! include/exclude decisions, highest edge first, and abandons a branch as soon
//! as the included edges contain a wheel (containment is monotone under adding
//! edges). Isomorph-reduced mode grows graphs one vertex at a time by
//! canonical augmentation, emitting one canonical representative per
//! isomorphism class.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::{canonical_form, graph_from_code};
use crate::graph::Graph;

use super::{SearchError, Shard, MAX_ISO, MAX_LABELED};

/// Adjacency rows of a graph on at most 8 vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmallGraph {
    pub n: usize,
    pub adj: [u64; MAX_ISO],
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ISO);
        SmallGraph { n, adj: [0; MAX_ISO] }
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn add(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn remove(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    #[inline]
    pub fn has(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> u32 {
        self.rows().iter().map(|r| r.count_ones()).sum::<u32>() / 2
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("small graph");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Does hub `h` see a `C_{2k}` in its neighbourhood?
    pub fn wheel_at(&self, h: usize, k: usize) -> bool {
        let nb = self.adj[h];
        nb.count_ones() as usize >= 2 * k && cycle_in_mask(&self.adj, nb, 2 * k)
    }

    /// A wheel through edge `{u, v}`, given that the graph without it is wheel-free.
    pub fn wheel_through(&self, u: usize, v: usize, k: usize) -> bool {
        if self.wheel_at(u, k) || self.wheel_at(v, k) {
            return true;
        }
        let mut common = self.adj[u] & self.adj[v];
        while common != 0 {
            let h = common.trailing_zeros() as usize;
            common &= common - 1;
            if self.wheel_at(h, k) {
                return true;
            }
        }
        false
    }

    pub fn is_wheel_free(&self, k: usize) -> bool {
        (0..self.n).all(|h| !self.wheel_at(h, k))
    }

    /// No non-edge can be added without creating a wheel.
    pub fn is_saturated(&mut self, k: usize) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has(u, v) {
                    continue;
                }
                self.add(u, v);
                let wheel = self.wheel_through(u, v, k);
                self.remove(u, v);
                if !wheel {
                    return false;
                }
            }
        }
        true
    }
}

/// Is there a cycle on exactly `len` vertices inside `mask`?
fn cycle_in_mask(adj: &[u64], mask: u64, len: usize) -> bool {
    fn dfs(adj: &[u64], avail: u64, s: usize, c: usize, depth: usize, len: usize, used: u64) -> bool {
        if depth == len {
            return adj[c] >> s & 1 == 1;
        }
        let mut cand = adj[c] & avail & !used;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if dfs(adj, avail, s, w, depth + 1, len, used | 1 << w) {
                return true;
            }
        }
        false
    }
    let mut rest = mask;
    // cycles whose smallest vertex is s, for increasing s
    while rest.count_ones() as usize >= len {
        let s = rest.trailing_zeros() as usize;
        if dfs(adj, rest, s, s, 1, len, 1 << s) {
            return true;
        }
        rest &= rest - 1;
    }
    false
}

/// Edge pairs in graph6 column order; index `e` is bit `e` of the edge mask.
pub(super) fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

fn bits_for(x: u64) -> usize {
    64 - x.leading_zeros() as usize
}

/// Number of prefix values in `[lo, hi)` owned by `shard`.
fn owned(lo: u64, hi: u64, shard: Shard) -> u64 {
    let count = shard.count as u64;
    let idx = shard.index as u64;
    // values v < x with v % count == idx
    let below = |x: u64| if x > idx { (x - idx - 1) / count + 1 } else { 0 };
    below(hi) - below(lo)
}

/// Labeled wheel-free graphs in increasing edge-mask order, restricted to one shard.
///
/// Shards own the graphs whose top `prefix_bits` mask bits, read as a number,
/// are congruent to the shard index modulo the shard count.
pub struct LabeledWheelFree {
    n: usize,
    k: usize,
    pairs: Vec<(usize, usize)>,
    shard: Shard,
    prefix_bits: usize,
    graph: SmallGraph,
    mask: u64,
    depth: usize,
    choice: Vec<u8>,
    prefix: Vec<u64>,
    done: bool,
    /// Labeled graphs accounted for so far: yielded plus pruned subtrees.
    pub covered: u64,
}

impl LabeledWheelFree {
    pub fn new(n: usize, k: usize, shard: Shard) -> Result<Self, SearchError> {
        if n > MAX_LABELED {
            return Err(SearchError::SizeLimit { n, limit: MAX_LABELED, isomorph_reduced: false });
        }
        if k < 2 {
            return Err(SearchError::BadK(k));
        }
        shard.validate()?;
        let pairs = pairs(n);
        let m = pairs.len();
        let prefix_bits = m.min(bits_for(shard.count as u64 - 1) + 3);
        Ok(LabeledWheelFree {
            n,
            k,
            pairs,
            shard,
            prefix_bits,
            graph: SmallGraph::empty(n),
            mask: 0,
            depth: 0,
            choice: vec![0; m],
            prefix: vec![0; m + 1],
            done: false,
            covered: 0,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn m(&self) -> usize {
        self.pairs.len()
    }

    /// Owned labeled graphs below a node with `decided` top edges fixed to `value`.
    fn owned_below(&self, decided: usize, value: u64) -> u64 {
        let m = self.m();
        let p = self.prefix_bits;
        if decided >= p {
            let prefix = value >> (decided - p);
            let mine = prefix % self.shard.count as u64 == self.shard.index as u64;
            return if mine { 1u64 << (m - decided) } else { 0 };
        }
        let shift = p - decided;
        owned(value << shift, (value + 1) << shift, self.shard) << (m - p)
    }

    fn enter(&mut self, bit: u64) -> bool {
        let d = self.depth;
        self.prefix[d + 1] = self.prefix[d] << 1 | bit;
        d + 1 > self.prefix_bits || self.owned_below(d + 1, self.prefix[d + 1]) > 0
    }
}

impl Iterator for LabeledWheelFree {
    /// The graph and its edge mask.
    type Item = (SmallGraph, u64);

    fn next(&mut self) -> Option<Self::Item> {
        let m = self.m();
        loop {
            if self.done {
                return None;
            }
            if self.depth == m {
                let out = (self.graph, self.mask);
                if m == 0 {
                    // a single graph, owned by shard 0
                    self.done = true;
                    if self.shard.index != 0 {
                        return None;
                    }
                    self.covered += 1;
                    return Some(out);
                }
                self.covered += 1;
                self.depth -= 1;
                return Some(out);
            }
            let d = self.depth;
            let e = m - 1 - d;
            let (u, v) = self.pairs[e];
            match self.choice[d] {
                0 => {
                    self.choice[d] = 1;
                    if self.enter(0) {
                        self.depth += 1;
                    }
                }
                1 => {
                    self.choice[d] = 2;
                    self.graph.add(u, v);
                    self.mask |= 1 << e;
                    let value = self.prefix[d] << 1 | 1;
                    if self.graph.wheel_through(u, v, self.k) {
                        self.covered += self.owned_below(d + 1, value);
                    } else if self.enter(1) {
                        self.depth += 1;
                    }
                }
                _ => {
                    if self.mask >> e & 1 == 1 {
                        self.graph.remove(u, v);
                        self.mask &= !(1 << e);
                    }
                    self.choice[d] = 0;
                    if d == 0 {
                        self.done = true;
                        return None;
                    }
                    self.depth -= 1;
                }
            }
        }
    }
}

/// One canonical representative per isomorphism class of wheel-free graphs.
pub struct IsoReducedOutcome {
    /// Canonical codes with the graph, in generation order.
    pub classes: Vec<(u64, SmallGraph)>,
    /// Candidate one-vertex extensions examined at the last level.
    pub examined: u64,
}

fn small_from_code(n: usize, code: u64) -> SmallGraph {
    let g = graph_from_code(n, code);
    let mut s = SmallGraph::empty(n);
    for (u, v) in g.edges() {
        s.add(u, v);
    }
    s
}

/// Children of `parent` (on `parent.n` vertices) by canonical augmentation.
fn augment(parent: &SmallGraph, k: usize, out: &mut Vec<(u64, SmallGraph)>) -> u64 {
    let p = parent.n;
    let mut siblings = BTreeSet::new();
    let mut examined = 0;
    for nbhd in 0u64..(1 << p) {
        examined += 1;
        let mut child = *parent;
        child.n = p + 1;
        child.adj[p] = 0;
        let mut bits = nbhd;
        let mut wheel = false;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            child.add(v, p);
        }
        // any new wheel contains the new vertex, as hub or on the rim
        if child.wheel_at(p, k) {
            wheel = true;
        } else {
            let mut nb = nbhd;
            while nb != 0 {
                let h = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if child.wheel_at(h, k) {
                    wheel = true;
                    break;
                }
            }
        }
        if wheel {
            continue;
        }
        let canon = canonical_form(child.rows());
        if canon.last_orbit >> p & 1 == 0 || !siblings.insert(canon.code) {
            continue;
        }
        out.push((canon.code, small_from_code(p + 1, canon.code)));
    }
    examined
}

/// Isomorph-reduced generation up to `n` vertices; the last level only expands
/// the parents owned by `shard` (parent index modulo shard count).
pub fn iso_reduced(n: usize, k: usize, shard: Shard) -> Result<IsoReducedOutcome, SearchError> {
    if n > MAX_ISO {
        return Err(SearchError::SizeLimit { n, limit: MAX_ISO, isomorph_reduced: true });
    }
    if k < 2 {
        return Err(SearchError::BadK(k));
    }
    shard.validate()?;
    if n <= 1 {
        let classes = if shard.index == 0 { vec![(0, SmallGraph::empty(n))] } else { Vec::new() };
        let examined = classes.len() as u64;
        return Ok(IsoReducedOutcome { classes, examined });
    }
    let mut level = vec![(0u64, SmallGraph::empty(1))];
    for size in 1..n {
        let last = size + 1 == n;
        let mut next = Vec::new();
        let mut examined = 0;
        for (i, (_, parent)) in level.iter().enumerate() {
            if last && i % shard.count != shard.index {
                continue;
            }
            examined += augment(parent, k, &mut next);
        }
        if last {
            return Ok(IsoReducedOutcome { classes: next, examined });
        }
        level = next;
    }
    unreachable!("the loop returns at the last level")
}
