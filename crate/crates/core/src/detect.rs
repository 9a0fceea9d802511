//! Exact detection of fixed-length cycles, paths, stars and odd wheels.
//!
//! A graph contains the wheel `W_{2k+1}` exactly when some vertex has a
//! `C_{2k}` inside the subgraph induced by its neighbourhood, so wheel search
//! reduces to cycle search on neighbourhoods.
//!
//! Cycle and path search is DFS backtracking with three exact reductions:
//!
//! * a cycle lives inside one biconnected block, so only blocks with at least
//!   `len` vertices are searched;
//! * vertices with the same neighbourhood (twins) are interchangeable, so among
//!   the unused members of a twin class only the lowest one is ever tried;
//! * the BFS distance back to the start vertex bounds the remaining length.
//!
//! The twin rule is what keeps neighbourhoods of the near-complete-bipartite
//! extremal candidates cheap: one side collapses into a couple of classes.
//! Every witness is re-verified against the adjacency relation before it is
//! returned.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{induced_subgraph, Graph};

/// A hub together with a cycle of length `2k` in its neighbourhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelWitness {
    pub hub: usize,
    pub rim: Vec<usize>,
}

impl WheelWitness {
    /// Checks the witness against `g`: rim of length `2k`, distinct vertices,
    /// every rim vertex adjacent to the hub, consecutive rim vertices adjacent.
    pub fn verify(&self, g: &Graph, k: usize) -> bool {
        self.rim.len() == 2 * k
            && !self.rim.contains(&self.hub)
            && self.rim.iter().all(|&v| g.has_edge(self.hub, v))
            && is_cycle(g, &self.rim)
    }
}

/// `true` if `vs` lists distinct vertices forming a closed walk of length `vs.len() >= 3`.
pub fn is_cycle(g: &Graph, vs: &[usize]) -> bool {
    vs.len() >= 3 && is_path(g, vs) && g.has_edge(vs[vs.len() - 1], vs[0])
}

/// `true` if `vs` lists distinct vertices with consecutive ones adjacent.
pub fn is_path(g: &Graph, vs: &[usize]) -> bool {
    let mut seen = vec![false; g.order()];
    for &v in vs {
        if v >= g.order() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    vs.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

/// `true` if `g` has no `K_{1,k}`, i.e. every degree is below `k`.
pub fn is_star_free(g: &Graph, k: usize) -> bool {
    max_degree(g) < k
}

/// Twin classes: `x ~ y` iff `N(x) \ {y} = N(y) \ {x}`.
struct Twins {
    rep: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl Twins {
    fn of(g: &Graph) -> Twins {
        let n = g.order();
        let mut open: BTreeMap<&[u64], usize> = BTreeMap::new();
        let mut closed: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
        let mut rep = vec![0; n];
        for v in 0..n {
            let a = *open.entry(g.row(v)).or_insert(v);
            let mut row = g.row(v).to_vec();
            row[v / 64] |= 1 << (v % 64);
            let b = *closed.entry(row).or_insert(v);
            rep[v] = a.min(b);
        }
        let mut members = vec![Vec::new(); n];
        for v in 0..n {
            members[rep[v]].push(v);
        }
        Twins { rep, members }
    }

    /// `true` if some member of `w`'s class below `w` is still available.
    fn has_lower_free(&self, w: usize, free: impl Fn(usize) -> bool) -> bool {
        self.members[self.rep[w]].iter().take_while(|&&x| x < w).any(|&x| free(x))
    }
}

/// Vertex sets of the biconnected blocks with at least three vertices.
fn blocks(g: &Graph) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = g.order();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut frames: Vec<(usize, usize, usize)> = vec![(root, UNSEEN, 0)];
        while let Some(frame) = frames.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            if frame.2 < adj[v].len() {
                let w = adj[v][frame.2];
                frame.2 += 1;
                if disc[w] == UNSEEN {
                    edges.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edges.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(u, _, _)) = frames.last() {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = edges.pop() {
                        block.push(e.0);
                        block.push(e.1);
                        if e == (u, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    if block.len() >= 3 {
                        out.push(block);
                    }
                }
            }
        }
    }
    out.sort_by_key(|b| b[0]);
    out
}

struct CycleSearch<'a> {
    g: &'a Graph,
    len: usize,
    twins: Twins,
    allowed: Vec<bool>,
    used: Vec<bool>,
    dist: Vec<usize>,
    path: Vec<usize>,
}

impl CycleSearch<'_> {
    fn bfs(&mut self, s: usize) {
        self.dist.iter_mut().for_each(|d| *d = usize::MAX);
        self.dist[s] = 0;
        let mut queue = vec![s];
        let mut i = 0;
        while i < queue.len() {
            let v = queue[i];
            i += 1;
            for w in self.g.neighbors(v) {
                if self.allowed[w] && self.dist[w] == usize::MAX {
                    self.dist[w] = self.dist[v] + 1;
                    queue.push(w);
                }
            }
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        let n = self.g.order();
        for s in 0..n {
            if !self.allowed[s] || self.twins.rep[s] != s {
                continue;
            }
            self.bfs(s);
            self.path.clear();
            self.path.push(s);
            self.used[s] = true;
            if self.extend() {
                return Some(self.path);
            }
            self.used[s] = false;
            // no cycle through s, hence none through any twin of s
            for &x in &self.twins.members[s] {
                self.allowed[x] = false;
            }
        }
        None
    }

    fn extend(&mut self) -> bool {
        let p = self.path.len();
        let c = self.path[p - 1];
        let s = self.path[0];
        if p == self.len {
            return self.g.has_edge(c, s);
        }
        let candidates: Vec<usize> = self.g.neighbors(c).collect();
        for w in candidates {
            if !self.allowed[w] || self.used[w] || self.dist[w] > self.len - p {
                continue;
            }
            if p + 1 == self.len && !self.g.has_edge(w, s) {
                continue;
            }
            if self.twins.has_lower_free(w, |x| self.allowed[x] && !self.used[x]) {
                continue;
            }
            self.used[w] = true;
            self.path.push(w);
            if self.extend() {
                return true;
            }
            self.path.pop();
            self.used[w] = false;
        }
        false
    }
}

fn cycle_in_block(h: &Graph, len: usize) -> Option<Vec<usize>> {
    let n = h.order();
    CycleSearch {
        g: h,
        len,
        twins: Twins::of(h),
        allowed: vec![true; n],
        used: vec![false; n],
        dist: vec![usize::MAX; n],
        path: Vec::with_capacity(len),
    }
    .run()
}

/// A cycle on exactly `len` distinct vertices, or `None`.
///
/// Returns `None` for `len < 3` and for `len > n`.
pub fn contains_cycle_exact(g: &Graph, len: usize) -> Option<Vec<usize>> {
    if len < 3 || len > g.order() {
        return None;
    }
    for block in blocks(g) {
        if block.len() < len {
            continue;
        }
        let h = induced_subgraph(g, &block).expect("block vertices are in range");
        if let Some(local) = cycle_in_block(&h, len) {
            let cycle: Vec<usize> = local.into_iter().map(|i| block[i]).collect();
            assert!(is_cycle(g, &cycle) && cycle.len() == len, "cycle witness failed verification");
            return Some(cycle);
        }
    }
    None
}

struct PathSearch<'a> {
    g: &'a Graph,
    len: usize,
    twins: Twins,
    used: Vec<bool>,
    path: Vec<usize>,
}

impl PathSearch<'_> {
    fn extend(&mut self) -> bool {
        if self.path.len() == self.len {
            return true;
        }
        let c = *self.path.last().expect("non-empty path");
        let candidates: Vec<usize> = self.g.neighbors(c).collect();
        for w in candidates {
            if self.used[w] || self.twins.has_lower_free(w, |x| !self.used[x]) {
                continue;
            }
            self.used[w] = true;
            self.path.push(w);
            if self.extend() {
                return true;
            }
            self.path.pop();
            self.used[w] = false;
        }
        false
    }
}

/// A simple path on exactly `t` vertices, or `None` (also `None` for `t == 0`).
pub fn contains_path(g: &Graph, t: usize) -> Option<Vec<usize>> {
    if t == 0 {
        return None;
    }
    for comp in g.components() {
        if comp.len() < t {
            continue;
        }
        let h = induced_subgraph(g, &comp).expect("component vertices are in range");
        let mut search = PathSearch {
            g: &h,
            len: t,
            twins: Twins::of(&h),
            used: vec![false; h.order()],
            path: Vec::with_capacity(t),
        };
        for s in 0..h.order() {
            if search.twins.rep[s] != s {
                continue;
            }
            search.path.clear();
            search.path.push(s);
            search.used[s] = true;
            if search.extend() {
                let path: Vec<usize> = search.path.iter().map(|&i| comp[i]).collect();
                assert!(is_path(g, &path) && path.len() == t, "path witness failed verification");
                return Some(path);
            }
            search.used[s] = false;
        }
    }
    None
}

/// Looks for `C_{2k}` in the neighbourhood of `hub`.
pub fn wheel_at(g: &Graph, hub: usize, k: usize) -> Option<WheelWitness> {
    if k < 2 || g.degree(hub) < 2 * k {
        return None;
    }
    let nb: Vec<usize> = g.neighbors(hub).collect();
    let h = induced_subgraph(g, &nb).expect("neighbours are in range");
    let cycle = contains_cycle_exact(&h, 2 * k)?;
    let witness = WheelWitness { hub, rim: cycle.into_iter().map(|i| nb[i]).collect() };
    assert!(witness.verify(g, k), "wheel witness failed verification");
    Some(witness)
}

/// A copy of `W_{2k+1}` in `g` with the smallest possible hub, or `None`.
pub fn find_odd_wheel(g: &Graph, k: usize) -> Option<WheelWitness> {
    (0..g.order()).find_map(|hub| wheel_at(g, hub, k))
}

/// `true` iff `g` contains no `W_{2k+1}`. Hubs are tried in increasing degree order.
pub fn is_wheel_free(g: &Graph, k: usize) -> bool {
    let mut hubs: Vec<(usize, usize)> = (0..g.order())
        .map(|v| (g.degree(v), v))
        .filter(|&(d, _)| d >= 2 * k)
        .collect();
    hubs.sort_unstable();
    hubs.into_iter().all(|(_, hub)| wheel_at(g, hub, k).is_none())
}

/// Wheel containing the edge `{u, v}`, assuming `g - uv` is wheel-free.
///
/// Such a wheel has `u` or `v` as its hub, or a common neighbour of both.
pub fn wheel_through_edge(g: &Graph, u: usize, v: usize, k: usize) -> Option<WheelWitness> {
    if let Some(w) = wheel_at(g, u, k).or_else(|| wheel_at(g, v, k)) {
        return Some(w);
    }
    (0..g.order())
        .filter(|&h| g.has_edge(h, u) && g.has_edge(h, v))
        .find_map(|h| wheel_at(g, h, k))
}
