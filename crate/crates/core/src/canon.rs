//! Canonical labeling for small graphs (at most [`MAX_CANON`] vertices).
//!
//! Vertices are first split by iterated colour refinement, then every
//! relabeling that respects the ordered colour cells is searched with
//! branch-and-bound for the lexicographically largest upper-triangle bit
//! string (graph6 column order, first pair most significant). The set of
//! vertices that optimal relabelings send to the last position is an orbit of
//! the automorphism group; canonical augmentation uses it as the canonical
//! deletion orbit.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

pub const MAX_CANON: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    /// Upper-triangle bits of the canonical relabeling.
    pub code: u64,
    /// `position[v]` is the canonical index of vertex `v` for one optimal relabeling.
    pub position: Vec<usize>,
    /// Vertices mapped to the last position by some optimal relabeling.
    pub last_orbit: u64,
}

fn pair_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn refine(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut color: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut ranks: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in &sigs {
            ranks.insert(s, 0);
        }
        for (i, r) in ranks.values_mut().enumerate() {
            *r = i;
        }
        let next: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let count = ranks.len();
        color = next;
        if count == classes {
            return color;
        }
        classes = count;
    }
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    total: usize,
    cell_of_pos: Vec<usize>,
    cells: Vec<Vec<usize>>,
    order: Vec<usize>,
    used: u64,
    best: Option<u64>,
    best_order: Vec<usize>,
    last_orbit: u64,
}

impl Search<'_> {
    /// Bits contributed by positions `< p`, shifted into their final place.
    fn place(&mut self, p: usize, code: u64) {
        if p == self.n {
            match self.best {
                Some(b) if code < b => {}
                Some(b) if code == b => self.last_orbit |= 1 << self.order[self.n - 1],
                _ => {
                    self.best = Some(code);
                    self.best_order = self.order.clone();
                    self.last_orbit = if self.n > 0 { 1 << self.order[self.n - 1] } else { 0 };
                }
            }
            return;
        }
        let cell = self.cell_of_pos[p];
        let before = pair_bits(p);
        for idx in 0..self.cells[cell].len() {
            let v = self.cells[cell][idx];
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut next = code;
            for i in 0..p {
                if self.adj[self.order[i]] >> v & 1 == 1 {
                    next |= 1 << (self.total - 1 - (before + i));
                }
            }
            if let Some(b) = self.best {
                // compare the prefix fixed so far
                let fixed = pair_bits(p + 1);
                let mask = if fixed == 0 { 0 } else { u64::MAX << (self.total - fixed) };
                if next & mask < b & mask {
                    continue;
                }
            }
            self.used |= 1 << v;
            self.order.push(v);
            self.place(p + 1, next);
            self.order.pop();
            self.used &= !(1 << v);
        }
    }
}

/// Canonical form of the graph with single-word adjacency rows `adj`.
pub fn canonical_form(adj: &[u64]) -> Canonical {
    let n = adj.len();
    assert!(n <= MAX_CANON, "canonical labeling supports at most {MAX_CANON} vertices");
    let color = refine(adj);
    let ncolors = color.iter().copied().max().map_or(0, |c| c + 1);
    let mut cells = vec![Vec::new(); ncolors];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    let cell_of_pos: Vec<usize> = cells.iter().enumerate().flat_map(|(c, vs)| core::iter::repeat_n(c, vs.len())).collect();
    let mut search = Search {
        adj,
        n,
        total: pair_bits(n),
        cell_of_pos,
        cells,
        order: Vec::with_capacity(n),
        used: 0,
        best: None,
        best_order: Vec::new(),
        last_orbit: 0,
    };
    search.place(0, 0);
    let mut position = vec![0; n];
    for (p, &v) in search.best_order.iter().enumerate() {
        position[v] = p;
    }
    Canonical { code: search.best.unwrap_or(0), position, last_orbit: search.last_orbit }
}

/// Graph on `n` vertices from an upper-triangle code.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = pair_bits(n);
    let mut g = Graph::empty(n).expect("small graph");
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - idx) & 1 == 1 {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    g
}

/// Single-word adjacency rows of a graph with at most 64 vertices.
pub fn rows64(g: &Graph) -> Vec<u64> {
    assert!(g.order() <= 64);
    (0..g.order()).map(|v| if g.row_words() == 0 { 0 } else { g.row(v)[0] }).collect()
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    graph_from_code(g.order(), canonical_form(&rows64(g)).code)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && canonical_form(&rows64(g)).code == canonical_form(&rows64(h)).code
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn invariant_under_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(0..=9);
            let g = random_graph(&mut rng, n, 0.5);
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let h = g.relabel(&perm);
            assert_eq!(canonical_graph(&g), canonical_graph(&h));
            assert!(is_isomorphic(&g, &h));
        }
    }

    #[test]
    fn canonical_is_isomorphic_to_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let n = rng.gen_range(1..=8);
            let g = random_graph(&mut rng, n, 0.4);
            let c = canonical_form(&rows64(&g));
            assert_eq!(g.relabel(&c.position), graph_from_code(n, c.code));
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let c6 = Graph::cycle(6).unwrap();
        let two_triangles = crate::graph::disjoint_union(&[Graph::complete(3).unwrap(), Graph::complete(3).unwrap()]).unwrap();
        assert!(!is_isomorphic(&c6, &two_triangles));
    }

    #[test]
    fn orbits() {
        // star K_{1,3} with the centre last: leaves form one orbit
        let g = Graph::from_edges(4, &[(3, 0), (3, 1), (3, 2)]).unwrap();
        let c = canonical_form(&rows64(&g));
        let orbit = c.last_orbit;
        assert!(orbit == 0b0111 || orbit == 0b1000);
        let k4 = canonical_form(&rows64(&Graph::complete(4).unwrap()));
        assert_eq!(k4.last_orbit, 0b1111);
        let p3 = canonical_form(&rows64(&Graph::path(3).unwrap()));
        assert!(p3.last_orbit == 0b101 || p3.last_orbit == 0b010);
    }

    #[test]
    fn counts_all_classes_on_five_vertices() {
        let mut seen = alloc::collections::BTreeSet::new();
        for mask in 0u32..1024 {
            let mut g = Graph::empty(5).unwrap();
            let mut idx = 0;
            for j in 1..5 {
                for i in 0..j {
                    if mask >> idx & 1 == 1 {
                        g.add_edge(i, j);
                    }
                    idx += 1;
                }
            }
            seen.insert(canonical_form(&rows64(&g)).code);
        }
        assert_eq!(seen.len(), 34);
    }
}
