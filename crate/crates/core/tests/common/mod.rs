#![allow(dead_code)]

use oddwheel_core::constructions::{ex_w5_graph, select_s, spex_candidate, tilde_g, u_family, yuan_extremal};
use oddwheel_core::graph::{complete_bipartite, join};
use oddwheel_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
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


pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Named and random graphs shared by the property tests.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 1..=16 {
        out.push((format!("K{n}"), Graph::complete(n).unwrap()));
        out.push((format!("P{n}"), Graph::path(n).unwrap()));
    }
    for n in 3..=16 {
        out.push((format!("C{n}"), Graph::cycle(n).unwrap()));
        out.push((format!("W{}", n + 1), Graph::wheel(n).unwrap()));
    }
    for a in 1..=8 {
        for b in a..=8 {
            out.push((format!("K{a},{b}"), complete_bipartite(a, b).unwrap()));
        }
    }
    out.push(("petersen".into(), petersen()));
    for n in 2..=40 {
        for (i, g) in ex_w5_graph(n).unwrap().into_iter().enumerate() {
            out.push((format!("ex_w5({n})[{i}]"), g));
        }
    }
    for k in 3..=7 {
        for n in [8 * k, 8 * k + 1, 8 * k + 2, 8 * k + 3] {
            for (i, g) in yuan_extremal(n, k).unwrap().into_iter().enumerate() {
                out.push((format!("yuan({n},{k})[{i}]"), g));
            }
            for s in select_s(n, k) {
                out.push((format!("spex({n},{k},{s})"), spex_candidate(n, k, s).unwrap()));
            }
            out.push((format!("tilde({n},{k})"), tilde_g(n, k).unwrap()));
        }
        out.push((format!("U({k},{})", 2 * k + 3), u_family(k, 2 * k + 3).unwrap()));
    }
    let mut r = rng(2024);
    for n in 5..=40 {
        for p in [0.3, 0.5, 0.7, 0.9] {
            out.push((format!("G({n},{p})"), random_graph(&mut r, n, p)));
        }
    }
    for i in 0..20 {
        let a = random_graph(&mut r, 3 + i % 7, 0.5);
        let b = random_graph(&mut r, 2 + i % 5, 0.5);
        out.push((format!("join{i}"), join(&a, &b).unwrap()));
    }
    out
}
