//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use oddwheel::parallel::run_parallel;
use oddwheel::report::search_json;
use oddwheel::settings::Settings;
use oddwheel_core::bounds::{edge_lower_bound, ex_w5, spex_lower};
use oddwheel_core::canon::{canonical_form, rows64};
use oddwheel_core::constructions::{
    ex_w5_graph, select_s, spex_candidate, tilde_g, u_family, verify_u_member, yuan_extremal,
};
use oddwheel_core::detect::is_wheel_free;
use oddwheel_core::graph::{complete_bipartite, join};
use oddwheel_core::graph6;
use oddwheel_core::search::{brute_force_ex, Objective, Optimum, SearchOptions, DEFAULT_SPEX_TOL};
use oddwheel_core::spectral::{
    char_poly_ps, check_identities, join_upper_bound, largest_root, matrix2_radius, PowerIteration,
};
use oddwheel_core::{Graph, HalfInt};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn lambda1(g: &Graph) -> Result<f64, String> {
    let r = PowerIteration::with_tol(1e-10).run(g).map_err(|e| e.to_string())?;
    if r.residual > 1e-10 {
        return Err(format!("residual {:e} above 1e-10", r.residual));
    }
    Ok(r.lambda1)
}

fn codes(gs: &[Graph]) -> BTreeSet<u64> {
    gs.iter().map(|g| canonical_form(&rows64(g)).code).collect()
}

fn formula_vs_oracle() -> Verdict {
    let mut notes = Vec::new();
    for n in [5, 6, 7] {
        let r = brute_force_ex(n, 2).map_err(|e| e.to_string())?;
        if r.optimum != Optimum::Exact(ex_w5(n)) {
            return Err(format!("n={n}: oracle {:?}, formula {}", r.optimum, ex_w5(n)));
        }
        if n >= 6 {
            let found: Vec<Graph> = r.argmax.iter().map(|s| graph6::decode(s).unwrap()).collect();
            let want = ex_w5_graph(n).map_err(|e| e.to_string())?;
            if codes(&found) != codes(&want) {
                return Err(format!(
                    "n={n}: oracle argmax has {} classes, constructions give {}",
                    found.len(),
                    want.len()
                ));
            }
        }
        notes.push(format!("ex({n})={}", ex_w5(n)));
    }
    Ok(notes.join(", ") + ", argmax classes match at n=6,7")
}

fn lower_bound_construction() -> Verdict {
    let mut worst = f64::INFINITY;
    let mut failures = Vec::new();
    for k in [3, 6, 7] {
        for n in [4 * k, 50, 100] {
            let g = tilde_g(n, k).map_err(|e| e.to_string())?;
            let margin = lambda1(&g)? - spex_lower(n, k);
            let need = 1.0 / (2.0 * n as f64);
            worst = worst.min(margin - need);
            if margin <= need {
                failures.push(format!("k={k} n={n}: margin {margin:.6} <= 1/(2n) = {need:.6}"));
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("9 cases, smallest excess over 1/(2n) = {worst:.6}"))
    } else {
        Err(failures.join("; "))
    }
}

fn equitable_exactness() -> Verdict {
    let mut worst: f64 = 0.0;
    for n in [20, 21, 23, 40, 41, 43] {
        let s = select_s(n, 3)[0];
        let g = spex_candidate(n, 3, s).map_err(|e| e.to_string())?;
        let root = largest_root(&char_poly_ps(n, 3, s).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let dev = (lambda1(&g)? - root).abs();
        worst = worst.max(dev);
        if dev > 1e-8 {
            return Err(format!("n={n} s={s}: deviation {dev:e}"));
        }
    }
    Ok(format!("max deviation {worst:e}"))
}

fn polynomial_identities() -> Verdict {
    let grid: Vec<(usize, usize)> = (1..=10).flat_map(|i| (3..=7).map(move |k| (10 * i + i % 2, k))).collect();
    for &(n, k) in &grid {
        let c = check_identities(n, k);
        if !c.all_hold() {
            return Err(format!("n={n} k={k}: {c:?}"));
        }
    }
    Ok(format!("{} grid points, exact", grid.len()))
}

fn unbalanced_beats_balanced() -> Verdict {
    let mut margins = Vec::new();
    for n in (6..=102).step_by(4) {
        let h = n as f64 / 2.0;
        let unbalanced = matrix2_radius(1.0, h - 1.0, h + 1.0, 1.0);
        let balanced = matrix2_radius(h, 1.0, h - 1.0, 1.0);
        let margin = unbalanced - balanced;
        if margin <= 0.0 {
            return Err(format!("n={n}: margin {margin:e}"));
        }
        margins.push(margin);
    }
    let min = margins.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(format!("{} values of n, smallest margin {min:.6e}, largest {:.6}", margins.len(), margins[0]))
}

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

fn circulant(n: usize, d: usize) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for v in 0..n {
        for off in 1..=d / 2 {
            g.add_edge(v, (v + off) % n);
        }
        if d % 2 == 1 {
            g.add_edge(v, (v + n / 2) % n);
        }
    }
    g
}

fn join_bound() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    let mut slack = f64::INFINITY;
    for i in 0..200 {
        let (a, b) = (rng.gen_range(1..=15), rng.gen_range(1..=15));
        let (p, q) = (rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0));
        let g = random_graph(&mut rng, a, p);
        let h = random_graph(&mut rng, b, q);
        let l = lambda1(&join(&g, &h).unwrap())?;
        let bound = join_upper_bound(&g, &h);
        if l > bound + 1e-9 {
            return Err(format!("instance {i}: lambda1 {l} above bound {bound}"));
        }
        slack = slack.min(bound - l);
    }
    let mut regular = 0;
    for a in [2, 4, 6, 8, 10, 12, 14] {
        for b in [2, 4, 6, 8, 10] {
            for d in [0, 1] {
                for dp in [0, 1] {
                    let (g, h) = (circulant(a, d), circulant(b, dp));
                    let l = lambda1(&join(&g, &h).unwrap())?;
                    let bound = join_upper_bound(&g, &h);
                    if (l - bound).abs() > 1e-9 {
                        return Err(format!("regular {a}x{b} (d={d}, d'={dp}): {l} vs {bound}"));
                    }
                    regular += 1;
                }
            }
        }
    }
    Ok(format!("200 random joins hold (min slack {slack:.3e}), {regular} regular joins attain the bound"))
}

fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 1..=16 {
        out.push((format!("K{n}"), Graph::complete(n).unwrap()));
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
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 5..=40 {
        for p in [0.3, 0.5, 0.7, 0.9] {
            out.push((format!("G({n},{p})"), random_graph(&mut rng, n, p)));
        }
    }
    out
}

fn edge_lower_bound_suite() -> Verdict {
    let graphs = corpus();
    let mut applicable = 0;
    for (name, g) in &graphs {
        let b = edge_lower_bound(g).map_err(|e| e.to_string())?;
        if !b.holds {
            return Err(format!("{name}: e = {} but lambda1^2 - 6t/n = {}", b.edges, b.rhs));
        }
        applicable += b.applicable as usize;
    }
    Ok(format!("{applicable} of {} corpus graphs have lambda1 > n/2, no counterexample", graphs.len()))
}

fn construction_verification() -> Verdict {
    let mut count = 0;
    for k in 3..=8 {
        for m in 2 * k..=2 * k + 40 {
            let g = u_family(k, m).map_err(|e| format!("u_family({k},{m}): {e}"))?;
            verify_u_member(&g, k).map_err(|e| format!("u_family({k},{m}): {e}"))?;
            count += 1;
        }
    }
    let mut candidates = 0;
    for k in [3, 6, 7] {
        for n in [8 * k, 100] {
            for s in select_s(n, k) {
                let g = spex_candidate(n, k, s).map_err(|e| e.to_string())?;
                if !is_wheel_free(&g, k) {
                    return Err(format!("spex_candidate({n},{k},{s}) contains a wheel"));
                }
                candidates += 1;
            }
            for g in yuan_extremal(n, k).map_err(|e| e.to_string())? {
                if !is_wheel_free(&g, k) {
                    return Err(format!("yuan_extremal({n},{k}) contains a wheel"));
                }
                candidates += 1;
            }
        }
    }
    Ok(format!("{count} U-family members, {candidates} candidate/extremal graphs wheel-free"))
}

fn even_k_gap() -> Verdict {
    let mut scaled = Vec::new();
    for n in [26, 50, 102] {
        let g0 = lambda1(&spex_candidate(n, 4, HalfInt::ZERO).map_err(|e| e.to_string())?)?;
        let g1 = lambda1(&spex_candidate(n, 4, HalfInt::ONE).map_err(|e| e.to_string())?)?;
        let gap = (g1 - g0).abs();
        if gap > 3.0 / n as f64 {
            return Err(format!("n={n}: gap {gap:e} > 3/n"));
        }
        scaled.push(format!("{:.6}", gap * n as f64));
    }
    Ok(format!("gap*n at n=26,50,102: {}", scaled.join(", ")))
}

fn shard_determinism() -> Verdict {
    let settings = Settings { tol: DEFAULT_SPEX_TOL, max_iter: 1_000_000, seed: 0, env: Default::default() };
    let opts = SearchOptions::default();
    let mut reports = Vec::new();
    for shards in [1, 2, 4] {
        let r = run_parallel(6, 2, Objective::Lambda1, &opts, shards).map_err(|e| e.to_string())?;
        reports.push(search_json(&r, &settings, None));
    }
    if reports.windows(2).all(|w| w[0] == w[1]) {
        Ok(format!("1, 2, 4 shards give identical {}-byte reports", reports[0].len()))
    } else {
        Err("reports differ between shard counts".into())
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("formula vs exhaustive oracle (W_5)", formula_vs_oracle),
        ("lower-bound construction margin", lower_bound_construction),
        ("equitable partition exactness", equitable_exactness),
        ("exact polynomial identities", polynomial_identities),
        ("unbalanced beats balanced", unbalanced_beats_balanced),
        ("join spectral bound", join_bound),
        ("edge lower bound on corpus", edge_lower_bound_suite),
        ("construction verification", construction_verification),
        ("even-k candidate gap", even_k_gap),
        ("shard determinism", shard_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
