//! Acceptance checks. Runs as a plain binary (no libtest harness) so that
//! each criterion prints one PASS/FAIL line; exits non-zero on any failure.

mod common;

use std::collections::{BTreeMap, HashMap};
use std::process::ExitCode;
use std::time::Instant;

use rand::{RngExt, SeedableRng};
use rand_xoshiro::SplitMix64;

use common::{all_connected_graphs, has_triangle, is_pt_free, ptfree_corpus, CAP};
use ptcolor::closure::{closure_f, propagate_colors};
use ptcolor::finish::{two_list_color, ListInstance};
use ptcolor::generators::{multipartite, nae_reduction, random_nae_formula};
use ptcolor::graph::{verify_coloring, verify_path, verify_triangle};
use ptcolor::oracles::{brute_list_color, brute_three_color, find_induced_path, nae_solve, verify_refutation};
use ptcolor::seed::{find_seed, seed_palette_bound, SeedOutcome};
use ptcolor::start::{color_from_start, plain_bound, triangle_bound, StartOutcome};
use ptcolor::{approx_color, bound, Coloring, DriverResult, Graph, Refutation, RootPolicy};

type Check = Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("1 table reproduction t=5..12", table_reproduction),
        ("2 exhaustive connected graphs n<=7, t=3..7", exhaustive_small_graphs),
        ("3 NAE reduction equivalence", nae_equivalence),
        ("4 2-list-coloring vs brute force", list_coloring_equivalence),
        ("5 closure properties", closure_properties),
        ("6 runtime scaling on K_{a,a,a}, t=8", runtime_shape),
        ("7 P_5-free graphs with triangles use <=3 colors", t5_triangle_corpus),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} ({secs:.1}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail} ({secs:.1}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Colored, proper, total and within the bound for the reported triangle flag.
fn check_colored_within_bound(g: &Graph, t: usize, result: &DriverResult) -> Result<usize, String> {
    match result {
        DriverResult::Colored { coloring, colors_used, triangle } => {
            ensure(coloring.domain_size() == g.n() && verify_coloring(g, coloring), || "improper coloring".into())?;
            ensure(coloring.colors_used() == *colors_used, || "colors_used mismatch".into())?;
            if let Some(tri) = triangle {
                ensure(verify_triangle(g, tri), || format!("bad triangle {tri:?}"))?;
            }
            let b = bound(t, triangle.is_some()).unwrap();
            ensure(*colors_used <= b, || format!("{colors_used} colors > bound {b}"))?;
            Ok(*colors_used)
        }
        other => Err(format!("expected Colored, got {other:?}")),
    }
}

fn table_reproduction() -> Check {
    let mut total = 0;
    let mut worst = Vec::new();
    for t in 5..=12 {
        let corpus = ptfree_corpus(t, 70, 40, 1000 * t as u64);
        let mut max_tri = 0;
        let mut max_plain = 0;
        for inst in &corpus {
            let result = approx_color(&inst.graph, t, RootPolicy::LowestId).map_err(|e| format!("t={t} {}: {e}", inst.name))?;
            let used = check_colored_within_bound(&inst.graph, t, &result).map_err(|e| format!("t={t} {}: {e}", inst.name))?;
            if matches!(result, DriverResult::Colored { triangle: Some(_), .. }) {
                max_tri = max_tri.max(used);
            } else {
                max_plain = max_plain.max(used);
            }
        }
        total += corpus.len();
        worst.push(format!(
            "t={t}: max {max_tri}/{} with triangle, {max_plain}/{} without",
            bound(t, true).unwrap(),
            bound(t, false).unwrap()
        ));
    }
    Ok(format!("{total} graphs colored within bound; {}", worst.join("; ")))
}

fn check_refutation(g: &Graph, r: &Refutation, colorable: bool) -> Result<(), String> {
    ensure(!colorable, || format!("refuted a 3-colorable graph: {r:?}"))?;
    ensure(verify_refutation(g, r, CAP) == Ok(true), || format!("refutation does not verify: {r:?}"))
}

fn check_start(g: &Graph, v: usize, t: usize, colorable: bool) -> Result<(), String> {
    match color_from_start(g, v, t).map_err(|e| e.to_string())? {
        StartOutcome::NotThreeColorable(r) => check_refutation(g, &r, colorable),
        StartOutcome::PathFromV(p) => {
            ensure(verify_path(g, &p, t, Some(v)), || format!("bad path {p:?}"))?;
            // a path outcome needs an induced P_t from v to exist at all
            ensure(find_induced_path(g, t, Some(v), CAP).unwrap().is_some(), || "oracle finds no path".into())
        }
        StartOutcome::Plain(c) => check_total(g, &c, plain_bound(t)),
        StartOutcome::WithTriangle(c, tri) => {
            ensure(verify_triangle(g, &tri), || format!("bad triangle {tri:?}"))?;
            check_total(g, &c, triangle_bound(t))
        }
    }
}

fn check_total(g: &Graph, c: &Coloring, palette: usize) -> Result<(), String> {
    ensure(c.domain_size() == g.n() && verify_coloring(g, c), || "improper or partial coloring".into())?;
    ensure(c.colors_used() <= palette, || format!("{} colors > palette {palette}", c.colors_used()))
}

fn check_seed(g: &Graph, v: usize, k: usize, t: usize, colorable: bool) -> Result<(), String> {
    match find_seed(g, v, k, t).map_err(|e| e.to_string())? {
        SeedOutcome::NotThreeColorable(r) => check_refutation(g, &r, colorable),
        SeedOutcome::InducedPt(p) => ensure(verify_path(g, &p, t, None), || format!("bad P_t {p:?}")),
        SeedOutcome::PathFromV(p) => ensure(verify_path(g, &p, k.min(t), Some(v)), || format!("bad path from v {p:?}")),
        SeedOutcome::Seed(s) => {
            ensure(s.seed.contains(&v), || "seed misses the root".into())?;
            ensure(s.seed.len() <= 1.max(k.saturating_sub(2)), || format!("seed {:?} too large", s.seed))?;
            let cr = closure_f(g, &s.seed);
            let outside: Vec<usize> = (0..g.n()).filter(|u| cr.frontier.binary_search(u).is_err()).collect();
            ensure(s.remainder.domain() == outside, || "remainder domain is not the frontier complement".into())?;
            ensure(verify_coloring(g, &s.remainder), || "improper remainder".into())?;
            ensure(s.palette_bound == seed_palette_bound(t, s.triangle.is_some()), || "wrong palette bound".into())?;
            ensure(s.remainder.colors_used() <= s.palette_bound, || "remainder exceeds its palette".into())?;
            if let Some(tri) = s.triangle {
                ensure(verify_triangle(g, &tri), || format!("bad triangle {tri:?}"))?;
            }
            Ok(())
        }
    }
}

fn check_driver(g: &Graph, t: usize, colorable: bool, pt_free: bool) -> Result<(), String> {
    let result = approx_color(g, t, RootPolicy::LowestId).map_err(|e| e.to_string())?;
    if colorable && pt_free {
        return check_colored_within_bound(g, t, &result).map(|_| ());
    }
    match &result {
        DriverResult::NotThreeColorable(r) => check_refutation(g, r, colorable),
        DriverResult::FoundPt(p) => ensure(verify_path(g, p, t, None), || format!("bad P_t {p:?}")),
        DriverResult::Colored { coloring, .. } => {
            ensure(coloring.domain_size() == g.n() && verify_coloring(g, coloring), || "improper coloring".into())
        }
    }
}

fn exhaustive_small_graphs() -> Check {
    let graphs = all_connected_graphs(7);
    ensure(graphs.len() == 1 + 1 + 2 + 6 + 21 + 112 + 853, || format!("enumerated {} classes", graphs.len()))?;
    let mut runs = 0usize;
    for g in &graphs {
        let colorable = brute_three_color(g, CAP).unwrap().is_some();
        for t in 3..=7 {
            let pt_free = is_pt_free(g, t);
            let ctx = |e: String| format!("graph {:?}, t={t}: {e}", g.edges().collect::<Vec<_>>());
            for v in 0..g.n() {
                check_start(g, v, t, colorable).map_err(|e| ctx(format!("color_from_start v={v}: {e}")))?;
                for k in 2..=t {
                    check_seed(g, v, k, t, colorable).map_err(|e| ctx(format!("find_seed v={v} k={k}: {e}")))?;
                }
                runs += 1 + (t - 1);
            }
            check_driver(g, t, colorable, pt_free).map_err(|e| ctx(format!("approx_color: {e}")))?;
            runs += 1;
        }
    }
    Ok(format!("{} graphs, {runs} runs verified", graphs.len()))
}

fn nae_equivalence() -> Check {
    let mut sat = 0;
    for i in 0..200u64 {
        let vars = 1 + (i % 5) as usize;
        let clauses = (i / 5 % 5) as usize;
        let f = random_nae_formula(vars, clauses, 77 + i);
        let red = nae_reduction(&f);
        let nae = nae_solve(&f, 20).unwrap().is_some();
        let col = brute_three_color(&red.graph, CAP).unwrap().is_some();
        ensure(nae == col, || format!("{f:?}: nae_solve {nae}, 3-colorable {col}"))?;
        ensure(find_induced_path(&red.graph, 5, Some(red.v), CAP).unwrap().is_none(), || {
            format!("{f:?}: P_5 from the apex")
        })?;
        sat += nae as usize;
    }
    Ok(format!("200 formulas agree ({sat} satisfiable), no P_5 from the apex"))
}

fn random_graph(rng: &mut SplitMix64, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))).filter(|_| rng.random_bool(p)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

fn list_coloring_equivalence() -> Check {
    let mut rng = SplitMix64::seed_from_u64(4242);
    let mut feasible = 0;
    for i in 0..10_000 {
        let n = rng.random_range(1..=14usize);
        let p = rng.random_range(0.1..0.7);
        let g = random_graph(&mut rng, n, p);
        let mut li = ListInstance::default();
        for u in 0..n {
            if li.lists.len() < 12 && rng.random_bool(0.75) {
                let first = rng.random_range(1..=3u32);
                let list = if rng.random_bool(0.7) {
                    let second = (first + rng.random_range(1..=2u32) - 1) % 3 + 1;
                    vec![first, second]
                } else {
                    vec![first]
                };
                li.lists.insert(u, list);
            }
        }
        for u in 0..n {
            if li.lists.contains_key(&u) || !rng.random_bool(0.3) {
                continue;
            }
            let c = rng.random_range(1..=3u32);
            // fixed colors may not appear in neighboring lists or on fixed neighbors
            let clash = |w: &usize| li.lists.get(w).is_some_and(|l| l.contains(&c)) || li.fixed.get(w) == Some(&c);
            if !g.neighbors(u).iter().any(clash) {
                li.fixed.insert(u, c);
            }
        }
        let fast = two_list_color(&g, &li).map_err(|e| format!("instance {i}: {e}"))?;
        let slow = brute_list_color(&g, &li, 15).unwrap();
        ensure(fast.is_some() == slow.is_some(), || format!("instance {i}: 2-SAT {:?} vs brute {:?}", fast, slow))?;
        if let Some(c) = fast {
            feasible += 1;
            ensure(verify_coloring(&g, &c), || format!("instance {i}: improper"))?;
            for (v, l) in &li.lists {
                ensure(c.get(*v).is_some_and(|x| l.contains(&x)), || format!("instance {i}: {v} off its list"))?;
            }
            for (v, &x) in &li.fixed {
                ensure(c.get(*v) == Some(x), || format!("instance {i}: fixed {v} changed"))?;
            }
        }
    }
    Ok(format!("10000 instances agree ({feasible} feasible)"))
}

fn all_three_colorings(g: &Graph) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut c = vec![0u32; g.n()];
    fn go(g: &Graph, u: usize, c: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if u == g.n() {
            out.push(c.clone());
            return;
        }
        for x in 1..=3 {
            if g.neighbors(u).iter().all(|&w| w > u || c[w] != x) {
                c[u] = x;
                go(g, u + 1, c, out);
            }
        }
        c[u] = 0;
    }
    go(g, 0, &mut c, &mut out);
    out
}

fn closure_properties() -> Check {
    let mut rng = SplitMix64::seed_from_u64(99);
    let mut seeds_checked = 0usize;
    let mut assignments = 0usize;
    for i in 0..1000 {
        let n = rng.random_range(1..=12usize);
        let p = rng.random_range(0.25..0.7);
        let g = random_graph(&mut rng, n, p);
        let colorings = all_three_colorings(&g);
        let mut sets: Vec<Vec<usize>> = vec![vec![]];
        for a in 0..n {
            sets.push(vec![a]);
            for b in a + 1..n {
                sets.push(vec![a, b]);
                for c in b + 1..n {
                    sets.push(vec![a, b, c]);
                }
            }
        }
        let closures: HashMap<Vec<usize>, Vec<usize>> =
            sets.iter().map(|s| (s.clone(), closure_f(&g, s).closure)).collect();
        for s in sets.iter().filter(|s| !s.is_empty()) {
            let ctx = |e: &str| format!("graph {i} ({:?}), S={s:?}: {e}", g.edges().collect::<Vec<_>>());
            let cr = closure_f(&g, s);
            let cl = &cr.closure;
            ensure(s.iter().all(|u| cl.binary_search(u).is_ok()), || ctx("S not contained"))?;
            ensure(closure_f(&g, cl).closure == *cl, || ctx("not idempotent"))?;
            // no outside vertex with two adjacent inside neighbors
            let inside = |u: &usize| cl.binary_search(u).is_ok();
            for u in (0..n).filter(|u| !inside(u)) {
                let nb: Vec<usize> = g.neighbors(u).iter().copied().filter(inside).collect();
                let bad = nb.iter().any(|&a| nb.iter().any(|&b| a < b && g.has_edge(a, b)));
                ensure(!bad, || ctx(&format!("vertex {u} should have entered")))?;
            }
            for (t_set, t_cl) in &closures {
                if s.iter().all(|u| t_set.contains(u)) {
                    ensure(cl.iter().all(|u| t_cl.binary_search(u).is_ok()), || ctx(&format!("not monotone vs {t_set:?}")))?;
                }
            }
            // all colorings agreeing on S agree on F(S), and propagation finds them
            let mut forced: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
            for c in &colorings {
                let key: Vec<u32> = s.iter().map(|&u| c[u]).collect();
                let on_closure: Vec<u32> = cl.iter().map(|&u| c[u]).collect();
                if let Some(prev) = forced.get(&key) {
                    ensure(*prev == on_closure, || ctx("colors on F(S) not determined"))?;
                } else {
                    let assignment: Vec<(usize, u32)> = s.iter().map(|&u| (u, c[u])).collect();
                    let prop = propagate_colors(&g, &cr, &assignment).map_err(|e| ctx(&e.to_string()))?;
                    let prop = prop.map_err(|e| ctx(&format!("conflict {e:?} despite a coloring")))?;
                    let got: Vec<u32> = cl.iter().map(|&u| prop.get(u).unwrap_or(0)).collect();
                    ensure(got == on_closure, || ctx("propagation disagrees with a coloring"))?;
                    forced.insert(key, on_closure);
                    assignments += 1;
                }
            }
            seeds_checked += 1;
        }
    }
    Ok(format!("1000 graphs, {seeds_checked} seed sets, {assignments} seed colorings propagated"))
}

fn runtime_shape() -> Check {
    let sizes = [50usize, 100, 200, 400];
    let mut medians = Vec::new();
    for &a in &sizes {
        let g = multipartite(&[a, a, a]);
        let mut times = Vec::new();
        for _ in 0..5 {
            let start = Instant::now();
            let result = approx_color(&g, 8, RootPolicy::LowestId).map_err(|e| e.to_string())?;
            times.push(start.elapsed().as_secs_f64());
            check_colored_within_bound(&g, 8, &result).map_err(|e| format!("a={a}: {e}"))?;
        }
        times.sort_by(f64::total_cmp);
        medians.push((3 * a * a, times[2]));
    }
    let mut factors = Vec::new();
    for w in medians.windows(2) {
        let ((m1, t1), (m2, t2)) = (w[0], w[1]);
        let doublings = (m2 as f64 / m1 as f64).log2();
        factors.push((t2 / t1).powf(1.0 / doublings));
    }
    let detail = medians
        .iter()
        .map(|(m, t)| format!("m={m}: {:.2}ms", t * 1e3))
        .chain(factors.iter().map(|f| format!("x{f:.2}/doubling")))
        .collect::<Vec<_>>()
        .join(", ");
    ensure(factors.iter().all(|&f| f <= 2.5), || detail.clone())?;
    Ok(detail)
}

fn t5_triangle_corpus() -> Check {
    let corpus: Vec<_> = ptfree_corpus(5, 150, 60, 5150).into_iter().filter(|i| has_triangle(&i.graph)).collect();
    ensure(corpus.len() >= 50, || format!("only {} graphs with triangles", corpus.len()))?;
    for inst in &corpus {
        let result = approx_color(&inst.graph, 5, RootPolicy::LowestId).map_err(|e| e.to_string())?;
        let used = check_colored_within_bound(&inst.graph, 5, &result).map_err(|e| format!("{}: {e}", inst.name))?;
        ensure(used <= 3, || format!("{}: {used} colors", inst.name))?;
    }
    Ok(format!("{} graphs with triangles, all within 3 colors", corpus.len()))
}
