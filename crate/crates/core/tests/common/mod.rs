#![allow(dead_code)]

use std::collections::HashSet;

use ptcolor::generators::{random_3colorable, random_blowup};
use ptcolor::oracles::find_induced_path;
use ptcolor::Graph;

pub const CAP: usize = 24;

/// Edge bitmask over pairs `(i, j)`, `i < j`, in row order.
fn code(n: usize, adj: &[u16], perm: &[usize]) -> u64 {
    let mut c = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[perm[i]] >> perm[j] & 1 == 1 {
                c |= 1 << bit;
            }
            bit += 1;
        }
    }
    c
}

/// Smallest code over all relabelings that respect a refined degree
/// partition; equal for isomorphic graphs.
fn canonical(n: usize, adj: &[u16]) -> u64 {
    let mut class: Vec<usize> = (0..n).map(|u| adj[u].count_ones() as usize).collect();
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|u| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| adj[u] >> w & 1 == 1).map(|w| class[w]).collect();
                nb.sort_unstable();
                (class[u], nb)
            })
            .collect();
        let mut distinct = sig.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sig.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let before: HashSet<usize> = class.iter().copied().collect();
        let stable = distinct.len() == before.len();
        class = next;
        if stable {
            break;
        }
    }
    // positions are filled class by class
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| class[u]);
    let slots: Vec<usize> = order.iter().map(|&u| class[u]).collect();
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(
        n: usize,
        adj: &[u16],
        class: &[usize],
        slots: &[usize],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut u64,
    ) {
        if perm.len() == n {
            *best = (*best).min(code(n, adj, perm));
            return;
        }
        let want = slots[perm.len()];
        for u in 0..n {
            if !used[u] && class[u] == want {
                used[u] = true;
                perm.push(u);
                go(n, adj, class, slots, perm, used, best);
                perm.pop();
                used[u] = false;
            }
        }
    }
    go(n, adj, &class, &slots, &mut perm, &mut used, &mut best);
    best
}

fn to_graph(n: usize, adj: &[u16]) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))).filter(|&(u, w)| adj[u] >> w & 1 == 1).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// One representative per isomorphism class of graphs on `1..=max_n`
/// vertices, grouped by `n`.
pub fn all_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    assert!(max_n <= 9);
    let mut levels: Vec<Vec<Vec<u16>>> = vec![vec![vec![0]]];
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for prev in levels.last().unwrap() {
            for mask in 0u16..1 << (n - 1) {
                let mut adj = prev.clone();
                adj.push(mask);
                for (u, row) in adj.iter_mut().enumerate().take(n - 1) {
                    if mask >> u & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                if seen.insert(canonical(n, &adj)) {
                    next.push(adj);
                }
            }
        }
        levels.push(next);
    }
    levels.iter().enumerate().map(|(i, l)| l.iter().map(|adj| to_graph(i + 1, adj)).collect()).collect()
}

pub fn all_connected_graphs(max_n: usize) -> Vec<Graph> {
    all_graphs(max_n).into_iter().flatten().filter(|g| g.is_connected()).collect()
}

pub fn has_triangle(g: &Graph) -> bool {
    g.edges().any(|(u, w)| g.neighbors(u).iter().any(|&x| x != w && g.has_edge(x, w)))
}

pub fn is_pt_free(g: &Graph, t: usize) -> bool {
    find_induced_path(g, t, None, CAP).unwrap().is_none()
}

/// A 3-colorable graph tagged with how it was made.
pub struct Instance {
    pub name: String,
    pub graph: Graph,
}

/// 3-colorable `P_t`-free graphs: oracle-checked random samples on up to 20
/// vertices, then twin blowups of small samples on up to 60 vertices
/// (blowing up keeps `P_t`-freeness for `t >= 4`).
pub fn ptfree_corpus(t: usize, sampled: usize, blown: usize, seed: u64) -> Vec<Instance> {
    const PROBS: [f64; 6] = [0.2, 0.35, 0.5, 0.65, 0.8, 0.9];
    let mut out = Vec::new();
    let mut bases = Vec::new();
    let mut s = seed;
    let mut attempts = 0usize;
    while out.len() < sampled {
        attempts += 1;
        assert!(attempts < 2_000_000, "sampling P_{t}-free graphs stalled");
        let n = 6 + (s % 15) as usize;
        let p = PROBS[(s / 15 % PROBS.len() as u64) as usize];
        s += 1;
        let g = random_3colorable(n, p, s);
        if g.m() == 0 || !is_pt_free(&g, t) {
            continue;
        }
        if n <= 12 {
            bases.push(g.clone());
        }
        out.push(Instance { name: format!("random n={n} p={p} seed={s}"), graph: g });
    }
    assert!(!bases.is_empty() || blown == 0);
    for i in 0..blown {
        let base = &bases[i % bases.len()];
        let max_copies = (60 / base.n()).clamp(1, 6);
        let g = random_blowup(base, max_copies, seed ^ (i as u64) << 20);
        assert!(g.n() <= 60);
        if g.n() <= 20 {
            assert!(is_pt_free(&g, t));
        }
        out.push(Instance { name: format!("blowup #{i} of a {}-vertex sample", base.n()), graph: g });
    }
    out
}
