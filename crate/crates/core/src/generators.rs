//! Instance constructions: the NAE-3SAT reduction, clique joins, and seeded
//! families of 3-colorable graphs for test corpora.
//!
//! Randomness comes from SplitMix64 seeded with the caller's `u64`, so every
//! instance is reproducible from `(seed, parameters)`.

use std::collections::BTreeMap;

use rand::{RngExt, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::oracles::{find_path_unchecked, NaeFormula};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionGraph {
    pub graph: Graph,
    /// The apex, adjacent to every literal vertex.
    pub v: usize,
    /// `literal_map[i]` = (vertex of `x_{i+1}`, vertex of its negation).
    pub literal_map: Vec<(usize, usize)>,
    /// Triangle vertices per clause, in literal order.
    pub clause_triangles: Vec<[usize; 3]>,
}

impl ReductionGraph {
    pub fn literal_vertex(&self, lit: i32) -> usize {
        let (pos, neg) = self.literal_map[lit.unsigned_abs() as usize - 1];
        if lit > 0 {
            pos
        } else {
            neg
        }
    }
}

/// Graph that is 3-colorable iff `f` has a not-all-equal assignment.
/// Numbering: apex 0, then `x_i, ¬x_i` per variable, then clause triangles.
pub fn nae_reduction(f: &NaeFormula) -> ReductionGraph {
    let n = f.num_vars;
    let literal_map: Vec<(usize, usize)> = (0..n).map(|i| (1 + 2 * i, 2 + 2 * i)).collect();
    let clause_triangles: Vec<[usize; 3]> =
        (0..f.clauses.len()).map(|j| std::array::from_fn(|pos| 1 + 2 * n + 3 * j + pos)).collect();
    let mut edges = Vec::with_capacity(3 * n + 6 * f.clauses.len());
    for &(x, nx) in &literal_map {
        edges.push((0, x));
        edges.push((0, nx));
        edges.push((x, nx));
    }
    let mut red = ReductionGraph { graph: Graph::empty(0), v: 0, literal_map, clause_triangles };
    for (clause, tri) in f.clauses.iter().zip(&red.clause_triangles) {
        edges.extend([(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])]);
        for (&lit, &corner) in clause.iter().zip(tri) {
            edges.push((corner, red.literal_vertex(lit)));
        }
    }
    let total = 1 + 2 * n + 3 * f.clauses.len();
    red.graph = Graph::from_edge_list(total, &edges).expect("reduction edges are simple");
    red
}

/// `g` plus a clique on `k - 3` new vertices complete to `g`.
pub fn clique_join(g: &Graph, k: usize) -> Graph {
    assert!(k >= 4, "clique_join needs k >= 4, got {k}");
    let n = g.n();
    let extra = k - 3;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for a in n..n + extra {
        edges.extend((0..n).map(|u| (u, a)));
        edges.extend((a + 1..n + extra).map(|b| (a, b)));
    }
    Graph::from_edge_list(n + extra, &edges).expect("join edges are simple")
}

/// Vertices split into classes `i % 3`; each cross-class pair kept with
/// probability `p`.
pub fn random_3colorable(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            if u % 3 != w % 3 && rng.random_bool(p) {
                edges.push((u, w));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("random edges are simple")
}

/// Rejection sampling on [`random_3colorable`] until no induced `P_t`
/// remains. Attempt `i` uses seed `seed + i`.
pub fn random_3colorable_ptfree(n: usize, t: usize, p: f64, seed: u64, max_tries: usize) -> Option<Graph> {
    (0..max_tries as u64)
        .map(|i| random_3colorable(n, p, seed.wrapping_add(i)))
        .find(|g| find_path_unchecked(g, t, None).is_none())
}

/// Complete multipartite graph with the given part sizes, parts numbered
/// consecutively.
pub fn multipartite(sizes: &[usize]) -> Graph {
    assert!(!sizes.is_empty(), "multipartite needs at least one part");
    let mut part = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let n = part.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
        .filter(|&(u, w)| part[u] != part[w])
        .collect();
    Graph::from_edge_list(n, &edges).expect("multipartite edges are simple")
}

/// Replaces vertex `u` of `h` by `copies[u] ≥ 1` pairwise non-adjacent twins.
/// Keeps 3-colorability, triangles, and (for `t ≥ 4`) `P_t`-freeness.
pub fn blowup(h: &Graph, copies: &[usize]) -> Graph {
    assert_eq!(copies.len(), h.n(), "one copy count per vertex");
    assert!(copies.iter().all(|&c| c >= 1), "every vertex needs at least one copy");
    let mut first = Vec::with_capacity(h.n() + 1);
    first.push(0);
    for &c in copies {
        first.push(first.last().unwrap() + c);
    }
    let mut edges = Vec::new();
    for (u, w) in h.edges() {
        for a in first[u]..first[u + 1] {
            edges.extend((first[w]..first[w + 1]).map(|b| (a, b)));
        }
    }
    Graph::from_edge_list(first[h.n()], &edges).expect("blowup edges are simple")
}

/// [`blowup`] with copy counts drawn uniformly from `1..=max_copies`.
pub fn random_blowup(h: &Graph, max_copies: usize, seed: u64) -> Graph {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let copies: Vec<usize> = (0..h.n()).map(|_| rng.random_range(1..=max_copies.max(1))).collect();
    blowup(h, &copies)
}

/// Random NAE formula with `num_vars` variables and `num_clauses` clauses.
pub fn random_nae_formula(num_vars: usize, num_clauses: usize, seed: u64) -> NaeFormula {
    assert!(num_vars >= 1 || num_clauses == 0, "clauses need variables");
    let mut rng = SplitMix64::seed_from_u64(seed);
    let clauses = (0..num_clauses)
        .map(|_| {
            std::array::from_fn(|_| {
                let var = rng.random_range(1..=num_vars as i32);
                if rng.random_bool(0.5) {
                    var
                } else {
                    -var
                }
            })
        })
        .collect();
    NaeFormula { num_vars, clauses }
}

/// One generated instance as recorded in a corpus manifest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    /// File name of the graph, relative to the manifest.
    pub file: String,
    pub generator: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub seed: Option<u64>,
    pub n: usize,
    pub m: usize,
    /// 3-colorable by construction (or oracle check).
    pub three_colorable: Option<bool>,
    /// Known to contain no induced `P_t` for this `t`.
    pub pt_free: Option<usize>,
    /// Apex vertex of an NAE reduction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub apex: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub schema: u32,
    pub instances: Vec<ManifestEntry>,
}
