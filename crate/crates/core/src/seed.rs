//! Finding a small seed set `S ∋ v` such that everything outside the
//! frontier `F(S) ∪ N(F(S))` is already colored with few colors.
//!
//! With `Z = V - N[v]`, components of `G[Z]` are set aside one at a time
//! (each colored from an attachment vertex in `N(v)`) until a single
//! component `D` of `G[N(v)]` touches every remaining component. Once `v`
//! and a vertex of `D` are in `S`, all of `D` lies in `F(S)`, so only the
//! parts of the remaining components outside `N(D)` matter. Those are set
//! aside in the same way until one vertex `v'` of `D` touches all of them,
//! and the procedure recurses from `v'` with `k - 1`.
//!
//! Whenever two set-aside attempts both return induced paths, the paths are
//! spliced through `v` (or through `D`) into an induced `P_t`.

use std::collections::VecDeque;

use thiserror::Error;

use crate::certificate::Refutation;
use crate::closure::closure_f;
use crate::graph::{verify_coloring, verify_path, Coloring, Graph, PathWitness, TriangleWitness};
use crate::oracles::find_path_unchecked;
use crate::start::{check_input, excluding_start, merge_lifted, InputError, StartOutcome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeedOutcome {
    NotThreeColorable(Refutation),
    /// An induced path on exactly `t` vertices.
    InducedPt(PathWitness),
    /// An induced path on exactly `k` vertices starting at `v`.
    PathFromV(PathWitness),
    Seed(SeedResult),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedResult {
    /// Seed set, ascending; contains the root.
    pub seed: Vec<usize>,
    /// Proper coloring of exactly the vertices outside `F(S) ∪ N(F(S))`.
    pub remainder: Coloring,
    pub triangle: Option<TriangleWitness>,
    pub palette_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("spliced path {0:?} is not induced and no P_t was found in its support")]
    SpliceFailed(Vec<usize>),
}

/// `⌈(t-1)/2⌉`
pub(crate) fn half_up(t: usize) -> usize {
    t / 2
}

/// Palette allowed for the remainder coloring.
pub fn seed_palette_bound(t: usize, triangle: bool) -> usize {
    let p = half_up(t);
    if triangle {
        2.max((2 * p).saturating_sub(5))
    } else {
        1.max(p.saturating_sub(2))
    }
}

/// Runs the seed search on a connected graph from root `v`.
pub fn find_seed(g: &Graph, v: usize, k: usize, t: usize) -> Result<SeedOutcome, SeedError> {
    check_input(g, v, t, 2)?;
    if k == 0 {
        return Err(InputError::ParameterTooSmall { t: k, min: 1 }.into());
    }
    Ok(match search(g, v, k, t)? {
        Raw::Refuted(r) => SeedOutcome::NotThreeColorable(r),
        Raw::InducedPt(p) => SeedOutcome::InducedPt(p),
        Raw::PathFromV(p) => SeedOutcome::PathFromV(p),
        Raw::Seed { mut seed, colors, triangle } => {
            seed.sort_unstable();
            let cr = closure_f(g, &seed);
            let mut in_frontier = vec![false; g.n()];
            for &u in &cr.frontier {
                in_frontier[u] = true;
            }
            let mut remainder = Coloring::new(g.n());
            for u in (0..g.n()).filter(|&u| !in_frontier[u]) {
                let c = colors
                    .get(u)
                    .unwrap_or_else(|| panic!("vertex {u} outside the frontier was left uncolored"));
                remainder.set(u, c);
            }
            remainder.compact();
            debug_assert!(verify_coloring(g, &remainder));
            SeedOutcome::Seed(SeedResult {
                seed,
                remainder,
                palette_bound: seed_palette_bound(t, triangle.is_some()),
                triangle,
            })
        }
    })
}

/// Result before the frontier is known; `colors` covers at least every
/// vertex outside the eventual frontier.
enum Raw {
    Refuted(Refutation),
    InducedPt(PathWitness),
    PathFromV(PathWitness),
    Seed { seed: Vec<usize>, colors: Coloring, triangle: Option<TriangleWitness> },
}

/// What a set-aside attempt on `{x} ∪ part` produced.
enum Attempt {
    Colored,
    Path(Vec<usize>),
}

struct Aside<'g> {
    g: &'g Graph,
    colors: Coloring,
    triangle: Option<TriangleWitness>,
}

impl<'g> Aside<'g> {
    /// Colors `part` from attachment `x` with parameter `param`; records
    /// the coloring or returns the path from `x` (in `g` ids).
    fn attempt(&mut self, x: usize, part: &[usize], param: usize) -> Result<Attempt, Refutation> {
        let mut vertices = Vec::with_capacity(part.len() + 1);
        vertices.push(x);
        vertices.extend_from_slice(part);
        let sub = self.g.induced(&vertices);
        match excluding_start(&sub.graph, 0, param) {
            StartOutcome::NotThreeColorable(r) => Err(r.lift(&sub)),
            StartOutcome::PathFromV(p) => Ok(Attempt::Path(sub.lift_all(&p.0))),
            StartOutcome::Plain(c) => {
                merge_lifted(&mut self.colors, &c, &sub);
                Ok(Attempt::Colored)
            }
            StartOutcome::WithTriangle(c, tri) => {
                merge_lifted(&mut self.colors, &c, &sub);
                self.triangle.get_or_insert(tri.lift(&sub));
                Ok(Attempt::Colored)
            }
        }
    }
}

fn search(g: &Graph, v: usize, k: usize, t: usize) -> Result<Raw, SeedError> {
    let clamped = k > t;
    let k = k.min(t);
    let p = half_up(t);
    let n = g.n();
    if k <= p.max(3) {
        return Ok(match excluding_start(g, v, k) {
            StartOutcome::NotThreeColorable(r) => Raw::Refuted(r),
            StartOutcome::PathFromV(path) if clamped => Raw::InducedPt(path),
            StartOutcome::PathFromV(path) => Raw::PathFromV(path),
            StartOutcome::Plain(colors) => Raw::Seed { seed: vec![v], colors, triangle: None },
            StartOutcome::WithTriangle(colors, tri) => {
                Raw::Seed { seed: vec![v], colors, triangle: Some(tri) }
            }
        });
    }
    if g.degree(v) == 0 {
        return Ok(Raw::Seed { seed: vec![v], colors: Coloring::new(n), triangle: None });
    }

    let mut aside = Aside { g, colors: Coloring::new(n), triangle: None };
    let nv = g.neighbors(v).to_vec();
    let mut in_nv = vec![false; n];
    nv.iter().for_each(|&u| in_nv[u] = true);
    let z: Vec<usize> = (0..n).filter(|&u| u != v && !in_nv[u]).collect();

    // phase 1: components of G[Z] against components of G[N(v)]
    let cs = g.components_within(&z);
    let ds = g.components_within(&nv);
    let mut d_of = vec![usize::MAX; n];
    for (j, d) in ds.iter().enumerate() {
        d.iter().for_each(|&u| d_of[u] = j);
    }
    let c_touches: Vec<Vec<usize>> = cs
        .iter()
        .map(|c| {
            let mut js: Vec<usize> = c
                .iter()
                .flat_map(|&u| g.neighbors(u).iter().filter(|&&w| in_nv[w]).map(|&w| d_of[w]))
                .collect();
            js.sort_unstable();
            js.dedup();
            js
        })
        .collect();
    let mut alive = vec![true; cs.len()];
    let dominant = loop {
        let live: Vec<usize> = (0..cs.len()).filter(|&i| alive[i]).collect();
        let mut count = vec![0usize; ds.len()];
        for &i in &live {
            c_touches[i].iter().for_each(|&j| count[j] += 1);
        }
        let best = (0..ds.len()).max_by_key(|&j| (count[j], std::cmp::Reverse(j))).expect("N(v) non-empty");
        if count[best] == live.len() {
            break best;
        }
        let c2 = *live.iter().find(|&&i| !c_touches[i].contains(&best)).expect("uncovered component");
        let d2 = c_touches[c2][0];
        let c1 = *live
            .iter()
            .find(|&&i| c_touches[i].contains(&best) && !c_touches[i].contains(&d2))
            .expect("maximality of the chosen component gives a private component");
        let x1 = lowest_attachment(g, &ds[best], &cs[c1]);
        let x2 = lowest_attachment(g, &ds[d2], &cs[c2]);
        let first = aside.attempt(x1, &cs[c1], p);
        let first = match first {
            Ok(a) => a,
            Err(r) => return Ok(Raw::Refuted(r)),
        };
        let second = match aside.attempt(x2, &cs[c2], p) {
            Ok(a) => a,
            Err(r) => return Ok(Raw::Refuted(r)),
        };
        let before = live.len();
        match (first, second) {
            (Attempt::Path(p1), Attempt::Path(p2)) => {
                let mut cand: Vec<usize> = p1.into_iter().rev().collect();
                cand.push(v);
                cand.extend(p2);
                let mut support = cand.clone();
                support.extend_from_slice(&cs[c1]);
                support.extend_from_slice(&cs[c2]);
                return splice(g, cand, t, support).map(Raw::InducedPt);
            }
            (a, b) => {
                if matches!(a, Attempt::Colored) {
                    alive[c1] = false;
                }
                if matches!(b, Attempt::Colored) {
                    alive[c2] = false;
                }
            }
        }
        debug_assert!(alive.iter().filter(|&&a| a).count() < before);
    };

    // phase 2: inside the remaining components, only parts outside N(D) count
    let d = &ds[dominant];
    let mut in_d = vec![false; n];
    d.iter().for_each(|&u| in_d[u] = true);
    let mut in_nd = vec![false; n];
    for &u in d {
        for &w in g.neighbors(u) {
            if !in_d[w] {
                in_nd[w] = true;
            }
        }
    }
    let q = (t - 1) / 2;
    let mut pieces: Vec<Vec<usize>> =
        (0..cs.len()).filter(|&i| alive[i]).map(|i| cs[i].clone()).collect();
    let mut mask = vec![false; n];
    let root = loop {
        let bad: Vec<usize> =
            (0..pieces.len()).filter(|&i| pieces[i].iter().any(|&u| !in_nd[u])).collect();
        if bad.is_empty() {
            break d[0];
        }
        let touch: Vec<Vec<usize>> = bad
            .iter()
            .map(|&i| {
                let mut ys: Vec<usize> = pieces[i]
                    .iter()
                    .flat_map(|&u| g.neighbors(u).iter().copied().filter(|&w| in_d[w]))
                    .collect();
                ys.sort_unstable();
                ys.dedup();
                ys
            })
            .collect();
        let mut count = vec![0usize; n];
        touch.iter().flatten().for_each(|&y| count[y] += 1);
        let y = *d.iter().max_by_key(|&&y| (count[y], std::cmp::Reverse(y))).expect("D non-empty");
        if count[y] == bad.len() {
            break y;
        }
        let b2 = (0..bad.len()).find(|&b| touch[b].binary_search(&y).is_err()).expect("missed piece");
        let y2 = touch[b2][0];
        let b1 = (0..bad.len())
            .find(|&b| touch[b].binary_search(&y).is_ok() && touch[b].binary_search(&y2).is_err())
            .expect("maximality of y gives a piece seen by y only");
        let (i1, i2) = (bad[b1], bad[b2]);
        let outer = |piece: &[usize], mask: &mut Vec<bool>| {
            let out: Vec<usize> = piece.iter().copied().filter(|&u| !in_nd[u]).collect();
            out.iter().for_each(|&u| mask[u] = true);
            g.components_masked(&out, mask).swap_remove(0)
        };
        let e1 = outer(&pieces[i1], &mut mask);
        let e2 = outer(&pieces[i2], &mut mask);
        let seg1 = segment_to(g, y, &pieces[i1], &e1, &mut mask);
        let seg2 = segment_to(g, y2, &pieces[i2], &e2, &mut mask);
        let (x1, x2) = (seg1[0], seg2[0]);
        let first = match aside.attempt(x1, &e1, q) {
            Ok(a) => a,
            Err(r) => return Ok(Raw::Refuted(r)),
        };
        let second = match aside.attempt(x2, &e2, q) {
            Ok(a) => a,
            Err(r) => return Ok(Raw::Refuted(r)),
        };
        match (first, second) {
            (Attempt::Path(p1), Attempt::Path(p2)) => {
                // far end of p1 .. x1 .. y [v] y2 .. x2 .. far end of p2
                let mut cand: Vec<usize> = p1.into_iter().rev().collect();
                cand.extend_from_slice(&seg1[1..]);
                if !g.has_edge(y, y2) {
                    cand.push(v);
                }
                cand.extend(seg2.iter().rev().take(seg2.len() - 1));
                cand.extend(p2);
                let mut support = cand.clone();
                support.extend_from_slice(&pieces[i1]);
                support.extend_from_slice(&pieces[i2]);
                support.extend_from_slice(&[v, y, y2]);
                return splice(g, cand, t, support).map(Raw::InducedPt);
            }
            (a, b) => {
                let mut removed = Vec::new();
                if matches!(a, Attempt::Colored) {
                    removed.push((i1, e1));
                }
                if matches!(b, Attempt::Colored) {
                    removed.push((i2, e2));
                }
                // replace each shrunken piece by the components of what is left
                removed.sort_by_key(|(i, _)| std::cmp::Reverse(*i));
                for (i, e) in removed {
                    let old = pieces.swap_remove(i);
                    e.iter().for_each(|&u| mask[u] = true);
                    let left: Vec<usize> = old.into_iter().filter(|&u| !mask[u]).collect();
                    e.iter().for_each(|&u| mask[u] = false);
                    left.iter().for_each(|&u| mask[u] = true);
                    pieces.extend(g.components_masked(&left, &mut mask));
                }
                pieces.sort_by_key(|piece| piece[0]);
            }
        }
    };

    // recurse from root on the remaining bad pieces
    let mut rest = vec![root];
    for piece in pieces.iter().filter(|piece| piece.iter().any(|&u| !in_nd[u])) {
        rest.extend_from_slice(piece);
    }
    let sub = g.induced(&rest);
    Ok(match search(&sub.graph, 0, k - 1, t)? {
        Raw::Refuted(r) => Raw::Refuted(r.lift(&sub)),
        Raw::InducedPt(path) => Raw::InducedPt(path.lift(&sub)),
        Raw::PathFromV(path) => {
            let mut full = vec![v];
            full.extend(sub.lift_all(&path.0));
            Raw::PathFromV(PathWitness(full))
        }
        Raw::Seed { seed, colors, triangle } => {
            let mut full_seed = sub.lift_all(&seed);
            full_seed.push(v);
            merge_lifted(&mut aside.colors, &colors, &sub);
            Raw::Seed {
                seed: full_seed,
                colors: aside.colors,
                triangle: aside.triangle.or_else(|| triangle.map(|tri| tri.lift(&sub))),
            }
        }
    })
}

/// Lowest-id vertex of `from` with a neighbor in `to`.
fn lowest_attachment(g: &Graph, from: &[usize], to: &[usize]) -> usize {
    let mut best = usize::MAX;
    let mut to_sorted = to.to_vec();
    to_sorted.sort_unstable();
    for &c in &to_sorted {
        for &w in g.neighbors(c) {
            if w < best && from.binary_search(&w).is_ok() {
                best = w;
            }
        }
    }
    assert!(best != usize::MAX, "no attachment between the given sets");
    best
}

/// Breadth-first search from `y` through `piece`, stopping at the first
/// vertex `x` with a neighbor in `target`. Returns the path `x, ..., y`.
fn segment_to(g: &Graph, y: usize, piece: &[usize], target: &[usize], mask: &mut [bool]) -> Vec<usize> {
    let n = g.n();
    let mut in_piece = vec![false; n];
    piece.iter().for_each(|&u| in_piece[u] = true);
    target.iter().for_each(|&u| mask[u] = true);
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::from([y]);
    parent[y] = y;
    let mut found = None;
    'bfs: while let Some(u) = queue.pop_front() {
        if g.neighbors(u).iter().any(|&w| mask[w]) {
            found = Some(u);
            break 'bfs;
        }
        for &w in g.neighbors(u) {
            if in_piece[w] && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    target.iter().for_each(|&u| mask[u] = false);
    let mut u = found.expect("piece is connected and touches y");
    let mut seg = vec![u];
    while u != y {
        u = parent[u];
        seg.push(u);
    }
    seg
}

/// Cuts `cand` to `t` vertices and checks it; otherwise searches the support.
fn splice(g: &Graph, cand: Vec<usize>, t: usize, mut support: Vec<usize>) -> Result<PathWitness, SeedError> {
    if cand.len() >= t {
        let path = PathWitness(cand[..t].to_vec());
        if verify_path(g, &path, t, None) {
            return Ok(path);
        }
    }
    support.sort_unstable();
    support.dedup();
    let sub = g.induced(&support);
    match find_path_unchecked(&sub.graph, t, None) {
        Some(path) => Ok(path.lift(&sub)),
        None => Err(SeedError::SpliceFailed(cand)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::multipartite;
    use crate::graph::verify_triangle;


    #[test]
    fn bounds() {
        assert_eq!(seed_palette_bound(8, false), 2);
        assert_eq!(seed_palette_bound(8, true), 3);
        assert_eq!(seed_palette_bound(5, false), 1);
        assert_eq!(seed_palette_bound(5, true), 2);
        assert_eq!(seed_palette_bound(13, true), 7);
    }

    #[test]
    fn path_delegation() {
        let p5 = Graph::path(5);
        assert_eq!(
            find_seed(&p5, 0, 3, 9).unwrap(),
            SeedOutcome::PathFromV(PathWitness(vec![0, 1, 2]))
        );
    }

    #[test]
    fn octahedron_covers_everything() {
        let g = multipartite(&[2, 2, 2]);
        match find_seed(&g, 0, 8, 8).unwrap() {
            SeedOutcome::Seed(sr) => {
                assert!(sr.seed.contains(&0));
                assert!(sr.seed.len() <= 6);
                assert_eq!(sr.remainder.domain_size(), 0);
                assert!(sr.triangle.is_none() || verify_triangle(&g, &sr.triangle.unwrap()));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn single_vertex() {
        match find_seed(&Graph::empty(1), 0, 5, 6).unwrap() {
            SeedOutcome::Seed(sr) => {
                assert_eq!(sr.seed, vec![0]);
                assert_eq!(sr.remainder.domain_size(), 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn clamped_k_reports_pt() {
        // k > t on a long path: the path from the end is a P_t
        let p = Graph::path(9);
        match find_seed(&p, 0, 20, 3).unwrap() {
            SeedOutcome::InducedPt(path) => assert!(verify_path(&p, &path, 3, None)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn long_path_yields_pt_somewhere() {
        let p = Graph::path(15);
        for t in 4..=9 {
            match find_seed(&p, 7, t, t).unwrap() {
                SeedOutcome::InducedPt(path) => assert!(verify_path(&p, &path, t, None)),
                SeedOutcome::PathFromV(path) => assert!(verify_path(&p, &path, t, Some(7))),
                other => panic!("t={t}: {other:?}"),
            }
        }
    }
}
