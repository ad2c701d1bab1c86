//! Coloring a connected graph from a vertex `v` that starts no induced
//! `P_t`: either an induced `P_t` from `v`, a refutation, or a coloring with
//! `max{2, t-2}` colors (`max{3, 2t-5}` together with a triangle).
//!
//! For `t <= 4` the graph is split into `v`, `N(v)` and the components of
//! `Z = V - N[v]`; every neighbor of `v` is complete or anticomplete to each
//! component, which makes a 3-coloring (or an obstruction) explicit. For
//! larger `t` each component `C` of `Z` is handled recursively with parameter
//! `t - 1` from an attachment vertex `w_C` in `N(v)`.

use thiserror::Error;

use crate::certificate::Refutation;
use crate::graph::{Bipartition, Coloring, Graph, PathWitness, Subgraph, TriangleWitness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StartOutcome {
    NotThreeColorable(Refutation),
    PathFromV(PathWitness),
    Plain(Coloring),
    WithTriangle(Coloring, TriangleWitness),
}

impl StartOutcome {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            StartOutcome::Plain(c) | StartOutcome::WithTriangle(c, _) => Some(c),
            _ => None,
        }
    }

    pub fn triangle(&self) -> Option<TriangleWitness> {
        match self {
            StartOutcome::WithTriangle(_, tri) => Some(*tri),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("input graph is not connected")]
    Disconnected,
    #[error("vertex {v} is not in a graph on {n} vertices")]
    NoSuchVertex { v: usize, n: usize },
    #[error("parameter t = {t} is below the minimum {min}")]
    ParameterTooSmall { t: usize, min: usize },
}

pub(crate) fn check_input(g: &Graph, v: usize, t: usize, min_t: usize) -> Result<(), InputError> {
    if v >= g.n() {
        return Err(InputError::NoSuchVertex { v, n: g.n() });
    }
    if t < min_t {
        return Err(InputError::ParameterTooSmall { t, min: min_t });
    }
    if !g.is_connected() {
        return Err(InputError::Disconnected);
    }
    Ok(())
}

/// Palette bound of a plain coloring of `G` from [`color_from_start`].
pub fn plain_bound(t: usize) -> usize {
    2.max(t.saturating_sub(2))
}

/// Palette bound of a coloring of `G` that comes with a triangle.
pub fn triangle_bound(t: usize) -> usize {
    3.max((2 * t).saturating_sub(5))
}

/// Palette bound of a plain coloring of `G - v` from [`color_excluding_start`].
pub fn plain_bound_excluding(t: usize) -> usize {
    1.max(t.saturating_sub(2))
}

pub fn triangle_bound_excluding(t: usize) -> usize {
    2.max((2 * t).saturating_sub(5))
}

/// Colors all of the connected graph `g` starting from `v`.
pub fn color_from_start(g: &Graph, v: usize, t: usize) -> Result<StartOutcome, InputError> {
    check_input(g, v, t, 2)?;
    Ok(from_start(g, v, t))
}

/// Same as [`color_from_start`] but the returned coloring covers `G - v`
/// and uses one color fewer.
pub fn color_excluding_start(g: &Graph, v: usize, t: usize) -> Result<StartOutcome, InputError> {
    check_input(g, v, t, 1)?;
    Ok(excluding_start(g, v, t))
}

pub(crate) fn from_start(g: &Graph, v: usize, t: usize) -> StartOutcome {
    if t <= 4 {
        small_t(g, v, t)
    } else {
        large_t(g, v, t)
    }
}

pub(crate) fn excluding_start(g: &Graph, v: usize, t: usize) -> StartOutcome {
    if t == 1 {
        return StartOutcome::PathFromV(PathWitness(vec![v]));
    }
    if t <= 3 {
        return adjacent_to_all(g, v, t);
    }
    match from_start(g, v, t) {
        StartOutcome::Plain(mut c) => {
            c.unset(v);
            c.compact();
            StartOutcome::Plain(c)
        }
        StartOutcome::WithTriangle(mut c, tri) => {
            c.unset(v);
            c.compact();
            StartOutcome::WithTriangle(c, tri)
        }
        other => other,
    }
}

/// `t <= 3`: unless `v` sees every vertex there is a short path from `v`;
/// otherwise `G - v` must be bipartite.
fn adjacent_to_all(g: &Graph, v: usize, t: usize) -> StartOutcome {
    let n = g.n();
    if t == 2 && n > 1 {
        return StartOutcome::PathFromV(PathWitness(vec![v, g.neighbors(v)[0]]));
    }
    if g.degree(v) + 1 < n {
        for &x in g.neighbors(v) {
            if let Some(&w) = g.neighbors(x).iter().find(|&&w| w != v && !g.has_edge(v, w)) {
                return StartOutcome::PathFromV(PathWitness(vec![v, x, w]));
            }
        }
        unreachable!("connected graph with a non-neighbor of v has a vertex at distance 2");
    }
    let rest: Vec<usize> = g.neighbors(v).to_vec();
    match g.bipartition_or_odd_cycle(&rest) {
        Bipartition::OddCycle(cycle) => {
            let mut w = cycle;
            w.push(v);
            StartOutcome::NotThreeColorable(Refutation::small(w))
        }
        Bipartition::Sides(a, b) => {
            let mut c = Coloring::new(n);
            a.iter().for_each(|&u| c.set(u, 1));
            b.iter().for_each(|&u| c.set(u, 2));
            match g.has_edge_within(&rest) {
                Some((x, y)) => StartOutcome::WithTriangle(c, TriangleWitness([v, x, y])),
                None => StartOutcome::Plain(c),
            }
        }
    }
}

/// Base case. A `P_4` from `v` found along the way is cut down to `t`
/// vertices when `t < 4`.
fn small_t(g: &Graph, v: usize, t: usize) -> StartOutcome {
    const NONE: usize = usize::MAX;
    let n = g.n();
    let mut in_nv = vec![false; n];
    for &w in g.neighbors(v) {
        in_nv[w] = true;
    }
    let z: Vec<usize> = (0..n).filter(|&u| u != v && !in_nv[u]).collect();
    let comps = g.components_within(&z);
    let mut comp_of = vec![NONE; n];
    for (i, comp) in comps.iter().enumerate() {
        for &u in comp {
            comp_of[u] = i;
        }
    }

    // every w in N(v) must see all or none of each component
    let mut count = vec![0usize; n];
    let mut touched = Vec::new();
    for (i, comp) in comps.iter().enumerate() {
        for &c in comp {
            for &w in g.neighbors(c) {
                if in_nv[w] {
                    if count[w] == 0 {
                        touched.push(w);
                    }
                    count[w] += 1;
                }
            }
        }
        for &w in &touched {
            if count[w] < comp.len() {
                let path = partial_attachment_path(g, v, w, i, &comp_of, comp);
                return StartOutcome::PathFromV(PathWitness(path[..t.min(4)].to_vec()));
            }
        }
        for w in touched.drain(..) {
            count[w] = 0;
        }
    }
    debug_assert!(comps.iter().all(|comp| {
        let first: Vec<usize> = g.neighbors(comp[0]).iter().copied().filter(|&w| in_nv[w]).collect();
        comp.iter().all(|&y| {
            g.neighbors(y).iter().copied().filter(|&w| in_nv[w]).eq(first.iter().copied())
        })
    }));

    let mut coloring = Coloring::new(n);
    coloring.set(v, 1);
    for comp in &comps {
        if comp.len() == 1 {
            coloring.set(comp[0], 1);
            continue;
        }
        match g.bipartition_or_odd_cycle(comp) {
            Bipartition::OddCycle(cycle) => {
                // some neighbor of v is complete to the component: odd wheel
                let hub = g
                    .neighbors(comp[0])
                    .iter()
                    .copied()
                    .find(|&w| in_nv[w])
                    .expect("component of Z has a neighbor in N(v)");
                let mut w = cycle;
                w.push(hub);
                return StartOutcome::NotThreeColorable(Refutation::small(w));
            }
            Bipartition::Sides(side, _) => side.iter().for_each(|&u| coloring.set(u, 1)),
        }
    }

    let rest: Vec<usize> = (0..n).filter(|&u| coloring.get(u).is_none()).collect();
    let Some((x, y)) = g.has_edge_within(&rest) else {
        rest.iter().for_each(|&u| coloring.set(u, 2));
        return StartOutcome::Plain(coloring);
    };
    match g.bipartition_or_odd_cycle(&rest) {
        Bipartition::Sides(a, b) => {
            a.iter().for_each(|&u| coloring.set(u, 2));
            b.iter().for_each(|&u| coloring.set(u, 3));
            let tri = if in_nv[x] && in_nv[y] {
                TriangleWitness([v, x, y])
            } else {
                let (hub, zv) = if in_nv[x] { (x, y) } else { (y, x) };
                let mate = same_component_neighbor(g, zv, &comp_of);
                TriangleWitness([hub, zv, mate])
            };
            StartOutcome::WithTriangle(coloring, tri)
        }
        Bipartition::OddCycle(cycle) => {
            // each cycle vertex in Z has a component mate adjacent to both
            // of its cycle neighbors, so N(v) ∩ cycle needs three colors
            let mut w = vec![v];
            for &c in &cycle {
                w.push(c);
                if !in_nv[c] {
                    w.push(same_component_neighbor(g, c, &comp_of));
                }
            }
            StartOutcome::NotThreeColorable(Refutation::small(w))
        }
    }
}

/// `w` sees some but not all of component `comp`; returns `v, w, c, d` with
/// `c ~ w`, `d !~ w`, `c ~ d`.
fn partial_attachment_path(
    g: &Graph,
    v: usize,
    w: usize,
    comp_index: usize,
    comp_of: &[usize],
    comp: &[usize],
) -> Vec<usize> {
    for &c in comp {
        if !g.has_edge(w, c) {
            continue;
        }
        if let Some(&d) = g
            .neighbors(c)
            .iter()
            .find(|&&d| comp_of[d] == comp_index && !g.has_edge(w, d))
        {
            return vec![v, w, c, d];
        }
    }
    unreachable!("connected component partially seen by w has a crossing edge")
}

fn same_component_neighbor(g: &Graph, u: usize, comp_of: &[usize]) -> usize {
    *g.neighbors(u)
        .iter()
        .find(|&&w| comp_of[w] == comp_of[u])
        .expect("vertex in a non-singleton component")
}

fn large_t(g: &Graph, v: usize, t: usize) -> StartOutcome {
    let n = g.n();
    let nv = g.neighbors(v).to_vec();
    let (side_a, side_b) = match g.bipartition_or_odd_cycle(&nv) {
        Bipartition::OddCycle(cycle) => {
            let mut w = cycle;
            w.push(v);
            return StartOutcome::NotThreeColorable(Refutation::small(w));
        }
        Bipartition::Sides(a, b) => (a, b),
    };
    let mut triangle = g.has_edge_within(&nv).map(|(x, y)| TriangleWitness([v, x, y]));

    let mut in_nv = vec![false; n];
    for &w in &nv {
        in_nv[w] = true;
    }
    let z: Vec<usize> = (0..n).filter(|&u| u != v && !in_nv[u]).collect();
    let mut coloring = Coloring::new(n);
    let mut z_colors = 0;
    for comp in g.components_within(&z) {
        let attach = comp
            .iter()
            .flat_map(|&c| g.neighbors(c).iter().copied().filter(|&w| in_nv[w]))
            .min()
            .expect("component of Z has a neighbor in N(v)");
        let mut vertices = Vec::with_capacity(comp.len() + 1);
        vertices.push(attach);
        vertices.extend_from_slice(&comp);
        let sub = g.induced(&vertices);
        match excluding_start(&sub.graph, 0, t - 1) {
            StartOutcome::NotThreeColorable(r) => {
                return StartOutcome::NotThreeColorable(r.lift(&sub))
            }
            StartOutcome::PathFromV(p) => {
                let mut path = vec![v];
                path.extend(sub.lift_all(&p.0));
                return StartOutcome::PathFromV(PathWitness(path));
            }
            StartOutcome::Plain(c) => {
                z_colors = z_colors.max(merge_lifted(&mut coloring, &c, &sub));
            }
            StartOutcome::WithTriangle(c, tri) => {
                z_colors = z_colors.max(merge_lifted(&mut coloring, &c, &sub));
                triangle.get_or_insert(tri.lift(&sub));
            }
        }
    }

    // N(v) gets one or two fresh colors; v reuses color 1 (non-adjacent to Z)
    let base = z_colors.max(1);
    coloring.set(v, 1);
    side_a.iter().for_each(|&u| coloring.set(u, base + 1));
    side_b.iter().for_each(|&u| coloring.set(u, base + 2));
    match triangle {
        Some(tri) => StartOutcome::WithTriangle(coloring, tri),
        None => StartOutcome::Plain(coloring),
    }
}

/// Copies the colors of `part`, a coloring of `sub`, into `target` (a
/// coloring of the parent graph); returns the largest color copied.
pub(crate) fn merge_lifted(target: &mut Coloring, part: &Coloring, sub: &Subgraph) -> u32 {
    let mut max = 0;
    for local in 0..part.len() {
        if let Some(c) = part.get(local) {
            target.set(sub.lift(local), c);
            max = max.max(c);
        }
    }
    max
}
