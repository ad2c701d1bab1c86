//! The forcing closure `F(S)`: keep adding any vertex that sees both ends of
//! an edge inside the set. In a 3-coloring the colors on `S` fix every color
//! on `F(S)`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::graph::{Coloring, Graph};

/// One vertex entering the closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureEntry {
    pub vertex: usize,
    /// Two adjacent earlier members; `None` for seed vertices.
    pub witnesses: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureResult {
    /// `F(S)`, ascending.
    pub closure: Vec<usize>,
    /// `F(S) ∪ N(F(S))`, ascending.
    pub frontier: Vec<usize>,
    /// Entry order; seeds first (ascending), then forced vertices.
    pub order: Vec<ClosureEntry>,
}

impl ClosureResult {
    pub fn seed(&self) -> Vec<usize> {
        self.order.iter().filter(|e| e.witnesses.is_none()).map(|e| e.vertex).collect()
    }

    /// `N(F(S))`: frontier vertices outside the closure.
    pub fn boundary(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.frontier.len() - self.closure.len());
        let mut inner = self.closure.iter().peekable();
        for &v in &self.frontier {
            if inner.peek() == Some(&&v) {
                inner.next();
            } else {
                out.push(v);
            }
        }
        out
    }
}

/// Computes `F(seed)`. Ready vertices are admitted in ascending id order.
pub fn closure_f(g: &Graph, seed: &[usize]) -> ClosureResult {
    let n = g.n();
    let mut inside = vec![false; n];
    let mut queued = vec![false; n];
    // for outside vertices: inside neighbors seen so far (pairwise non-adjacent
    // until the vertex becomes ready)
    let mut inside_nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut witness: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut ready = BinaryHeap::new();
    let mut order = Vec::new();

    let mut seeds = seed.to_vec();
    seeds.sort_unstable();
    seeds.dedup();

    let admit = |u: usize,
                     inside: &mut Vec<bool>,
                     queued: &mut Vec<bool>,
                     inside_nbrs: &mut Vec<Vec<usize>>,
                     witness: &mut Vec<Option<(usize, usize)>>,
                     ready: &mut BinaryHeap<Reverse<usize>>| {
        inside[u] = true;
        inside_nbrs[u] = Vec::new();
        for &w in g.neighbors(u) {
            if inside[w] || queued[w] {
                continue;
            }
            if let Some(&x) = inside_nbrs[w].iter().find(|&&x| g.has_edge(u, x)) {
                witness[w] = Some((x.min(u), x.max(u)));
                queued[w] = true;
                ready.push(Reverse(w));
                inside_nbrs[w] = Vec::new();
            } else {
                inside_nbrs[w].push(u);
            }
        }
    };

    for &s in &seeds {
        queued[s] = true;
    }
    for &s in &seeds {
        order.push(ClosureEntry { vertex: s, witnesses: None });
        admit(s, &mut inside, &mut queued, &mut inside_nbrs, &mut witness, &mut ready);
    }
    while let Some(Reverse(u)) = ready.pop() {
        order.push(ClosureEntry { vertex: u, witnesses: witness[u] });
        admit(u, &mut inside, &mut queued, &mut inside_nbrs, &mut witness, &mut ready);
    }

    let closure: Vec<usize> = (0..n).filter(|&v| inside[v]).collect();
    let mut in_frontier = inside.clone();
    for &u in &closure {
        for &w in g.neighbors(u) {
            in_frontier[w] = true;
        }
    }
    let frontier = (0..n).filter(|&v| in_frontier[v]).collect();
    ClosureResult { closure, frontier, order }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropagateError {
    #[error("seed assignment does not cover exactly the seed set")]
    SeedMismatch,
    #[error("seed color {color} at vertex {vertex} is outside 1..=3")]
    ColorOutOfRange { vertex: usize, color: u32 },
    #[error("seed assignment is improper on edge ({0}, {1})")]
    ImproperSeed(usize, usize),
}

/// Why a seed assignment fails to extend over `F(S)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Conflict {
    /// The vertex whose forced color clashed.
    pub vertex: usize,
    pub witnesses: (usize, usize),
    /// Edge inside `F(S)` whose endpoints ended up with equal colors.
    pub edge: (usize, usize),
}

/// Forces colors through `cr.order` starting from `seed_colors`
/// (`(vertex, color)` pairs, one per seed vertex).
pub fn propagate_colors(
    g: &Graph,
    cr: &ClosureResult,
    seed_colors: &[(usize, u32)],
) -> Result<Result<Coloring, Conflict>, PropagateError> {
    let seeds = cr.seed();
    let mut given: Vec<(usize, u32)> = seed_colors.to_vec();
    given.sort_unstable();
    if given.len() != seeds.len() || given.iter().zip(&seeds).any(|(a, &s)| a.0 != s) {
        return Err(PropagateError::SeedMismatch);
    }
    let mut coloring = Coloring::new(g.n());
    for &(v, c) in &given {
        if !(1..=3).contains(&c) {
            return Err(PropagateError::ColorOutOfRange { vertex: v, color: c });
        }
        coloring.set(v, c);
    }
    for (i, &(u, cu)) in given.iter().enumerate() {
        for &(w, cw) in &given[i + 1..] {
            if cu == cw && g.has_edge(u, w) {
                return Err(PropagateError::ImproperSeed(u, w));
            }
        }
    }
    Ok(force(g, cr, coloring))
}

/// Propagation without input validation; `coloring` holds the seed colors.
pub(crate) fn force(
    g: &Graph,
    cr: &ClosureResult,
    mut coloring: Coloring,
) -> Result<Coloring, Conflict> {
    for entry in &cr.order {
        let Some((a, b)) = entry.witnesses else { continue };
        let u = entry.vertex;
        let (ca, cb) = (coloring.get(a).expect("witness colored"), coloring.get(b).expect("witness colored"));
        if ca == cb {
            return Err(Conflict { vertex: u, witnesses: (a, b), edge: (a, b) });
        }
        let cu = 6 - ca - cb;
        for &w in g.neighbors(u) {
            if coloring.get(w) == Some(cu) {
                return Err(Conflict { vertex: u, witnesses: (a, b), edge: (u.min(w), u.max(w)) });
            }
        }
        coloring.set(u, cu);
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn members(cr: &ClosureResult) -> Vec<usize> {
        cr.closure.clone()
    }

    #[test]
    fn singleton_seed_is_closed() {
        let g = Graph::complete(3);
        let cr = closure_f(&g, &[1]);
        assert_eq!(members(&cr), vec![1]);
        assert_eq!(cr.frontier, vec![0, 1, 2]);
        assert_eq!(cr.boundary(), vec![0, 2]);
    }

    #[test]
    fn triangle_closes() {
        let cr = closure_f(&Graph::complete(3), &[0, 1]);
        assert_eq!(members(&cr), vec![0, 1, 2]);
        assert_eq!(cr.order[2], ClosureEntry { vertex: 2, witnesses: Some((0, 1)) });
    }

    #[test]
    fn chained_forcing() {
        // 0-1, 2 sees 0 and 1, 3 sees 1 and 2
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let cr = closure_f(&g, &[0, 1]);
        assert_eq!(members(&cr), vec![0, 1, 2, 3]);
        assert_eq!(cr.order[2].witnesses, Some((0, 1)));
        assert_eq!(cr.order[3].witnesses, Some((1, 2)));
    }

    #[test]
    fn propagation_examples() {
        let k3 = Graph::complete(3);
        let cr = closure_f(&k3, &[0, 1]);
        let c = propagate_colors(&k3, &cr, &[(0, 1), (1, 2)]).unwrap().unwrap();
        assert_eq!(c.get(2), Some(3));

        let k4 = Graph::complete(4);
        let cr = closure_f(&k4, &[0, 1]);
        let conflict = propagate_colors(&k4, &cr, &[(0, 1), (1, 2)]).unwrap().unwrap_err();
        assert_eq!(conflict.vertex, 3);

        let cr = closure_f(&k4, &[2]);
        let c = propagate_colors(&k4, &cr, &[(2, 2)]).unwrap().unwrap();
        assert_eq!(c.domain(), vec![2]);
        assert_eq!(c.get(2), Some(2));
    }

    #[test]
    fn propagation_rejects_bad_seeds() {
        let k3 = Graph::complete(3);
        let cr = closure_f(&k3, &[0, 1]);
        assert_eq!(
            propagate_colors(&k3, &cr, &[(0, 1), (1, 1)]),
            Err(PropagateError::ImproperSeed(0, 1))
        );
        assert_eq!(propagate_colors(&k3, &cr, &[(0, 1)]), Err(PropagateError::SeedMismatch));
        assert!(matches!(
            propagate_colors(&k3, &cr, &[(0, 4), (1, 1)]),
            Err(PropagateError::ColorOutOfRange { .. })
        ));
    }
}
