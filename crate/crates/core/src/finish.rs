//! Completing a seed set into a 3-coloring of its frontier: try every proper
//! 3-assignment of `S`, force colors through `F(S)`, and solve the remaining
//! 2-list-coloring problem on `N(F(S))` with 2-SAT.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::closure::{force, ClosureResult};
use crate::graph::{Coloring, Graph};
use crate::twosat::{Lit, TwoSat};

/// A list-coloring instance on `lists.keys()`, with `fixed` colors on
/// vertices outside the region.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ListInstance {
    pub lists: BTreeMap<usize, Vec<u32>>,
    pub fixed: BTreeMap<usize, u32>,
}

impl ListInstance {
    pub fn region(&self) -> Vec<usize> {
        self.lists.keys().copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("vertex {0} has an empty list")]
    EmptyList(usize),
    #[error("vertex {0} has more than two list entries")]
    ListTooLong(usize),
    #[error("vertex {vertex}: color {color} outside 1..=3")]
    BadColor { vertex: usize, color: u32 },
    #[error("vertex {0} repeats a list entry")]
    RepeatedEntry(usize),
    #[error("vertex {0} is out of range")]
    NoSuchVertex(usize),
    #[error("vertex {0} is both in the region and fixed")]
    FixedInRegion(usize),
    #[error("adjacent fixed vertices {0} and {1} share a color")]
    ImproperFixed(usize, usize),
    #[error("vertex {vertex} lists color {color} used by fixed neighbor {neighbor}")]
    FixedConflict { vertex: usize, color: u32, neighbor: usize },
}

/// Proper coloring of the region from its lists that also avoids the colors
/// of fixed neighbors, or `Ok(None)` when none exists.
pub fn two_list_color(g: &Graph, li: &ListInstance) -> Result<Option<Coloring>, ListError> {
    for (&v, list) in &li.lists {
        if v >= g.n() {
            return Err(ListError::NoSuchVertex(v));
        }
        if list.is_empty() {
            return Err(ListError::EmptyList(v));
        }
        if list.len() > 2 {
            return Err(ListError::ListTooLong(v));
        }
        if let Some(&color) = list.iter().find(|c| !(1..=3).contains(*c)) {
            return Err(ListError::BadColor { vertex: v, color });
        }
        if list.len() == 2 && list[0] == list[1] {
            return Err(ListError::RepeatedEntry(v));
        }
    }
    for (&v, &color) in &li.fixed {
        if v >= g.n() {
            return Err(ListError::NoSuchVertex(v));
        }
        if !(1..=3).contains(&color) {
            return Err(ListError::BadColor { vertex: v, color });
        }
        if li.lists.contains_key(&v) {
            return Err(ListError::FixedInRegion(v));
        }
        for &w in g.neighbors(v) {
            if li.fixed.get(&w) == Some(&color) {
                return Err(ListError::ImproperFixed(v.min(w), v.max(w)));
            }
            if let Some(list) = li.lists.get(&w) {
                if list.contains(&color) {
                    return Err(ListError::FixedConflict { vertex: w, color, neighbor: v });
                }
            }
        }
    }
    let region = li.region();
    let lists: Vec<Vec<u32>> = li.lists.values().cloned().collect();
    let mut coloring = Coloring::new(g.n());
    for (&v, &c) in &li.fixed {
        coloring.set(v, c);
    }
    Ok(solve_lists(g, &region, &lists, coloring))
}

/// Core solver. `region` is ascending and `lists[i]` belongs to `region[i]`;
/// assigned region colors are written into `coloring`.
pub(crate) fn solve_lists(
    g: &Graph,
    region: &[usize],
    lists: &[Vec<u32>],
    mut coloring: Coloring,
) -> Option<Coloring> {
    let choice = |i: usize, value: bool| -> u32 {
        let l = &lists[i];
        if value || l.len() == 1 {
            l[0]
        } else {
            l[1]
        }
    };
    let mut sat = TwoSat::new(region.len());
    for (i, l) in lists.iter().enumerate() {
        if l.len() == 1 {
            sat.add_clause(Lit::pos(i), Lit::pos(i));
        }
    }
    for (i, &u) in region.iter().enumerate() {
        for &w in g.neighbors(u) {
            if w <= u {
                continue;
            }
            let Ok(j) = region.binary_search(&w) else { continue };
            for a in [true, false] {
                for b in [true, false] {
                    if choice(i, a) == choice(j, b) {
                        sat.add_clause(Lit::new(i, !a), Lit::new(j, !b));
                    }
                }
            }
        }
    }
    let assignment = sat.solve()?;
    for (i, &u) in region.iter().enumerate() {
        coloring.set(u, choice(i, assignment[i]));
    }
    Some(coloring)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrontierOutcome {
    /// 3-coloring of `F(S) ∪ N(F(S))` (domain exactly the frontier).
    Colored { coloring: Coloring, attempts: usize },
    /// Every proper 3-assignment of `S` failed.
    Exhausted { attempts: usize },
}

/// Tries the proper 3-assignments of `seed` (ascending) in lexicographic order
/// and returns the first that extends to the whole frontier.
pub fn color_frontier(g: &Graph, cr: &ClosureResult, seed: &[usize]) -> FrontierOutcome {
    let mut seed = seed.to_vec();
    seed.sort_unstable();
    seed.dedup();
    let k = seed.len();
    let seed_edges: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .filter(|&(i, j)| g.has_edge(seed[i], seed[j]))
        .collect();
    let boundary = cr.boundary();
    let mut assignment = vec![1u32; k];
    let mut attempts = 0;
    loop {
        if seed_edges.iter().all(|&(i, j)| assignment[i] != assignment[j]) {
            attempts += 1;
            if let Some(coloring) = try_assignment(g, cr, &seed, &assignment, &boundary) {
                return FrontierOutcome::Colored { coloring, attempts };
            }
        }
        // odometer, last position fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                debug_assert!(attempts <= 3usize.pow(k as u32));
                return FrontierOutcome::Exhausted { attempts };
            }
            pos -= 1;
            if assignment[pos] < 3 {
                assignment[pos] += 1;
                break;
            }
            assignment[pos] = 1;
        }
    }
}

fn try_assignment(
    g: &Graph,
    cr: &ClosureResult,
    seed: &[usize],
    assignment: &[u32],
    boundary: &[usize],
) -> Option<Coloring> {
    let mut coloring = Coloring::new(g.n());
    for (&v, &c) in seed.iter().zip(assignment) {
        coloring.set(v, c);
    }
    let coloring = force(g, cr, coloring).ok()?;
    let mut lists = Vec::with_capacity(boundary.len());
    for &u in boundary {
        let mut allowed = [true; 4];
        for &w in g.neighbors(u) {
            if let Some(c) = coloring.get(w) {
                allowed[c as usize] = false;
            }
        }
        let mut list: Vec<u32> = (1..=3).filter(|&c| allowed[c as usize]).collect();
        if list.is_empty() {
            return None;
        }
        // a boundary vertex always has a colored neighbor in F(S)
        debug_assert!(list.len() <= 2, "boundary vertex {u} without colored neighbor");
        list.truncate(2);
        lists.push(list);
    }
    solve_lists(g, boundary, &lists, coloring.with_palette(3))
}
