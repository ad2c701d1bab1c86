//! Whole-graph entry point: per component, color the frontier of a seed set
//! with three fresh colors on top of the seed search's remainder coloring,
//! compare against coloring straight from the root, and keep the smaller.

use thiserror::Error;

use crate::certificate::Refutation;
use crate::closure::closure_f;
use crate::finish::{color_frontier, FrontierOutcome};
use crate::graph::{verify_coloring, Coloring, Graph, PathWitness, Subgraph, TriangleWitness};
use crate::seed::{find_seed, SeedError, SeedOutcome};
use crate::start::{from_start, InputError, StartOutcome};

/// Color bound for the driver on `P_t`-free 3-colorable graphs.
pub fn bound(t: usize, triangle: bool) -> Result<usize, DriverError> {
    if t < 3 {
        return Err(InputError::ParameterTooSmall { t, min: 3 }.into());
    }
    let p = t / 2;
    Ok(if triangle {
        if t == 5 {
            3
        } else {
            (2 * t - 5).max(3).min((2 * p - 2).max(5))
        }
    } else {
        (t - 2).max(2).min((p + 1).max(4))
    })
}

/// How the root of each component is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RootPolicy {
    #[default]
    LowestId,
    MaxDegree,
    /// Root for the component containing this vertex; other components use
    /// their lowest id.
    Vertex(usize),
}

impl std::str::FromStr for RootPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lowest-id" => Ok(RootPolicy::LowestId),
            "max-degree" => Ok(RootPolicy::MaxDegree),
            _ => s
                .parse()
                .map(RootPolicy::Vertex)
                .map_err(|_| format!("expected lowest-id, max-degree or a vertex id, got {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DriverResult {
    Colored { coloring: Coloring, colors_used: usize, triangle: Option<TriangleWitness> },
    /// An induced path on exactly `t` vertices.
    FoundPt(PathWitness),
    NotThreeColorable(Refutation),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DriverError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Seed(#[from] SeedError),
}

pub fn approx_color(g: &Graph, t: usize, policy: RootPolicy) -> Result<DriverResult, DriverError> {
    bound(t, false)?;
    if let RootPolicy::Vertex(v) = policy {
        if v >= g.n() {
            return Err(InputError::NoSuchVertex { v, n: g.n() }.into());
        }
    }
    let mut coloring = Coloring::new(g.n());
    let mut triangle = None;
    let mut colors_used = 0;
    for comp in g.connected_components() {
        let sub = g.induced(&comp);
        let root = pick_root(&sub, policy);
        match color_component(&sub.graph, root, t)? {
            Piece::Done(r) => return Ok(lift_result(r, &sub)),
            Piece::Colored(c, tri) => {
                colors_used = colors_used.max(c.colors_used());
                for (local, &u) in sub.to_parent.iter().enumerate() {
                    coloring.set(u, c.get(local).expect("component coloring is total"));
                }
                if triangle.is_none() {
                    triangle = tri.map(|x| x.lift(&sub));
                }
            }
        }
    }
    coloring.compact();
    debug_assert!(verify_coloring(g, &coloring));
    Ok(DriverResult::Colored { coloring, colors_used, triangle })
}

fn pick_root(sub: &Subgraph, policy: RootPolicy) -> usize {
    match policy {
        RootPolicy::LowestId => 0,
        RootPolicy::MaxDegree => {
            let g = &sub.graph;
            // first maximum, i.e. lowest id among ties
            (0..g.n()).rev().max_by_key(|&u| g.degree(u)).unwrap_or(0)
        }
        RootPolicy::Vertex(v) => sub.local(v).unwrap_or(0),
    }
}

enum Piece {
    Done(DriverResult),
    Colored(Coloring, Option<TriangleWitness>),
}

fn lift_result(r: DriverResult, sub: &Subgraph) -> DriverResult {
    match r {
        DriverResult::FoundPt(p) => DriverResult::FoundPt(p.lift(sub)),
        DriverResult::NotThreeColorable(r) => DriverResult::NotThreeColorable(r.lift(sub)),
        colored => colored,
    }
}

/// Colors one connected graph; the coloring is total and compact.
fn color_component(g: &Graph, root: usize, t: usize) -> Result<Piece, DriverError> {
    let (seeded, seed_tri) = match find_seed(g, root, t, t)? {
        SeedOutcome::NotThreeColorable(r) => return Ok(Piece::Done(DriverResult::NotThreeColorable(r))),
        SeedOutcome::InducedPt(p) | SeedOutcome::PathFromV(p) => {
            return Ok(Piece::Done(DriverResult::FoundPt(p)))
        }
        SeedOutcome::Seed(s) => {
            let cr = closure_f(g, &s.seed);
            let frontier = match color_frontier(g, &cr, &s.seed) {
                FrontierOutcome::Colored { coloring, .. } => coloring,
                FrontierOutcome::Exhausted { .. } => {
                    return Ok(Piece::Done(DriverResult::NotThreeColorable(Refutation::ListExhaustion {
                        seed: s.seed,
                        frontier: cr.frontier,
                    })))
                }
            };
            let mut combined = Coloring::new(g.n());
            for u in 0..g.n() {
                let c = match (frontier.get(u), s.remainder.get(u)) {
                    (Some(c), _) => c,
                    (None, Some(c)) => c + 3,
                    (None, None) => unreachable!("vertex {u} covered by neither frontier nor remainder"),
                };
                combined.set(u, c);
            }
            combined.compact();
            (combined, s.triangle)
        }
    };
    let (direct, direct_tri) = match from_start(g, root, t) {
        StartOutcome::NotThreeColorable(r) => return Ok(Piece::Done(DriverResult::NotThreeColorable(r))),
        StartOutcome::PathFromV(p) => return Ok(Piece::Done(DriverResult::FoundPt(p))),
        StartOutcome::Plain(c) => (c, None),
        StartOutcome::WithTriangle(c, tri) => (c, Some(tri)),
    };
    let triangle = seed_tri.or(direct_tri);
    let mut best = if direct.colors_used() < seeded.colors_used() { direct } else { seeded };
    best.compact();
    Ok(Piece::Colored(best, triangle))
}
