use crate::graph::Subgraph;

/// Default bound on the size of a small-subgraph certificate that is still
/// checked by brute force.
pub const DEFAULT_CERT_CAP: usize = 24;

/// Evidence that a graph has no proper 3-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refutation {
    /// The induced subgraph on these vertices is not 3-colorable.
    SmallSubgraph(Vec<usize>),
    /// No proper 3-coloring of `seed` extends to the frontier `F(seed) ∪ N(F(seed))`.
    ListExhaustion { seed: Vec<usize>, frontier: Vec<usize> },
}

impl Refutation {
    pub(crate) fn small(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Refutation::SmallSubgraph(vertices)
    }

    pub fn lift(&self, sub: &Subgraph) -> Refutation {
        match self {
            Refutation::SmallSubgraph(w) => Refutation::small(sub.lift_all(w)),
            Refutation::ListExhaustion { seed, frontier } => {
                let mut seed = sub.lift_all(seed);
                let mut frontier = sub.lift_all(frontier);
                seed.sort_unstable();
                frontier.sort_unstable();
                Refutation::ListExhaustion { seed, frontier }
            }
        }
    }

    /// True when a small-subgraph certificate is larger than `cap`, so that
    /// brute-force replay is no longer promised.
    pub fn oversized(&self, cap: usize) -> bool {
        matches!(self, Refutation::SmallSubgraph(w) if w.len() > cap)
    }
}
