//! Simple undirected graphs over dense vertex ids, plus the witness types
//! (colorings, induced paths, triangles) and their polynomial-time checks.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Errors raised while building a [`Graph`] from an edge list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge #{index} ({u}, {v}): endpoint out of range for n = {n}")]
    EndpointOutOfRange { index: usize, u: usize, v: usize, n: usize },
    #[error("edge #{index}: self-loop at vertex {v}")]
    SelfLoop { index: usize, v: usize },
    #[error("edge #{index}: duplicate edge ({u}, {v})")]
    DuplicateEdge { index: usize, u: usize, v: usize },
}

/// Errors raised by the text parser. Line numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header declares {declared} edges but {found} edge lines were read")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("empty input: missing \"n m\" header")]
    MissingHeader,
}

/// Immutable simple graph. Vertices are `0..n`; adjacency lists are sorted.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

/// An induced subgraph together with the map from its local ids back to the
/// ids of the graph it was cut out of.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    pub to_parent: Vec<usize>,
}

impl Subgraph {
    pub fn lift(&self, local: usize) -> usize {
        self.to_parent[local]
    }

    pub fn lift_all(&self, local: &[usize]) -> Vec<usize> {
        local.iter().map(|&v| self.to_parent[v]).collect()
    }

    /// Local id of a parent vertex, if it belongs to the subgraph.
    pub fn local(&self, parent: usize) -> Option<usize> {
        self.to_parent.iter().position(|&p| p == parent)
    }
}

/// Result of [`Graph::bipartition_or_odd_cycle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Two sides; the first contains the lowest-id vertex of every component.
    Sides(Vec<usize>, Vec<usize>),
    /// Vertex sequence of an odd cycle; consecutive entries (cyclically) are adjacent.
    OddCycle(Vec<usize>),
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { index, u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, v });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                let index = edges
                    .iter()
                    .enumerate()
                    .filter(|(_, &(a, b))| (a, b) == (u, v) || (a, b) == (v, u))
                    .map(|(i, _)| i)
                    .nth(1)
                    .unwrap_or(0);
                return Err(GraphError::DuplicateEdge { index, u: u.min(v), v: u.max(v) });
            }
        }
        Ok(Graph { adj, m: edges.len() })
    }

    /// Builds a graph from adjacency lists that are already known to be
    /// symmetric and loop-free. Lists are sorted here.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut total = 0;
        for list in &mut adj {
            list.sort_unstable();
            total += list.len();
        }
        Graph { adj, m: total / 2 }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
        Graph::from_adjacency(adj)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).expect("cycle edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `G[vertices]`; local id `i` corresponds to `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                    .collect()
            })
            .collect();
        Subgraph { graph: Graph::from_adjacency(adj), to_parent: vertices.to_vec() }
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.n()).collect();
        self.components_within(&all)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Components of `G[set]`, each sorted, ordered by minimum element.
    pub fn components_within(&self, set: &[usize]) -> Vec<Vec<usize>> {
        let mut member = vec![false; self.n()];
        for &v in set {
            member[v] = true;
        }
        self.components_masked(set, &mut member)
    }

    /// Same as [`Graph::components_within`] but reuses a caller-provided
    /// membership mask. The mask is cleared for `set` on return.
    pub(crate) fn components_masked(&self, set: &[usize], member: &mut [bool]) -> Vec<Vec<usize>> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        for &s in &sorted {
            if !member[s] {
                continue;
            }
            member[s] = false;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if member[w] {
                        member[w] = false;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Either a 2-coloring of `G[set]` by sides or an odd cycle inside it.
    pub fn bipartition_or_odd_cycle(&self, set: &[usize]) -> Bipartition {
        const NONE: usize = usize::MAX;
        let mut member = vec![false; self.n()];
        for &v in set {
            member[v] = true;
        }
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        let mut depth = vec![NONE; self.n()];
        let mut parent = vec![NONE; self.n()];
        let mut queue = VecDeque::new();
        for &root in &sorted {
            if depth[root] != NONE {
                continue;
            }
            depth[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !member[w] {
                        continue;
                    }
                    if depth[w] == NONE {
                        depth[w] = depth[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if depth[w] % 2 == depth[u] % 2 {
                        return Bipartition::OddCycle(tree_cycle(u, w, &parent, &depth));
                    }
                }
            }
        }
        let (even, odd) = sorted.into_iter().partition(|&v| depth[v] % 2 == 0);
        Bipartition::Sides(even, odd)
    }

    /// Lexicographically first edge of `G[set]`, if any.
    pub fn has_edge_within(&self, set: &[usize]) -> Option<(usize, usize)> {
        let mut member = vec![false; self.n()];
        for &v in set {
            member[v] = true;
        }
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted
            .into_iter()
            .find_map(|u| self.adj[u].iter().find(|&&w| w > u && member[w]).map(|&w| (u, w)))
    }
}

/// Closes the BFS-tree paths from `u` and `w` up to their common ancestor.
fn tree_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// A partial vertex coloring with colors `1..=palette_size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Option<u32>>,
    palette_size: u32,
}

impl Coloring {
    /// Empty coloring for a graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Coloring { colors: vec![None; n], palette_size: 0 }
    }

    /// Total coloring from a color vector; palette is the largest color.
    pub fn from_colors(colors: &[u32]) -> Self {
        let mut c = Coloring::new(colors.len());
        for (v, &col) in colors.iter().enumerate() {
            c.set(v, col);
        }
        c
    }

    /// Partial coloring from `(vertex, color)` pairs on `n` vertices.
    pub fn from_pairs(n: usize, pairs: &[(usize, u32)]) -> Self {
        let mut c = Coloring::new(n);
        for &(v, col) in pairs {
            c.set(v, col);
        }
        c
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.iter().all(Option::is_none)
    }

    /// Assigns `color` to `v`, growing the palette if needed.
    pub fn set(&mut self, v: usize, color: u32) {
        self.colors[v] = Some(color);
        self.palette_size = self.palette_size.max(color);
    }

    pub fn unset(&mut self, v: usize) {
        self.colors[v] = None;
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        self.colors[v]
    }

    pub fn palette_size(&self) -> u32 {
        self.palette_size
    }

    /// Declares a palette at least as large as every color in use.
    pub fn with_palette(mut self, palette: u32) -> Self {
        self.palette_size = self.palette_size.max(palette);
        self
    }

    /// Vertices that carry a color, ascending.
    pub fn domain(&self) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v].is_some()).collect()
    }

    pub fn domain_size(&self) -> usize {
        self.colors.iter().filter(|c| c.is_some()).count()
    }

    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.iter().flatten().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Relabels colors to `1..=k` preserving their order; palette becomes `k`.
    pub fn compact(&mut self) {
        let mut seen: Vec<u32> = self.colors.iter().flatten().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        for c in self.colors.iter_mut().flatten() {
            *c = seen.binary_search(c).expect("color present") as u32 + 1;
        }
        self.palette_size = seen.len() as u32;
    }

    /// Color vector with `0` for unassigned vertices.
    pub fn to_vec(&self) -> Vec<u32> {
        self.colors.iter().map(|c| c.unwrap_or(0)).collect()
    }

    /// Moves a coloring of a subgraph onto its parent graph (`n` vertices).
    pub fn lift(&self, sub: &Subgraph, n: usize) -> Coloring {
        let mut out = Coloring::new(n);
        for (local, c) in self.colors.iter().enumerate() {
            if let Some(c) = *c {
                out.set(sub.to_parent[local], c);
            }
        }
        out.palette_size = out.palette_size.max(self.palette_size);
        out
    }
}

/// Ordered vertex sequence claimed to be an induced path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness(pub Vec<usize>);

impl PathWitness {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn start(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn lift(&self, sub: &Subgraph) -> PathWitness {
        PathWitness(sub.lift_all(&self.0))
    }
}

/// Three vertices claimed to be pairwise adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleWitness(pub [usize; 3]);

impl TriangleWitness {
    pub fn lift(&self, sub: &Subgraph) -> TriangleWitness {
        TriangleWitness(self.0.map(|v| sub.to_parent[v]))
    }
}

/// Proper on its domain, colors within the declared palette.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> bool {
    if c.len() != g.n() {
        return false;
    }
    let palette = c.palette_size();
    if c.colors.iter().flatten().any(|&col| col == 0 || col > palette) {
        return false;
    }
    g.edges().all(|(u, v)| match (c.get(u), c.get(v)) {
        (Some(a), Some(b)) => a != b,
        _ => true,
    })
}

/// Induced path of exactly `required_len` vertices, optionally starting at
/// `required_start`.
pub fn verify_path(
    g: &Graph,
    p: &PathWitness,
    required_len: usize,
    required_start: Option<usize>,
) -> bool {
    let vs = &p.0;
    if vs.len() != required_len || vs.is_empty() {
        return false;
    }
    if let Some(s) = required_start {
        if vs[0] != s {
            return false;
        }
    }
    if vs.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut sorted = vs.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if g.has_edge(vs[i], vs[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

pub fn verify_triangle(g: &Graph, tri: &TriangleWitness) -> bool {
    let [a, b, c] = tri.0;
    a < g.n()
        && b < g.n()
        && c < g.n()
        && a != b
        && b != c
        && a != c
        && g.has_edge(a, b)
        && g.has_edge(b, c)
        && g.has_edge(a, c)
}

/// Parses the `n m` + edge-line text format. `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut lines_of_edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let nums: Vec<&str> = content.split_whitespace().collect();
        if nums.len() != 2 {
            return Err(ParseError::Syntax {
                line,
                msg: format!("expected two integers, found {} fields", nums.len()),
            });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| ParseError::Syntax {
                line,
                msg: format!("not a non-negative integer: {s:?}"),
            })
        };
        let (a, b) = (parse(nums[0])?, parse(nums[1])?);
        if header.is_none() {
            header = Some((a, b));
        } else {
            edges.push((a, b));
            lines_of_edges.push(line);
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch { declared: m, found: edges.len() });
    }
    Graph::from_edge_list(n, &edges).map_err(|source| {
        let index = match source {
            GraphError::EndpointOutOfRange { index, .. }
            | GraphError::SelfLoop { index, .. }
            | GraphError::DuplicateEdge { index, .. } => index,
        };
        ParseError::Graph { line: lines_of_edges[index], source }
    })
}

/// Canonical text form: header then edges in lexicographic order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
