//! Exponential-time reference procedures. Every public oracle takes an
//! explicit size cap and refuses larger inputs instead of running forever.

use std::fmt::Write as _;

use thiserror::Error;

use crate::certificate::Refutation;
use crate::closure::closure_f;
use crate::finish::{color_frontier, FrontierOutcome, ListInstance};
use crate::graph::{Coloring, Graph, PathWitness};

pub const DEFAULT_ORACLE_CAP: usize = 24;
pub const DEFAULT_LIST_CAP: usize = 15;
pub const DEFAULT_NAE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance size {size} exceeds the oracle cap {cap}")]
    CapExceeded { size: usize, cap: usize },
}

fn check_cap(size: usize, cap: usize) -> Result<(), OracleError> {
    if size > cap {
        Err(OracleError::CapExceeded { size, cap })
    } else {
        Ok(())
    }
}

/// Some proper 3-coloring of all of `g`, or `None`.
pub fn brute_three_color(g: &Graph, cap: usize) -> Result<Option<Coloring>, OracleError> {
    brute_color(g, 3, cap)
}

/// Some proper `k`-coloring of all of `g`, or `None`.
pub fn brute_color(g: &Graph, k: u32, cap: usize) -> Result<Option<Coloring>, OracleError> {
    check_cap(g.n(), cap)?;
    let mut colors = vec![0u32; g.n()];
    Ok(extend_coloring(g, k, &mut colors, 0).then(|| Coloring::from_colors(&colors).with_palette(k)))
}

/// Backtracking; picks the uncolored vertex with the fewest free colors
/// (ties: higher degree, then lower id). New colors are opened in order.
fn extend_coloring(g: &Graph, k: u32, colors: &mut [u32], used: u32) -> bool {
    let mut pick: Option<(usize, u32, usize)> = None;
    for v in 0..g.n() {
        if colors[v] != 0 {
            continue;
        }
        let mask = blocked(g, colors, v);
        let free = (1..=k).filter(|&c| mask & (1 << c) == 0).count() as u32;
        let better = match pick {
            None => true,
            Some((_, f, d)) => free < f || (free == f && g.degree(v) > d),
        };
        if better {
            pick = Some((v, free, g.degree(v)));
        }
    }
    let Some((v, free, _)) = pick else { return true };
    if free == 0 {
        return false;
    }
    let mask = blocked(g, colors, v);
    for c in 1..=k.min(used + 1) {
        if mask & (1 << c) != 0 {
            continue;
        }
        colors[v] = c;
        if extend_coloring(g, k, colors, used.max(c)) {
            return true;
        }
    }
    colors[v] = 0;
    false
}

fn blocked(g: &Graph, colors: &[u32], v: usize) -> u64 {
    g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << colors[w]))
}

/// An induced path on exactly `t` vertices (from `start` if given), or `None`.
pub fn find_induced_path(
    g: &Graph,
    t: usize,
    start: Option<usize>,
    cap: usize,
) -> Result<Option<PathWitness>, OracleError> {
    check_cap(g.n(), cap)?;
    Ok(find_path_unchecked(g, t, start))
}

pub(crate) fn find_path_unchecked(g: &Graph, t: usize, start: Option<usize>) -> Option<PathWitness> {
    if t == 0 || t > g.n() {
        return None;
    }
    let starts: Vec<usize> = match start {
        Some(s) if s < g.n() => vec![s],
        Some(_) => return None,
        None => (0..g.n()).collect(),
    };
    let mut touching = vec![0u32; g.n()];
    let mut in_path = vec![false; g.n()];
    let mut path = Vec::with_capacity(t);
    for s in starts {
        push(g, s, &mut path, &mut in_path, &mut touching);
        if extend_path(g, t, &mut path, &mut in_path, &mut touching) {
            return Some(PathWitness(path));
        }
        pop(g, &mut path, &mut in_path, &mut touching);
    }
    None
}

fn push(g: &Graph, v: usize, path: &mut Vec<usize>, in_path: &mut [bool], touching: &mut [u32]) {
    path.push(v);
    in_path[v] = true;
    g.neighbors(v).iter().for_each(|&w| touching[w] += 1);
}

fn pop(g: &Graph, path: &mut Vec<usize>, in_path: &mut [bool], touching: &mut [u32]) {
    let v = path.pop().expect("non-empty path");
    in_path[v] = false;
    g.neighbors(v).iter().for_each(|&w| touching[w] -= 1);
}

fn extend_path(
    g: &Graph,
    t: usize,
    path: &mut Vec<usize>,
    in_path: &mut [bool],
    touching: &mut [u32],
) -> bool {
    if path.len() == t {
        return true;
    }
    let last = *path.last().expect("non-empty path");
    for &w in g.neighbors(last) {
        // w may only see the current end of the path
        if in_path[w] || touching[w] != 1 {
            continue;
        }
        push(g, w, path, in_path, touching);
        if extend_path(g, t, path, in_path, touching) {
            return true;
        }
        pop(g, path, in_path, touching);
    }
    false
}

/// Exhaustive list coloring; unlike [`crate::finish::two_list_color`] lists
/// may have any length.
pub fn brute_list_color(
    g: &Graph,
    li: &ListInstance,
    cap: usize,
) -> Result<Option<Coloring>, OracleError> {
    check_cap(li.lists.len(), cap)?;
    let region = li.region();
    let lists: Vec<&Vec<u32>> = li.lists.values().collect();
    let mut coloring = Coloring::new(g.n());
    for (&v, &c) in &li.fixed {
        coloring.set(v, c);
    }
    fn go(g: &Graph, region: &[usize], lists: &[&Vec<u32>], i: usize, coloring: &mut Coloring) -> bool {
        if i == region.len() {
            return true;
        }
        let v = region[i];
        for &c in lists[i] {
            if g.neighbors(v).iter().any(|&w| coloring.get(w) == Some(c)) {
                continue;
            }
            coloring.set(v, c);
            if go(g, region, lists, i + 1, coloring) {
                return true;
            }
            coloring.unset(v);
        }
        false
    }
    Ok(go(g, &region, &lists, 0, &mut coloring).then_some(coloring))
}

/// A not-all-equal 3-SAT formula. Literals are 1-based, negative = negated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaeFormula {
    pub num_vars: usize,
    pub clauses: Vec<[i32; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NaeParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing \"p nae3 <vars> <clauses>\" header")]
    MissingHeader,
    #[error("header declares {declared} clauses but {found} were read")]
    ClauseCountMismatch { declared: usize, found: usize },
}

impl NaeFormula {
    /// Checks literal ranges.
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self, String> {
        for (j, clause) in clauses.iter().enumerate() {
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(format!("clause {j}: literal {lit} out of range"));
                }
            }
        }
        Ok(NaeFormula { num_vars, clauses })
    }

    pub fn is_nae_satisfied(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            let vals = clause.map(|lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0));
            !(vals[0] == vals[1] && vals[1] == vals[2])
        })
    }

    pub fn parse(text: &str) -> Result<Self, NaeParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split(['#', 'c']).next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            let syntax = |msg: String| NaeParseError::Syntax { line, msg };
            if header.is_none() {
                if fields.len() != 4 || fields[0] != "p" || fields[1] != "nae3" {
                    return Err(syntax("expected \"p nae3 <vars> <clauses>\"".into()));
                }
                let vars = fields[2].parse().map_err(|_| syntax(format!("bad count {:?}", fields[2])))?;
                let m = fields[3].parse().map_err(|_| syntax(format!("bad count {:?}", fields[3])))?;
                header = Some((vars, m));
                continue;
            }
            let (vars, _) = header.expect("header read");
            if fields.len() != 3 {
                return Err(syntax(format!("expected three literals, found {}", fields.len())));
            }
            let mut clause = [0i32; 3];
            for (slot, f) in clause.iter_mut().zip(&fields) {
                let lit: i32 = f.parse().map_err(|_| syntax(format!("bad literal {f:?}")))?;
                if lit == 0 || lit.unsigned_abs() as usize > vars {
                    return Err(syntax(format!("literal {lit} out of range 1..={vars}")));
                }
                *slot = lit;
            }
            clauses.push(clause);
        }
        let (num_vars, m) = header.ok_or(NaeParseError::MissingHeader)?;
        if clauses.len() != m {
            return Err(NaeParseError::ClauseCountMismatch { declared: m, found: clauses.len() });
        }
        Ok(NaeFormula { num_vars, clauses })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p nae3 {} {}\n", self.num_vars, self.clauses.len());
        for [a, b, c] in &self.clauses {
            let _ = writeln!(out, "{a} {b} {c}");
        }
        out
    }
}

/// A not-all-equal assignment (index `i` is variable `i + 1`), or `None`.
pub fn nae_solve(f: &NaeFormula, cap: usize) -> Result<Option<Vec<bool>>, OracleError> {
    check_cap(f.num_vars, cap)?;
    for mask in 0u64..1 << f.num_vars {
        let assignment: Vec<bool> = (0..f.num_vars).map(|i| mask >> i & 1 == 1).collect();
        if f.is_nae_satisfied(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

/// Replays a non-3-colorability certificate.
pub fn verify_refutation(g: &Graph, r: &Refutation, cap: usize) -> Result<bool, OracleError> {
    match r {
        Refutation::SmallSubgraph(w) => {
            check_cap(w.len(), cap)?;
            let mut w = w.clone();
            w.sort_unstable();
            w.dedup();
            if w.iter().any(|&u| u >= g.n()) {
                return Ok(false);
            }
            Ok(brute_three_color(&g.induced(&w).graph, cap)?.is_none())
        }
        Refutation::ListExhaustion { seed, frontier } => {
            if seed.is_empty() || seed.iter().any(|&u| u >= g.n()) {
                return Ok(false);
            }
            let cr = closure_f(g, seed);
            let mut claimed = frontier.clone();
            claimed.sort_unstable();
            if cr.frontier != claimed {
                return Ok(false);
            }
            Ok(matches!(color_frontier(g, &cr, seed), FrontierOutcome::Exhausted { .. }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{verify_coloring, verify_path};
    use std::collections::BTreeMap;

    const CAP: usize = DEFAULT_ORACLE_CAP;

    #[test]
    fn three_coloring_examples() {
        let c5 = Graph::cycle(5);
        let c = brute_three_color(&c5, CAP).unwrap().unwrap();
        assert!(verify_coloring(&c5, &c));
        assert_eq!(brute_three_color(&Graph::complete(4), CAP).unwrap(), None);
        let c = brute_three_color(&Graph::empty(5), CAP).unwrap().unwrap();
        assert_eq!(c.to_vec(), vec![1; 5]);
        assert_eq!(
            brute_three_color(&Graph::empty(30), CAP),
            Err(OracleError::CapExceeded { size: 30, cap: CAP })
        );
    }

    #[test]
    fn path_examples() {
        let c5 = Graph::cycle(5);
        let p = find_induced_path(&c5, 4, Some(0), CAP).unwrap().unwrap();
        assert!(verify_path(&c5, &p, 4, Some(0)));
        assert_eq!(find_induced_path(&Graph::complete(4), 3, None, CAP).unwrap(), None);
        let p6 = Graph::path(6);
        let p = find_induced_path(&p6, 6, None, CAP).unwrap().unwrap();
        assert_eq!(p.0, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn list_examples() {
        let uniform = |vs: &[usize], l: &[u32]| ListInstance {
            lists: vs.iter().map(|&v| (v, l.to_vec())).collect(),
            fixed: BTreeMap::new(),
        };
        assert_eq!(brute_list_color(&Graph::complete(3), &uniform(&[0, 1, 2], &[1, 2]), 15).unwrap(), None);
        let c = brute_list_color(&Graph::empty(1), &uniform(&[0], &[3]), 15).unwrap().unwrap();
        assert_eq!(c.get(0), Some(3));
        assert!(brute_list_color(&Graph::cycle(4), &uniform(&[0, 1, 2, 3], &[1, 2]), 15).unwrap().is_some());
    }

    #[test]
    fn nae_examples() {
        let f = NaeFormula::new(3, vec![[1, 2, 3]]).unwrap();
        let a = nae_solve(&f, 20).unwrap().unwrap();
        assert!(f.is_nae_satisfied(&a));
        let g = NaeFormula::new(2, vec![[1, 1, 2], [1, 1, -2]]).unwrap();
        assert_eq!(nae_solve(&g, 20).unwrap(), None);
        let empty = NaeFormula::new(4, vec![]).unwrap();
        assert!(nae_solve(&empty, 20).unwrap().is_some());
    }

    #[test]
    fn nae_text_round_trip() {
        let f = NaeFormula::new(3, vec![[1, -2, 3], [-1, -1, 2]]).unwrap();
        assert_eq!(NaeFormula::parse(&f.to_text()).unwrap(), f);
        assert!(matches!(NaeFormula::parse("p nae3 2 1\n1 2 3\n"), Err(NaeParseError::Syntax { line: 2, .. })));
        assert_eq!(
            NaeFormula::parse("p nae3 2 2\n1 2 -1\n"),
            Err(NaeParseError::ClauseCountMismatch { declared: 2, found: 1 })
        );
    }

    #[test]
    fn refutation_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(verify_refutation(&k4, &Refutation::SmallSubgraph(vec![0, 1, 2, 3]), CAP), Ok(true));
        assert_eq!(verify_refutation(&k4, &Refutation::SmallSubgraph(vec![0, 1, 2]), CAP), Ok(false));
        let cr = closure_f(&k4, &[0, 1]);
        let r = Refutation::ListExhaustion { seed: vec![0, 1], frontier: cr.frontier };
        assert_eq!(verify_refutation(&k4, &r, CAP), Ok(true));
        // wrong frontier claim
        let r = Refutation::ListExhaustion { seed: vec![0, 1], frontier: vec![0, 1] };
        assert_eq!(verify_refutation(&k4, &r, CAP), Ok(false));
        let k3 = Graph::complete(3);
        let r = Refutation::ListExhaustion { seed: vec![0], frontier: vec![0, 1, 2] };
        assert_eq!(verify_refutation(&k3, &r, CAP), Ok(false));
    }
}
