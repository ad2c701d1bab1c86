//! 2-SAT via the implication graph and Tarjan's strongly connected components.

/// A literal: variable index plus polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lit(usize);

impl Lit {
    pub fn pos(var: usize) -> Lit {
        Lit(2 * var)
    }

    pub fn neg(var: usize) -> Lit {
        Lit(2 * var + 1)
    }

    pub fn new(var: usize, value: bool) -> Lit {
        if value {
            Lit::pos(var)
        } else {
            Lit::neg(var)
        }
    }

    fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

#[derive(Debug, Clone)]
pub struct TwoSat {
    num_vars: usize,
    implications: Vec<Vec<usize>>,
}

impl TwoSat {
    pub fn new(num_vars: usize) -> Self {
        TwoSat { num_vars, implications: vec![Vec::new(); 2 * num_vars] }
    }

    /// Adds the clause `a ∨ b`.
    pub fn add_clause(&mut self, a: Lit, b: Lit) {
        self.implications[a.not().0].push(b.0);
        self.implications[b.not().0].push(a.0);
    }

    /// Satisfying assignment, or `None`.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let comp = tarjan(&self.implications);
        // Tarjan numbers components in reverse topological order
        (0..self.num_vars)
            .map(|x| {
                let (p, n) = (comp[2 * x], comp[2 * x + 1]);
                (p != n).then_some(p < n)
            })
            .collect()
    }
}

/// Component index per node, iterative Tarjan.
fn tarjan(adj: &[Vec<usize>]) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, 0));
        while let Some(&mut (u, ref mut edge)) = call.last_mut() {
            if *edge == 0 && index[u] == UNSET {
                index[u] = next_index;
                low[u] = next_index;
                next_index += 1;
                stack.push(u);
                on_stack[u] = true;
            }
            if let Some(&w) = adj[u].get(*edge) {
                *edge += 1;
                if index[w] == UNSET {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[u] = low[u].min(index[w]);
                }
                continue;
            }
            call.pop();
            if low[u] == index[u] {
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == u {
                        break;
                    }
                }
                next_comp += 1;
            }
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[u]);
            }
        }
    }
    comp
}
