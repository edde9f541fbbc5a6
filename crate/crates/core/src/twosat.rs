//! 2-SAT over an implication graph, solved with an iterative Tarjan SCC pass.

use alloc::vec;
use alloc::vec::Vec;

/// Literal `2 * var` is `var`, `2 * var + 1` is its negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Lit(usize);

impl Lit {
    pub(crate) fn pos(var: usize) -> Lit {
        Lit(2 * var)
    }

    pub(crate) fn neg(var: usize) -> Lit {
        Lit(2 * var + 1)
    }

    pub(crate) fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

pub(crate) struct TwoSat {
    vars: usize,
    implications: Vec<(usize, usize)>,
}

impl TwoSat {
    pub(crate) fn new(vars: usize) -> Self {
        TwoSat {
            vars,
            implications: Vec::new(),
        }
    }

    /// Adds the clause `a ∨ b`.
    pub(crate) fn or(&mut self, a: Lit, b: Lit) {
        self.implications.push((a.not().0, b.0));
        self.implications.push((b.not().0, a.0));
    }

    /// Forces `a` to hold.
    pub(crate) fn unit(&mut self, a: Lit) {
        self.implications.push((a.not().0, a.0));
    }

    /// A satisfying assignment, or the lowest variable whose two literals
    /// share a strongly connected component.
    pub(crate) fn solve(&self) -> Result<Vec<bool>, usize> {
        let nodes = 2 * self.vars;
        // CSR adjacency, targets kept in insertion order.
        let mut start = vec![0usize; nodes + 1];
        for &(a, _) in &self.implications {
            start[a + 1] += 1;
        }
        for i in 0..nodes {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut targets = vec![0usize; self.implications.len()];
        for &(a, b) in &self.implications {
            targets[fill[a]] = b;
            fill[a] += 1;
        }

        let comp = tarjan(nodes, &start, &targets);
        let mut value = Vec::with_capacity(self.vars);
        for var in 0..self.vars {
            let (p, q) = (comp[2 * var], comp[2 * var + 1]);
            if p == q {
                return Err(var);
            }
            // Tarjan numbers components in reverse topological order; pick
            // the literal that comes later topologically.
            value.push(p < q);
        }
        Ok(value)
    }
}

const UNSET: usize = usize::MAX;

fn tarjan(nodes: usize, start: &[usize], targets: &[usize]) -> Vec<usize> {
    let mut index = vec![UNSET; nodes];
    let mut low = vec![0usize; nodes];
    let mut comp = vec![UNSET; nodes];
    let mut cursor = start[..nodes].to_vec();
    let mut stack = Vec::new();
    let mut call: Vec<usize> = Vec::new();
    let mut counter = 0;
    let mut components = 0;

    for root in 0..nodes {
        if index[root] != UNSET {
            continue;
        }
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        call.push(root);
        while let Some(&u) = call.last() {
            if cursor[u] < start[u + 1] {
                let w = targets[cursor[u]];
                cursor[u] += 1;
                if index[w] == UNSET {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    call.push(w);
                } else if comp[w] == UNSET {
                    low[u] = low[u].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&p) = call.last() {
                low[p] = low[p].min(low[u]);
            }
            if low[u] == index[u] {
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    comp[w] = components;
                    if w == u {
                        break;
                    }
                }
                components += 1;
            }
        }
    }
    comp
}
