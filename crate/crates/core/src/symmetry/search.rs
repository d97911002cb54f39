//! Exhaustive backtracking search for a free Z_k action on a graph.
//!
//! The permutation is built one k-cycle at a time, always starting a cycle at
//! the smallest unplaced vertex and trying candidates in ascending order, so
//! the first action found is deterministic. Partial assignments are pruned by
//! degree, by sorted neighbor-degree signature, and by adjacency consistency
//! against everything already assigned; freeness is structural (cycles close
//! at length exactly k).

use crate::graph::Graph;

use super::{verify_k_symmetric, CyclicAction};

/// Node-expansion budget: one unit per attempted assignment sigma(v) = w.
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(CyclicAction),
    /// The whole space was exhausted: no free Z_k action exists.
    NotFound,
    BudgetExhausted,
}

pub fn find_k_symmetric(g: &Graph, k: usize, budget: u64) -> SearchOutcome {
    if k == 0 {
        return SearchOutcome::NotFound;
    }
    let n = g.order();
    if n % k != 0 {
        return SearchOutcome::NotFound;
    }
    let signatures: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut sig: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            sig.sort_unstable();
            sig
        })
        .collect();
    let mut state = Search {
        g,
        k,
        signatures,
        sigma: vec![usize::MAX; n],
        image_used: vec![false; n],
        budget,
    };
    match state.next_cycle() {
        Some(true) => {
            let action = verify_k_symmetric(g, &state.sigma, k).expect("search output validates");
            SearchOutcome::Found(action)
        }
        Some(false) => SearchOutcome::NotFound,
        None => SearchOutcome::BudgetExhausted,
    }
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    signatures: Vec<Vec<usize>>,
    sigma: Vec<usize>,
    image_used: Vec<bool>,
    budget: u64,
}

enum Attempt {
    Assigned,
    Pruned,
    OutOfBudget,
}

impl Search<'_> {
    /// Some(true) = found, Some(false) = exhausted, None = out of budget.
    fn next_cycle(&mut self) -> Option<bool> {
        let start = match (0..self.g.order()).find(|&v| self.sigma[v] == usize::MAX) {
            Some(v) => v,
            None => return Some(true),
        };
        self.extend_cycle(start, start, 1)
    }

    /// The current cycle starts at `start`; `v` is its last placed vertex and
    /// `len` vertices are on it so far. Chooses sigma(v).
    fn extend_cycle(&mut self, start: usize, v: usize, len: usize) -> Option<bool> {
        if len == self.k {
            match self.try_assign(v, start) {
                Attempt::OutOfBudget => return None,
                Attempt::Pruned => return Some(false),
                Attempt::Assigned => {}
            }
            let result = self.next_cycle();
            if result != Some(true) {
                self.unassign(v, start);
            }
            return result;
        }
        for w in 0..self.g.order() {
            if self.image_used[w] || self.sigma[w] != usize::MAX || w == start {
                continue;
            }
            match self.try_assign(v, w) {
                Attempt::OutOfBudget => return None,
                Attempt::Pruned => continue,
                Attempt::Assigned => {}
            }
            match self.extend_cycle(start, w, len + 1) {
                Some(true) => return Some(true),
                Some(false) => self.unassign(v, w),
                None => {
                    self.unassign(v, w);
                    return None;
                }
            }
        }
        Some(false)
    }

    /// Attempts sigma(v) = w, checking budget, degree signature, and
    /// adjacency consistency with every assigned vertex.
    fn try_assign(&mut self, v: usize, w: usize) -> Attempt {
        if self.budget == 0 {
            return Attempt::OutOfBudget;
        }
        self.budget -= 1;
        if self.g.degree(v) != self.g.degree(w) || self.signatures[v] != self.signatures[w] {
            return Attempt::Pruned;
        }
        if self.image_used[w] {
            return Attempt::Pruned;
        }
        for u in 0..self.g.order() {
            if self.sigma[u] == usize::MAX {
                continue;
            }
            if self.g.has_edge(u, v) != self.g.has_edge(self.sigma[u], w) {
                return Attempt::Pruned;
            }
        }
        self.sigma[v] = w;
        self.image_used[w] = true;
        Attempt::Assigned
    }

    fn unassign(&mut self, v: usize, w: usize) {
        self.sigma[v] = usize::MAX;
        self.image_used[w] = false;
    }
}
