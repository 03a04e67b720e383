//! Weighted digraphs and the flow, separator, arborescence and Steiner tree
//! algorithms used by the bribery solvers.

mod arborescence;
mod flow;
mod steiner;

use std::collections::BTreeMap;

pub use arborescence::min_spanning_arborescence;
pub use flow::{max_flow_min_cut, min_vertex_separator};
pub use steiner::{directed_steiner_tree, MAX_TERMINALS};

pub type Arc = (usize, usize);

/// A digraph on vertices `0..n` with nonnegative integer arc weights and
/// optional vertex weights. Parallel arcs collapse to the lighter one.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightedDigraph {
    n: usize,
    arcs: BTreeMap<Arc, u64>,
    vertex_weights: Vec<u64>,
}

impl WeightedDigraph {
    pub fn new(n: usize) -> Self {
        WeightedDigraph {
            n,
            arcs: BTreeMap::new(),
            vertex_weights: vec![0; n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_arc(&mut self, from: usize, to: usize, weight: u64) {
        assert!(from < self.n && to < self.n, "arc endpoint out of range");
        self.arcs
            .entry((from, to))
            .and_modify(|w| *w = (*w).min(weight))
            .or_insert(weight);
    }

    pub fn set_vertex_weight(&mut self, v: usize, weight: u64) {
        self.vertex_weights[v] = weight;
    }

    pub fn vertex_weight(&self, v: usize) -> u64 {
        self.vertex_weights[v]
    }

    pub fn arc_weight(&self, from: usize, to: usize) -> Option<u64> {
        self.arcs.get(&(from, to)).copied()
    }

    /// Arcs in `(from, to)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.arcs.iter().map(|(&(u, v), &w)| (u, v, w))
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub(crate) fn out_lists(&self) -> Vec<Vec<(usize, u64)>> {
        let mut out = vec![Vec::new(); self.n];
        for (u, v, w) in self.arcs() {
            out[u].push((v, w));
        }
        out
    }

    /// Vertices reachable from `start` along arcs.
    pub fn reachable_from(&self, start: usize) -> Vec<bool> {
        let out = self.out_lists();
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &(v, _) in &out[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}
