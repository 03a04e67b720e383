use std::collections::VecDeque;

use super::{Arc, WeightedDigraph};
use crate::error::{Error, Result};

/// Residual network for shortest-augmenting-path flow with level graphs.
struct Network {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u64>,
}

impl Network {
    fn new(n: usize) -> Self {
        Network {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    /// Adds `u -> v` and its reverse; returns the forward edge id.
    fn add(&mut self, u: usize, v: usize, cap: u64) -> usize {
        let id = self.to.len();
        self.head[u].push(id);
        self.to.push(v);
        self.cap.push(cap);
        self.head[v].push(id + 1);
        self.to.push(u);
        self.cap.push(0);
        id
    }

    fn levels(&self, s: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.head.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && level[v] == usize::MAX {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn augment(&mut self, u: usize, t: usize, limit: u64, level: &[usize], next: &mut [usize]) -> u64 {
        if u == t {
            return limit;
        }
        while next[u] < self.head[u].len() {
            let e = self.head[u][next[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && level[v] == level[u] + 1 {
                let pushed = self.augment(v, t, limit.min(self.cap[e]), level, next);
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            next[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0u64;
        loop {
            let level = self.levels(s);
            if level[t] == usize::MAX {
                return total;
            }
            let mut next = vec![0; self.head.len()];
            loop {
                let pushed = self.augment(s, t, u64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total = total.saturating_add(pushed);
            }
        }
    }

    /// Source side of a minimum cut after `max_flow`.
    fn source_side(&self, s: usize) -> Vec<bool> {
        self.levels(s).iter().map(|&l| l != usize::MAX).collect()
    }
}

/// Maximum `s`-`t` flow value and a minimum cut realising it.
pub fn max_flow_min_cut(g: &WeightedDigraph, s: usize, t: usize) -> (u64, Vec<Arc>) {
    assert!(s != t, "source and sink must differ");
    let mut net = Network::new(g.vertex_count());
    let arcs: Vec<(usize, usize, u64)> = g.arcs().collect();
    for &(u, v, w) in &arcs {
        net.add(u, v, w);
    }
    let value = net.max_flow(s, t);
    let side = net.source_side(s);
    let cut = arcs
        .iter()
        .filter(|&&(u, v, _)| side[u] && !side[v])
        .map(|&(u, v, _)| (u, v))
        .collect();
    (value, cut)
}

/// Minimum-weight vertex set, excluding `s` and `t`, whose removal leaves no
/// `s`-`t` path.
pub fn min_vertex_separator(g: &WeightedDigraph, s: usize, t: usize) -> Result<(u64, Vec<usize>)> {
    assert!(s != t, "source and sink must differ");
    if g.arc_weight(s, t).is_some() {
        return Err(Error::NoSeparatorExists);
    }
    let n = g.vertex_count();
    let inf = (0..n)
        .filter(|&v| v != s && v != t)
        .map(|v| g.vertex_weight(v))
        .sum::<u64>()
        + 1;
    // Vertex x becomes 2x (entry) and 2x+1 (exit).
    let mut net = Network::new(2 * n);
    for x in 0..n {
        let w = if x == s || x == t { inf } else { g.vertex_weight(x) };
        net.add(2 * x, 2 * x + 1, w);
    }
    for (u, v, _) in g.arcs() {
        net.add(2 * u + 1, 2 * v, inf);
    }
    let value = net.max_flow(2 * s + 1, 2 * t);
    let side = net.source_side(2 * s + 1);
    let separator = (0..n)
        .filter(|&x| x != s && x != t && side[2 * x] && !side[2 * x + 1])
        .collect();
    Ok((value, separator))
}
