use groupid::graph::{Arc, WeightedDigraph};
use groupid::SplitMix64;

pub fn random_digraph(rng: &mut SplitMix64) -> WeightedDigraph {
    let n = 2 + rng.below(6);
    let density = [0.25, 0.45, 0.7][rng.below(3)];
    let mut g = WeightedDigraph::new(n);
    for u in 0..n {
        g.set_vertex_weight(u, rng.range(1, 5));
        for v in 0..n {
            if u != v && rng.next_f64() < density {
                g.add_arc(u, v, rng.range(0, 9));
            }
        }
    }
    g
}

pub fn reaches(n: usize, arcs: &[(usize, usize)], blocked: &[bool], s: usize, t: usize) -> bool {
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        for &(a, b) in arcs {
            if a == u && !seen[b] && !blocked[b] {
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    seen[t]
}

pub fn weight_of(g: &WeightedDigraph, arcs: &[Arc]) -> u64 {
    arcs.iter().map(|&(u, v)| g.arc_weight(u, v).unwrap()).sum()
}

pub fn brute_min_cut(g: &WeightedDigraph, s: usize, t: usize) -> u64 {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|m| m >> s & 1 == 1 && m >> t & 1 == 0)
        .map(|m| g.arcs().filter(|&(u, v, _)| m >> u & 1 == 1 && m >> v & 1 == 0).map(|a| a.2).sum())
        .min()
        .unwrap()
}

pub fn brute_separator(g: &WeightedDigraph, s: usize, t: usize) -> Option<u64> {
    let n = g.vertex_count();
    let arcs: Vec<Arc> = g.arcs().map(|(u, v, _)| (u, v)).collect();
    (0u32..1 << n)
        .filter(|m| m >> s & 1 == 0 && m >> t & 1 == 0)
        .filter(|&m| {
            let blocked: Vec<bool> = (0..n).map(|v| m >> v & 1 == 1).collect();
            !reaches(n, &arcs, &blocked, s, t)
        })
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).map(|v| g.vertex_weight(v)).sum())
        .min()
}

/// Cheapest arborescence rooted at `root` spanning exactly the vertices in
/// `span`, by choosing a parent for every other vertex.
pub fn brute_arborescence(g: &WeightedDigraph, root: usize, span: u32) -> Option<u64> {
    let n = g.vertex_count();
    let others: Vec<usize> = (0..n).filter(|&v| v != root && span >> v & 1 == 1).collect();
    let choices: Vec<Vec<(usize, u64)>> = others
        .iter()
        .map(|&v| {
            g.arcs()
                .filter(|&(u, w, _)| w == v && u != v && span >> u & 1 == 1)
                .map(|(u, _, c)| (u, c))
                .collect()
        })
        .collect();
    let mut best = None;
    let mut parent = vec![usize::MAX; n];
    fn go(
        i: usize,
        cost: u64,
        others: &[usize],
        choices: &[Vec<(usize, u64)>],
        parent: &mut Vec<usize>,
        root: usize,
        best: &mut Option<u64>,
    ) {
        if i == others.len() {
            let rooted = others.iter().all(|&v| {
                let mut x = v;
                for _ in 0..=others.len() {
                    if x == root {
                        return true;
                    }
                    x = parent[x];
                }
                false
            });
            if rooted && best.is_none_or(|b| cost < b) {
                *best = Some(cost);
            }
            return;
        }
        for &(u, c) in &choices[i] {
            parent[others[i]] = u;
            go(i + 1, cost + c, others, choices, parent, root, best);
        }
    }
    go(0, 0, &others, &choices, &mut parent, root, &mut best);
    best
}
