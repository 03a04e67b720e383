use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use super::{Arc, WeightedDigraph};
use crate::error::{Error, Result};

pub const MAX_TERMINALS: usize = 20;

const UNSET: u64 = u64::MAX;

#[derive(Clone, Copy)]
enum Step {
    Leaf,
    Split(usize),
    Move(usize),
}

/// Minimum-weight arc set containing a path from `root` to every terminal
/// (dynamic program over terminal subsets).
pub fn directed_steiner_tree(
    g: &WeightedDigraph,
    root: usize,
    terminals: &[usize],
) -> Result<(u64, Vec<Arc>)> {
    let terms: Vec<usize> = terminals
        .iter()
        .copied()
        .filter(|&t| t != root)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if terms.len() > MAX_TERMINALS {
        return Err(Error::TooManyTerminals(terms.len()));
    }
    let reach = g.reachable_from(root);
    if let Some(&t) = terms.iter().find(|&&t| !reach[t]) {
        return Err(Error::TerminalUnreachable(t));
    }
    if terms.is_empty() {
        return Ok((0, Vec::new()));
    }

    let n = g.vertex_count();
    let k = terms.len();
    let mut into = vec![Vec::new(); n];
    for (u, v, w) in g.arcs() {
        into[v].push((u, w));
    }
    let full = (1usize << k) - 1;
    let mut cost = vec![vec![UNSET; n]; full + 1];
    let mut step = vec![vec![Step::Leaf; n]; full + 1];

    for set in 1..=full {
        if set.is_power_of_two() {
            cost[set][terms[set.trailing_zeros() as usize]] = 0;
        } else {
            // Proper splits containing the lowest terminal, each pair once.
            let low = set & set.wrapping_neg();
            let rest = set ^ low;
            for v in 0..n {
                let mut sub = rest;
                loop {
                    let part = sub | low;
                    if part != set {
                        let (a, b) = (cost[part][v], cost[set ^ part][v]);
                        if a != UNSET && b != UNSET && a + b < cost[set][v] {
                            cost[set][v] = a + b;
                            step[set][v] = Step::Split(part);
                        }
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & rest;
                }
            }
        }
        relax(&into, &mut cost[set], &mut step[set]);
    }

    let mut arcs = BTreeSet::new();
    collect(&step, full, root, &mut arcs);
    let arcs = prune(g, root, &terms, &arcs);
    let weight = arcs.iter().map(|&(u, v)| g.arc_weight(u, v).unwrap()).sum();
    debug_assert!(weight <= cost[full][root]);
    Ok((weight, arcs))
}

/// Dijkstra backwards: a tree at `u` extends to `v` through arc `v -> u`.
fn relax(into: &[Vec<(usize, u64)>], row: &mut [u64], step: &mut [Step]) {
    let mut heap: BinaryHeap<Reverse<(u64, usize)>> = row
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != UNSET)
        .map(|(v, &c)| Reverse((c, v)))
        .collect();
    while let Some(Reverse((c, u))) = heap.pop() {
        if c > row[u] {
            continue;
        }
        for &(v, w) in &into[u] {
            let nc = c + w;
            if nc < row[v] {
                row[v] = nc;
                step[v] = Step::Move(u);
                heap.push(Reverse((nc, v)));
            }
        }
    }
}

fn collect(step: &[Vec<Step>], set: usize, v: usize, arcs: &mut BTreeSet<Arc>) {
    match step[set][v] {
        Step::Leaf => {}
        Step::Split(part) => {
            collect(step, part, v, arcs);
            collect(step, set ^ part, v, arcs);
        }
        Step::Move(u) => {
            arcs.insert((v, u));
            collect(step, set, u, arcs);
        }
    }
}

/// Keeps one root path per terminal inside the chosen arcs.
fn prune(g: &WeightedDigraph, root: usize, terms: &[usize], arcs: &BTreeSet<Arc>) -> Vec<Arc> {
    let n = g.vertex_count();
    let mut out = vec![Vec::new(); n];
    for &(u, v) in arcs {
        out[u].push(v);
    }
    let mut parent = vec![usize::MAX; n];
    parent[root] = root;
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        for &v in &out[u] {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    let mut kept = BTreeSet::new();
    for &t in terms {
        let mut v = t;
        while v != root {
            let u = parent[v];
            if !kept.insert((u, v)) {
                break;
            }
            v = u;
        }
    }
    kept.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_terminals() {
        let g = WeightedDigraph::new(3);
        assert_eq!(directed_steiner_tree(&g, 0, &[]).unwrap(), (0, vec![]));
    }

    #[test]
    fn const_link_figure_graph() {
        // r = 0, agents a1..a3 = 1..3; existing arcs free, missing ones priced.
        let mut g = WeightedDigraph::new(4);
        for (u, v, w) in [
            (0, 1, 0),
            (0, 2, 3),
            (0, 3, 4),
            (1, 2, 5),
            (1, 3, 5),
            (2, 1, 0),
            (2, 3, 1),
            (3, 1, 0),
            (3, 2, 0),
        ] {
            g.add_arc(u, v, w);
        }
        let (w, _) = directed_steiner_tree(&g, 0, &[1, 2, 3]).unwrap();
        assert_eq!(w, 4);
    }

    #[test]
    fn shares_common_prefix() {
        let mut g = WeightedDigraph::new(5);
        g.add_arc(0, 1, 5);
        g.add_arc(1, 2, 1);
        g.add_arc(1, 3, 1);
        g.add_arc(0, 2, 4);
        g.add_arc(0, 3, 4);
        let (w, arcs) = directed_steiner_tree(&g, 0, &[2, 3]).unwrap();
        assert_eq!(w, 7);
        assert_eq!(arcs, vec![(0, 1), (1, 2), (1, 3)]);
    }

    #[test]
    fn errors() {
        let g = WeightedDigraph::new(3);
        assert_eq!(directed_steiner_tree(&g, 0, &[2]), Err(Error::TerminalUnreachable(2)));
        let big = WeightedDigraph::new(30);
        let terms: Vec<usize> = (1..=21).collect();
        assert_eq!(directed_steiner_tree(&big, 0, &terms), Err(Error::TooManyTerminals(21)));
    }
}
