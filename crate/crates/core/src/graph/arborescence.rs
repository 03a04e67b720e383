use super::{Arc, WeightedDigraph};
use crate::error::{Error, Result};

#[derive(Clone, Copy)]
struct Edge {
    from: usize,
    to: usize,
    weight: u64,
    id: usize,
}

/// Minimum-weight spanning arborescence rooted at `root` (Chu-Liu/Edmonds).
pub fn min_spanning_arborescence(g: &WeightedDigraph, root: usize) -> Result<(u64, Vec<Arc>)> {
    let reach = g.reachable_from(root);
    if let Some(v) = reach.iter().position(|&r| !r) {
        return Err(Error::NotSpannable(v));
    }
    let original: Vec<(usize, usize, u64)> = g.arcs().filter(|&(u, v, _)| u != v).collect();
    let edges: Vec<Edge> = original
        .iter()
        .enumerate()
        .map(|(id, &(from, to, weight))| Edge { from, to, weight, id })
        .collect();
    let chosen = contract(g.vertex_count(), root, &edges);
    let mut arcs: Vec<Arc> = chosen.iter().map(|&id| (original[id].0, original[id].1)).collect();
    arcs.sort_unstable();
    let weight = chosen.iter().map(|&id| original[id].2).sum();
    Ok((weight, arcs))
}

/// Ids of the chosen edges; every vertex must be reachable from `root`.
fn contract(n: usize, root: usize, edges: &[Edge]) -> Vec<usize> {
    let mut best: Vec<Option<Edge>> = vec![None; n];
    for e in edges {
        if e.to != root && e.from != e.to && best[e.to].is_none_or(|b| e.weight < b.weight) {
            best[e.to] = Some(*e);
        }
    }

    // Label cycles formed by the cheapest incoming edges.
    let mut comp = vec![usize::MAX; n];
    let mut mark = vec![usize::MAX; n];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        let mut v = start;
        while v != root && mark[v] == usize::MAX && comp[v] == usize::MAX {
            mark[v] = start;
            v = best[v].expect("reachable vertex has an incoming edge").from;
        }
        if v != root && mark[v] == start && comp[v] == usize::MAX {
            let mut cycle = vec![v];
            let mut u = best[v].unwrap().from;
            while u != v {
                cycle.push(u);
                u = best[u].unwrap().from;
            }
            for &u in &cycle {
                comp[u] = n + cycles.len();
            }
            cycles.push(cycle);
        }
    }
    if cycles.is_empty() {
        return best.iter().flatten().map(|e| e.id).collect();
    }

    // Renumber: non-cycle vertices first, then one vertex per cycle.
    let mut index = vec![0; n];
    let mut next = 0;
    for v in 0..n {
        if comp[v] == usize::MAX {
            index[v] = next;
            next += 1;
        }
    }
    for v in 0..n {
        if comp[v] != usize::MAX {
            index[v] = next + (comp[v] - n);
        }
    }
    let m = next + cycles.len();
    let in_cycle = |v: usize| comp[v] != usize::MAX;
    let mut reduced = Vec::new();
    let mut origin = Vec::new();
    for e in edges {
        let (a, b) = (index[e.from], index[e.to]);
        if a == b {
            continue;
        }
        let weight = if in_cycle(e.to) {
            e.weight - best[e.to].unwrap().weight
        } else {
            e.weight
        };
        origin.push(*e);
        reduced.push(Edge {
            from: a,
            to: b,
            weight,
            id: reduced.len(),
        });
    }
    let inner = contract(m, index[root], &reduced);

    let mut result = Vec::new();
    let mut entered = vec![usize::MAX; n];
    for k in inner {
        let e = origin[k];
        result.push(e.id);
        if in_cycle(e.to) {
            entered[comp[e.to] - n] = e.to;
        }
    }
    for (c, cycle) in cycles.iter().enumerate() {
        for &v in cycle {
            if v != entered[c] {
                result.push(best[v].unwrap().id);
            }
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star() {
        let mut g = WeightedDigraph::new(4);
        for v in 1..4 {
            g.add_arc(0, v, 1);
        }
        assert_eq!(min_spanning_arborescence(&g, 0).unwrap().0, 3);
    }

    #[test]
    fn exact_link_figure_graph() {
        // r = 0, a3 = 1, a4 = 2.
        let mut g = WeightedDigraph::new(3);
        g.add_arc(0, 1, 5);
        g.add_arc(0, 2, 3);
        g.add_arc(1, 2, 0);
        g.add_arc(2, 1, 2);
        assert_eq!(min_spanning_arborescence(&g, 0).unwrap().0, 5);
    }

    #[test]
    fn cycle_contraction() {
        let mut g = WeightedDigraph::new(4);
        g.add_arc(0, 1, 10);
        g.add_arc(0, 2, 12);
        g.add_arc(1, 2, 1);
        g.add_arc(2, 3, 1);
        g.add_arc(3, 1, 1);
        let (w, arcs) = min_spanning_arborescence(&g, 0).unwrap();
        assert_eq!(w, 12);
        assert_eq!(arcs, vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn unreachable_vertex() {
        let mut g = WeightedDigraph::new(3);
        g.add_arc(0, 1, 1);
        assert_eq!(min_spanning_arborescence(&g, 0), Err(Error::NotSpannable(2)));
    }
}
