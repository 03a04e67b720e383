use std::collections::BTreeSet;

use groupid::reductions::{GraphInput, SetCoverInput, X3cInput};
use groupid::{SocialRule, SplitMix64};

fn subsets(m: usize) -> impl Iterator<Item = u32> {
    0u32..1 << m
}

fn picked(mask: u32, m: usize) -> impl Iterator<Item = usize> {
    (0..m).filter(move |&i| mask >> i & 1 == 1)
}

pub fn min_set_cover(input: &SetCoverInput) -> usize {
    let m = input.sets.len();
    subsets(m)
        .filter(|&mask| {
            let covered: BTreeSet<usize> = picked(mask, m).flat_map(|i| input.sets[i].iter().copied()).collect();
            covered.len() == input.universe
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

fn adjacent(g: &GraphInput, u: usize, v: usize) -> bool {
    g.edges.contains(&(u.min(v) + 1, u.max(v) + 1))
}

pub fn min_dominating_set(g: &GraphInput) -> usize {
    let n = g.vertices;
    subsets(n)
        .filter(|&mask| (0..n).all(|v| mask >> v & 1 == 1 || picked(mask, n).any(|u| adjacent(g, u, v))))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn has_independent_set(g: &GraphInput, k: usize) -> bool {
    let n = g.vertices;
    subsets(n).any(|mask| {
        mask.count_ones() as usize == k
            && picked(mask, n).all(|u| picked(mask, n).all(|v| !adjacent(g, u, v)))
    })
}

pub fn has_exact_cover(input: &X3cInput) -> bool {
    let m = input.sets.len();
    subsets(m).any(|mask| {
        let mut seen = vec![0; input.universe + 1];
        for i in picked(mask, m) {
            for &e in &input.sets[i] {
                seen[e] += 1;
            }
        }
        seen[1..].iter().all(|&c| c == 1)
    })
}

pub fn random_set_cover(rng: &mut SplitMix64) -> SetCoverInput {
    let universe = 1 + rng.below(5);
    let count = 1 + rng.below(6);
    let mut sets: Vec<BTreeSet<usize>> = (0..count)
        .map(|_| (1..=universe).filter(|_| rng.below(3) == 0).collect())
        .collect();
    for e in 1..=universe {
        if !sets.iter().any(|s| s.contains(&e)) {
            let i = rng.below(count);
            sets[i].insert(e);
        }
    }
    let rule = if rng.below(2) == 0 { SocialRule::Lsr } else { SocialRule::Csr };
    SetCoverInput { universe, sets, k: rng.below(count + 1), rule }
}

pub fn random_graph(rng: &mut SplitMix64, max_vertices: usize) -> GraphInput {
    let vertices = 1 + rng.below(max_vertices);
    let p = [2, 3, 5][rng.below(3)];
    let mut edges = BTreeSet::new();
    for u in 1..=vertices {
        for v in u + 1..=vertices {
            if rng.below(p) < 2 {
                edges.insert((u, v));
            }
        }
    }
    GraphInput { vertices, edges, k: 1 + rng.below(vertices) }
}

/// Every 3-regular family of 3-sets over `{1..3m}` with sets in
/// nondecreasing order.
pub fn x3c_families(m: usize) -> Vec<X3cInput> {
    let u = 3 * m;
    let mut triples = Vec::new();
    for a in 1..=u {
        for b in a + 1..=u {
            for c in b + 1..=u {
                triples.push([a, b, c]);
            }
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut counts = vec![0; u + 1];
    fn go(
        start: usize,
        triples: &[[usize; 3]],
        chosen: &mut Vec<[usize; 3]>,
        counts: &mut Vec<usize>,
        u: usize,
        out: &mut Vec<X3cInput>,
    ) {
        if chosen.len() == u {
            if counts[1..].iter().all(|&c| c == 3) {
                out.push(X3cInput { universe: u, sets: chosen.clone() });
            }
            return;
        }
        for i in start..triples.len() {
            let t = triples[i];
            if t.iter().any(|&e| counts[e] == 3) {
                continue;
            }
            for &e in &t {
                counts[e] += 1;
            }
            chosen.push(t);
            go(i, triples, chosen, counts, u, out);
            chosen.pop();
            for &e in &t {
                counts[e] -= 1;
            }
        }
    }
    go(0, &triples, &mut chosen, &mut counts, u, &mut out);
    out
}
