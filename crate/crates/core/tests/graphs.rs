mod common;

use common::graphs::*;
use groupid::graph::{
    directed_steiner_tree, max_flow_min_cut, min_spanning_arborescence, min_vertex_separator, Arc,
};
use groupid::{Error, SplitMix64};

#[test]
fn flow_and_cuts_match_enumeration() {
    let mut rng = SplitMix64::new(31);
    for _ in 0..200 {
        let g = random_digraph(&mut rng);
        let n = g.vertex_count();
        let (s, t) = (0, n - 1);
        let (value, cut) = max_flow_min_cut(&g, s, t);
        assert_eq!(value, brute_min_cut(&g, s, t), "{g:?}");
        assert_eq!(weight_of(&g, &cut), value);
        let rest: Vec<Arc> = g.arcs().map(|(u, v, _)| (u, v)).filter(|a| !cut.contains(a)).collect();
        assert!(!reaches(n, &rest, &vec![false; n], s, t));
    }
}

#[test]
fn separators_match_enumeration() {
    let mut rng = SplitMix64::new(37);
    for _ in 0..200 {
        let g = random_digraph(&mut rng);
        let n = g.vertex_count();
        let (s, t) = (0, n - 1);
        match min_vertex_separator(&g, s, t) {
            Ok((w, sep)) => {
                assert_eq!(Some(w), brute_separator(&g, s, t), "{g:?}");
                assert_eq!(sep.iter().map(|&v| g.vertex_weight(v)).sum::<u64>(), w);
                let blocked: Vec<bool> = (0..n).map(|v| sep.contains(&v)).collect();
                let arcs: Vec<Arc> = g.arcs().map(|(u, v, _)| (u, v)).collect();
                assert!(!reaches(n, &arcs, &blocked, s, t));
            }
            Err(Error::NoSeparatorExists) => assert!(g.arc_weight(s, t).is_some()),
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn arborescences_match_enumeration() {
    let mut rng = SplitMix64::new(41);
    for _ in 0..200 {
        let g = random_digraph(&mut rng);
        let n = g.vertex_count();
        let full = (1u32 << n) - 1;
        match min_spanning_arborescence(&g, 0) {
            Ok((w, arcs)) => {
                assert_eq!(Some(w), brute_arborescence(&g, 0, full), "{g:?}");
                assert_eq!(weight_of(&g, &arcs), w);
                assert_eq!(arcs.len(), n - 1);
                for v in 1..n {
                    assert!(reaches(n, &arcs, &vec![false; n], 0, v));
                }
            }
            Err(Error::NotSpannable(_)) => assert_eq!(brute_arborescence(&g, 0, full), None),
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn steiner_trees_match_enumeration() {
    let mut rng = SplitMix64::new(43);
    for _ in 0..200 {
        let g = random_digraph(&mut rng);
        let n = g.vertex_count();
        let terminals: Vec<usize> = (1..n).filter(|_| rng.below(2) == 0).collect();
        let need = terminals.iter().fold(1u32, |m, &t| m | 1 << t);
        let brute = (0u32..1 << n)
            .filter(|&m| m & need == need)
            .filter_map(|m| brute_arborescence(&g, 0, m))
            .min();
        match directed_steiner_tree(&g, 0, &terminals) {
            Ok((w, arcs)) => {
                assert_eq!(Some(w), brute, "{g:?} {terminals:?}");
                assert_eq!(weight_of(&g, &arcs), w);
                for &t in &terminals {
                    assert!(reaches(n, &arcs, &vec![false; n], 0, t));
                }
            }
            Err(Error::TerminalUnreachable(_)) => assert_eq!(brute, None),
            Err(e) => panic!("{e}"),
        }
    }
}
