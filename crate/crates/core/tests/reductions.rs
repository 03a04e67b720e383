mod common;

use common::brute::*;
use groupid::oracle::{oracle_link, oracle_link_deletions};
use groupid::reductions::{dominating_set_instance, independent_set_instance, set_cover_instance, x3c_instance};
use groupid::{dispatch, SocialRule, SplitMix64, Status};

#[test]
fn set_cover_cost_is_minimum_cover() {
    let mut rng = SplitMix64::new(101);
    for _ in 0..50 {
        let input = random_set_cover(&mut rng);
        let inst = set_cover_instance(&input).unwrap();
        let want = min_set_cover(&input) as u64;
        let r = dispatch(&inst.with_budget(None));
        assert_eq!((r.status, r.cost), (Status::Optimal, Some(want)), "{input:?}");
        let within = dispatch(&inst).status == Status::Optimal;
        assert_eq!(within, want <= input.k as u64);
        if inst.n() <= 9 {
            assert_eq!(oracle_link(&inst, 9).unwrap().map(|(c, _)| c), Some(want));
        }
    }
}

#[test]
fn dominating_set_cost_is_minimum_dominating_set() {
    let mut rng = SplitMix64::new(103);
    for _ in 0..20 {
        let g = random_graph(&mut rng, 7);
        let r = dispatch(&dominating_set_instance(&g).unwrap().with_budget(None));
        assert_eq!(r.cost, Some(min_dominating_set(&g) as u64), "{g:?}");
    }
}

#[test]
fn independent_set_feasible_iff_set_exists() {
    let mut rng = SplitMix64::new(107);
    for _ in 0..30 {
        let g = random_graph(&mut rng, 5);
        if g.edges.is_empty() {
            continue;
        }
        let r = dispatch(&independent_set_instance(&g).unwrap());
        assert_eq!(r.status == Status::Optimal, has_independent_set(&g, g.k), "{g:?}");
    }
}

#[test]
fn x3c_deletion_feasible_iff_exact_cover() {
    let mut families = x3c_families(1);
    let m2 = x3c_families(2);
    let step = (m2.len() / 20).max(1);
    families.extend(m2.into_iter().step_by(step));
    let mut seen = [false; 2];
    for input in &families {
        let cover = has_exact_cover(input);
        seen[cover as usize] = true;
        for rule in [SocialRule::Lsr, SocialRule::Csr] {
            let inst = x3c_instance(input, rule).unwrap();
            let budget = inst.budget.unwrap();
            let got = oracle_link_deletions(&inst, 16).unwrap().is_some_and(|(c, _)| c <= budget);
            assert_eq!(got, cover, "{rule:?} {input:?}");
        }
    }
    assert!(seen[0] && seen[1], "families cover both answers");
}
