use groupid::oracle::{oracle_agent, oracle_agent_generic, oracle_link, oracle_link_deletions};
use groupid::{
    check_solution, cost_of, generate_random, AgentId, BriberyInstance, CheckOutcome, CostKind,
    Flip, FlipSet, GenParams, SocialRule, SplitMix64,
};

fn random_instance(rng: &mut SplitMix64, n: usize, cost: CostKind) -> BriberyInstance {
    let rule = match rng.below(3) {
        0 => SocialRule::Lsr,
        1 => SocialRule::Csr,
        _ => {
            let s = 1 + rng.below(n + 1);
            SocialRule::Consent { s, t: 1 + rng.below(n + 2 - s) }
        }
    };
    let mut params = GenParams::new(n, rule, cost);
    params.density = [0.2, 0.5, 0.8][rng.below(3)];
    params.price_range = (1, 3);
    params.exact = rng.below(4) == 0;
    params.plus = rng.below(n + 1);
    params.minus = if params.exact { 0 } else { rng.below(n + 1 - params.plus) };
    generate_random(&params, rng.next_u64()).unwrap()
}

fn flips_of(n: usize, inst: &BriberyInstance, mask: u32) -> FlipSet {
    (0..n * n)
        .filter(|&k| mask >> k & 1 == 1)
        .map(|k| {
            let (a, b) = (k / n, k % n);
            Flip::new(AgentId::from_index(a), AgentId::from_index(b), !inst.profile.get(a, b))
        })
        .collect()
}

/// Every optimal flip set by trying all subsets of entries.
fn naive_link(inst: &BriberyInstance, deletions_only: bool) -> Option<(u64, Vec<FlipSet>)> {
    let n = inst.n();
    let free = inst.with_budget(None);
    let mut best: Option<(u64, Vec<FlipSet>)> = None;
    for mask in 0u32..1 << (n * n) {
        let flips = flips_of(n, inst, mask);
        if deletions_only && flips.iter().any(|f| f.value) {
            continue;
        }
        let c = cost_of(&flips, &inst.cost);
        if best.as_ref().is_some_and(|(b, _)| c > *b) {
            continue;
        }
        if check_solution(&free, &flips).unwrap() != CheckOutcome::Ok {
            continue;
        }
        match &mut best {
            Some((b, all)) if *b == c => all.push(flips),
            _ => best = Some((c, vec![flips])),
        }
    }
    best.map(|(c, mut all)| {
        all.sort();
        (c, all)
    })
}

#[test]
fn link_oracle_matches_naive_enumeration() {
    let mut rng = SplitMix64::new(7);
    for i in 0..400 {
        let n = 2 + i % 2;
        let inst = random_instance(&mut rng, n, CostKind::Link);
        assert_eq!(oracle_link(&inst, 8).unwrap(), naive_link(&inst, false), "{inst:?}");
        assert_eq!(oracle_link_deletions(&inst, 8).unwrap(), naive_link(&inst, true), "{inst:?}");
    }
}

#[test]
fn link_witnesses_are_sorted_and_valid() {
    let mut rng = SplitMix64::new(11);
    for _ in 0..200 {
        let n = 4 + rng.below(2);
        let inst = random_instance(&mut rng, n, CostKind::Link);
        let Some((c, all)) = oracle_link(&inst, 8).unwrap() else { continue };
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for w in &all {
            assert_eq!(cost_of(w, &inst.cost), c);
            assert_eq!(check_solution(&inst.with_budget(None), w).unwrap(), CheckOutcome::Ok);
        }
    }
}

#[test]
fn agent_oracle_matches_generic_enumeration() {
    let mut rng = SplitMix64::new(13);
    for i in 0..300 {
        let n = 2 + i % 3;
        let inst = random_instance(&mut rng, n, CostKind::Agent);
        let canonical = oracle_agent(&inst, 8).unwrap();
        if let Some((c, w)) = &canonical {
            assert_eq!(check_solution(&inst.with_budget(None), w).unwrap(), CheckOutcome::Ok);
            assert!(cost_of(w, &inst.cost) <= *c);
        }
        let generic = oracle_agent_generic(&inst, None).unwrap();
        assert_eq!(canonical.map(|(c, _)| c), generic, "{inst:?}");
    }
}

#[test]
fn one_new_seed_suffices() {
    let mut rng = SplitMix64::new(17);
    let mut checked = 0;
    while checked < 200 {
        let n = 2 + rng.below(3);
        let inst = random_instance(&mut rng, n, CostKind::Agent);
        if !inst.rule.is_iterative() {
            continue;
        }
        assert_eq!(
            oracle_agent_generic(&inst, Some(1)).unwrap(),
            oracle_agent_generic(&inst, None).unwrap(),
            "{inst:?}"
        );
        checked += 1;
    }
}

#[test]
fn size_and_cost_model_limits() {
    let mut rng = SplitMix64::new(19);
    let link = random_instance(&mut rng, 7, CostKind::Link);
    assert!(oracle_link(&link, 6).is_err());
    assert!(oracle_agent(&link, 8).is_err());
    let agent = random_instance(&mut rng, 6, CostKind::Agent);
    assert!(oracle_link(&agent, 8).is_err());
    assert!(oracle_agent_generic(&agent, None).is_err());
}
