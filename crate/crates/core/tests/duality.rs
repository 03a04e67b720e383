mod common;

use common::naive_consent as consent;
use groupid::{evaluate, negate_profile, AgentId, AgentSet, QualificationProfile, SocialRule, SplitMix64};
use proptest::prelude::*;

fn complement(n: usize, set: &AgentSet) -> AgentSet {
    (0..n).map(AgentId::from_index).filter(|a| !set.contains(a)).collect()
}

fn random_triple(rng: &mut SplitMix64) -> (QualificationProfile, usize, usize) {
    let n = 1 + rng.below(12);
    let density = rng.next_f64();
    let rows: Vec<Vec<bool>> = (0..n).map(|_| (0..n).map(|_| rng.next_f64() < density).collect()).collect();
    let s = 1 + rng.below(n + 1);
    let t = 1 + rng.below(n + 2 - s);
    (QualificationProfile::from_rows(&rows).unwrap(), s, t)
}

#[test]
fn duality_on_seeded_triples() {
    let mut rng = SplitMix64::new(2024);
    for _ in 0..10_000 {
        let (p, s, t) = random_triple(&mut rng);
        let direct = evaluate(&p, SocialRule::Consent { s, t }).unwrap();
        assert_eq!(direct, consent(&p, s, t));
        let dual = evaluate(&negate_profile(&p), SocialRule::Consent { s: t, t: s }).unwrap();
        assert_eq!(direct, complement(p.n(), &dual), "{p:?} s={s} t={t}");
    }
}

proptest! {
    #[test]
    fn duality_property(seed in any::<u64>()) {
        let (p, s, t) = random_triple(&mut SplitMix64::new(seed));
        let dual = consent(&negate_profile(&p), t, s);
        prop_assert_eq!(evaluate(&p, SocialRule::Consent { s, t }).unwrap(), complement(p.n(), &dual));
    }
}
