//! Evaluation of the social rules.

use std::collections::VecDeque;

use crate::instance::SocialRule;
use crate::profile::{mask_of, set_of, AgentSet, QualificationProfile};

/// Agents reachable in the qualification graph from `seeds`, seeds included.
pub fn iterative_closure(profile: &QualificationProfile, seeds: &AgentSet) -> AgentSet {
    set_of(&closure_mask(profile, &mask_of(seeds, profile.n())))
}

pub(crate) fn closure_mask(profile: &QualificationProfile, seeds: &[bool]) -> Vec<bool> {
    let n = profile.n();
    let mut reached = seeds.to_vec();
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| reached[i]).collect();
    while let Some(a) = queue.pop_front() {
        for (b, &q) in profile.row(a).iter().enumerate() {
            if q && !reached[b] {
                reached[b] = true;
                queue.push_back(b);
            }
        }
    }
    reached
}

/// The seed set `K_1` of an iterative rule.
pub(crate) fn seeds(profile: &QualificationProfile, rule: SocialRule) -> Vec<bool> {
    match rule {
        SocialRule::Lsr => (0..profile.n()).map(|a| profile.get(a, a)).collect(),
        SocialRule::Csr => profile.unanimous_mask(),
        SocialRule::Consent { .. } => unreachable!("consent rules are not iterative"),
    }
}

/// Whether `a` is qualified under `Consent(s, t)`; depends only on column `a`.
pub(crate) fn consent_member(profile: &QualificationProfile, a: usize, s: usize, t: usize) -> bool {
    let plus = profile.column_plus(a);
    if profile.get(a, a) {
        plus >= s
    } else {
        profile.n() - plus < t
    }
}

/// Qualified-agent mask; the rule is assumed valid for the profile.
pub(crate) fn evaluate_mask(profile: &QualificationProfile, rule: SocialRule) -> Vec<bool> {
    match rule {
        SocialRule::Lsr | SocialRule::Csr => closure_mask(profile, &seeds(profile, rule)),
        SocialRule::Consent { s, t } => (0..profile.n())
            .map(|a| consent_member(profile, a, s, t))
            .collect(),
    }
}

/// The socially qualified agents `f(A, phi)`.
pub fn evaluate(profile: &QualificationProfile, rule: SocialRule) -> crate::Result<AgentSet> {
    let rule = rule.validate(profile.n())?;
    Ok(set_of(&evaluate_mask(profile, rule)))
}

/// The closure computed round by round, `K_i` from `K_{i-1}`, returning all rounds
/// up to the fixpoint.
pub fn closure_rounds(profile: &QualificationProfile, seeds: &AgentSet) -> Vec<AgentSet> {
    let mut rounds = vec![seeds.clone()];
    loop {
        let last = rounds.last().unwrap();
        let next: AgentSet = profile
            .agents()
            .filter(|&a| last.iter().any(|&b| profile.qualifies(b, a)) || last.contains(&a))
            .collect();
        if &next == last {
            return rounds;
        }
        rounds.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::agents;
    use crate::profile::tests::example_profile;
    use proptest::prelude::*;

    #[test]
    fn example_evaluations() {
        let p = example_profile();
        assert_eq!(evaluate(&p, SocialRule::Lsr).unwrap(), agents(&[1, 2, 4]));
        assert_eq!(evaluate(&p, SocialRule::Csr).unwrap(), agents(&[1, 2]));
        assert_eq!(
            evaluate(&p, SocialRule::Consent { s: 3, t: 3 }).unwrap(),
            agents(&[1, 2])
        );
    }

    #[test]
    fn example_closure() {
        let p = example_profile();
        assert_eq!(iterative_closure(&p, &agents(&[1, 4])), agents(&[1, 2, 4]));
        assert_eq!(iterative_closure(&p, &AgentSet::new()), AgentSet::new());
        let rounds = closure_rounds(&p, &agents(&[1, 4]));
        assert_eq!(rounds.last().unwrap(), &agents(&[1, 2, 4]));
    }

    #[test]
    fn bad_consent_parameters() {
        assert!(evaluate(&example_profile(), SocialRule::Consent { s: 5, t: 3 }).is_err());
    }

    fn profile(max_n: usize) -> impl Strategy<Value = QualificationProfile> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n).prop_map(move |cells| {
                let rows: Vec<Vec<bool>> = cells.chunks(n).map(<[bool]>::to_vec).collect();
                QualificationProfile::from_rows(&rows).unwrap()
            })
        })
    }

    fn profile_and_params() -> impl Strategy<Value = (QualificationProfile, usize, usize)> {
        profile(12).prop_flat_map(|p| {
            let n = p.n();
            (1..=n + 1).prop_flat_map(move |s| {
                let p = p.clone();
                (1..=n + 2 - s).prop_map(move |t| (p.clone(), s, t))
            })
        })
    }

    proptest! {
        #[test]
        fn closure_matches_rounds(p in profile(8), bits in any::<u16>()) {
            let seeds: AgentSet = p.agents().filter(|a| bits >> a.index() & 1 == 1).collect();
            let rounds = closure_rounds(&p, &seeds);
            prop_assert!(rounds.len() <= p.n() + 1);
            for w in rounds.windows(2) {
                prop_assert!(w[0].is_subset(&w[1]));
            }
            let fixpoint = rounds.last().unwrap();
            prop_assert_eq!(&iterative_closure(&p, &seeds), fixpoint);
            for a in fixpoint {
                for b in p.agents() {
                    prop_assert!(!p.qualifies(*a, b) || fixpoint.contains(&b));
                }
            }
        }

        #[test]
        fn csr_seeds_are_unanimous(p in profile(8)) {
            let seeds = seeds(&p, SocialRule::Csr);
            for a in 0..p.n() {
                prop_assert_eq!(seeds[a], (0..p.n()).all(|b| p.get(b, a)));
            }
        }

        #[test]
        fn consent_duality((p, s, t) in profile_and_params()) {
            let direct = evaluate(&p, SocialRule::Consent { s, t }).unwrap();
            let dual = evaluate(&p.negate(), SocialRule::Consent { s: t, t: s }).unwrap();
            let complement: AgentSet = p.agents().filter(|a| !dual.contains(a)).collect();
            prop_assert_eq!(direct, complement);
        }

        #[test]
        fn consent_monotone((p, s, t) in profile_and_params(), pick in any::<(usize, usize)>()) {
            let n = p.n();
            let (i, a) = (pick.0 % n, pick.1 % n);
            let before = evaluate_mask(&p, SocialRule::Consent { s, t });
            let mut q = p.clone();
            q.set(i, a, true);
            let after = evaluate_mask(&q, SocialRule::Consent { s, t });
            prop_assert!(!before[a] || after[a]);
        }
    }
}
