//! Link bribery under consent rules: every goal agent is handled on its own
//! column.

use super::{finish, wrong_cell, SolveResult};
use crate::error::Result;
use crate::flips::FlipSet;
use crate::instance::{BriberyInstance, SocialRule};

/// Optimal link bribery for `Consent(s, t)`, any goal.
pub fn solve_consent_link(instance: &BriberyInstance) -> Result<SolveResult> {
    finish(instance, solve(instance))
}

pub(crate) fn solve(inst: &BriberyInstance) -> Result<Option<FlipSet>> {
    let SocialRule::Consent { s, t } = inst.rule else {
        return Err(wrong_cell("rule must be a consent rule"));
    };
    if inst.cost.is_agent() {
        return Err(wrong_cell("link bribery needs link prices"));
    }
    let n = inst.n();
    let (plus, minus) = inst.goal.masks(n);
    let mut flips = FlipSet::new();
    for a in (0..n).filter(|&a| plus[a] || minus[a]) {
        match cheapest_column(inst, a, s, t, plus[a]) {
            Some(column) => flips.extend(column),
            None => return Ok(None),
        }
    }
    Ok(Some(flips))
}

/// Cheapest flips in column `a` making it qualified (`want`) or not.
fn cheapest_column(inst: &BriberyInstance, a: usize, s: usize, t: usize, want: bool) -> Option<FlipSet> {
    let p = &inst.profile;
    let n = inst.n();
    let others_plus = (0..n).filter(|&b| b != a && p.get(b, a)).count();
    let others_minus = n - 1 - others_plus;
    // (self entry, required number of other entries with value `want`)
    let cases = if want {
        [
            (true, Some(s - 1)),
            (false, (t >= 2).then(|| n - 1 - (t - 2).min(n - 1))),
        ]
    } else {
        [
            (true, (s >= 2).then(|| n - 1 - (s - 2).min(n - 1))),
            (false, Some(t - 1)),
        ]
    };
    let have = if want { others_plus } else { others_minus };
    cases
        .into_iter()
        .filter_map(|(self_value, need)| {
            let need = need.filter(|&k| k < n)?;
            let mut flips = FlipSet::new();
            let mut cost = 0;
            if p.get(a, a) != self_value {
                flips.set(a, a, self_value);
                cost += inst.link_price(a, a);
            }
            let mut open: Vec<(u64, usize)> = (0..n)
                .filter(|&b| b != a && p.get(b, a) != want)
                .map(|b| (inst.link_price(b, a), b))
                .collect();
            let k = need.saturating_sub(have);
            if k > 0 {
                open.select_nth_unstable(k - 1);
                open[..k].sort_unstable();
            }
            for &(w, b) in &open[..k] {
                flips.set(b, a, want);
                cost += w;
            }
            Some((cost, flips))
        })
        .min_by_key(|(cost, _)| *cost)
        .map(|(_, flips)| flips)
}
