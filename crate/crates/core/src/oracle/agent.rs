//! Exhaustive agent bribery.

use super::bits::{bits_of, members, Bits};
use crate::flips::FlipSet;
use crate::instance::{BriberyInstance, SocialRule};

/// Bribed sets in order of `(price, mask)`.
fn by_price(inst: &BriberyInstance) -> Vec<(u64, u32)> {
    let n = inst.n();
    let mut all: Vec<(u64, u32)> = (0u32..1 << n)
        .map(|m| (members(m).map(|a| inst.agent_price(a)).sum(), m))
        .collect();
    all.sort_unstable();
    all
}

fn goal_bits(inst: &BriberyInstance) -> (u32, u32) {
    let (plus, minus) = inst.goal.masks(inst.n());
    (bits_of(&plus), bits_of(&minus))
}

fn meets(q: u32, plus: u32, minus: u32) -> bool {
    q & plus == plus && q & minus == 0
}

fn diff(before: &Bits, after: &Bits) -> FlipSet {
    let mut flips = FlipSet::new();
    for a in 0..before.n {
        for b in members(before.rows[a] ^ after.rows[a]) {
            flips.set(a, b, after.get(a, b));
        }
    }
    flips
}

/// Cheapest bribery with a witness. Bribed rows are canonical: under
/// consent they qualify A+ and disqualify A-; under an iterative rule they
/// qualify exactly the final qualified set, which is enumerated.
pub(crate) fn solve(inst: &BriberyInstance) -> Option<(u64, FlipSet)> {
    let b = Bits::from_profile(&inst.profile);
    let (plus, minus) = goal_bits(inst);
    let free = b.full() & !plus & !minus;
    for (price, bribed) in by_price(inst) {
        let mut p = b.clone();
        let found = match inst.rule {
            SocialRule::Consent { .. } => {
                for a in members(bribed) {
                    p.rows[a] = (b.rows[a] | plus) & !minus;
                }
                meets(p.evaluate(inst.rule), plus, minus)
            }
            _ => {
                let mut sub = 0u32;
                loop {
                    for a in members(bribed) {
                        p.rows[a] = plus | sub;
                    }
                    if meets(p.evaluate(inst.rule), plus, minus) || sub == free {
                        break;
                    }
                    sub = sub.wrapping_sub(free) & free;
                }
                meets(p.evaluate(inst.rule), plus, minus)
            }
        };
        if found {
            return Some((price, diff(&b, &p)));
        }
    }
    None
}

/// Cheapest cost over arbitrary row rewrites, optionally allowing at most
/// `max_new_seeds` agents to become initially qualified that were not.
pub(crate) fn solve_generic(inst: &BriberyInstance, max_new_seeds: Option<usize>) -> Option<u64> {
    let b = Bits::from_profile(&inst.profile);
    let n = b.n;
    let (plus, minus) = goal_bits(inst);
    let old_seeds = match inst.rule {
        SocialRule::Consent { .. } => 0,
        rule => b.seeds(rule),
    };
    for (price, bribed) in by_price(inst) {
        let who: Vec<usize> = members(bribed).collect();
        let rows = 1u64 << n;
        let total = rows.pow(who.len() as u32);
        let mut p = b.clone();
        for code in 0..total {
            let mut c = code;
            for &a in &who {
                p.rows[a] = (c % rows) as u32;
                c /= rows;
            }
            if !meets(p.evaluate(inst.rule), plus, minus) {
                continue;
            }
            let fresh = match (inst.rule, max_new_seeds) {
                (SocialRule::Consent { .. }, _) | (_, None) => 0,
                (rule, Some(_)) => (p.seeds(rule) & !old_seeds).count_ones() as usize,
            };
            if max_new_seeds.is_none_or(|k| fresh <= k) {
                return Some(price);
            }
        }
    }
    None
}
