//! Exhaustive link bribery.

use std::collections::BTreeSet;

use super::bits::{bits_of, members, Bits};
use crate::flips::{Flip, FlipSet};
use crate::instance::{BriberyInstance, SocialRule};

type Entry = (usize, usize, bool);

/// Optimal cost and every optimal witness, or `None` if no bribery works.
pub(crate) fn solve(inst: &BriberyInstance, deletions_only: bool) -> Option<(u64, Vec<FlipSet>)> {
    let mut best = Best::default();
    match inst.rule {
        SocialRule::Consent { s, t } => consent(inst, s, t, deletions_only, &mut best),
        _ => iterative(inst, deletions_only, &mut best),
    }
    best.finish()
}

#[derive(Default)]
struct Best {
    cost: Option<u64>,
    witnesses: BTreeSet<Vec<Entry>>,
}

impl Best {
    fn bound(&self) -> u64 {
        self.cost.unwrap_or(u64::MAX)
    }

    fn record(&mut self, cost: u64, mut entries: Vec<Entry>) {
        if cost > self.bound() {
            return;
        }
        if cost < self.bound() {
            self.cost = Some(cost);
            self.witnesses.clear();
        }
        entries.sort_unstable();
        self.witnesses.insert(entries);
    }

    fn finish(self) -> Option<(u64, Vec<FlipSet>)> {
        let cost = self.cost?;
        let mut all: Vec<FlipSet> = self
            .witnesses
            .into_iter()
            .map(|w| w.into_iter().map(|(a, b, v)| Flip::at(a, b, v)).collect())
            .collect();
        all.sort();
        all.dedup();
        Some((cost, all))
    }
}

/// Under an iterative rule every bribery ends in some closed set `Q`.
/// Reaching exactly `Q` forces the removal of arcs leaving `Q` and of seeds
/// outside it; what remains is adding arcs or seeds until `Q` is reached.
fn iterative(inst: &BriberyInstance, deletions_only: bool, best: &mut Best) {
    let b = Bits::from_profile(&inst.profile);
    let n = b.n;
    let (plus, minus) = inst.goal.masks(n);
    let (plus, minus) = (bits_of(&plus), bits_of(&minus));
    let free = b.full() & !plus & !minus;
    let mut sub = 0u32;
    loop {
        outcome(inst, &b, plus | sub, deletions_only, best);
        if sub == free {
            break;
        }
        sub = (sub.wrapping_sub(free)) & free;
    }
}

fn outcome(inst: &BriberyInstance, b: &Bits, q: u32, deletions_only: bool, best: &mut Best) {
    let mut p = b.clone();
    let mut forced = Vec::new();
    let mut cost = 0;
    for a in members(q) {
        for c in members(b.rows[a] & !q) {
            forced.push((a, c, false));
            cost += inst.link_price(a, c);
            p.set(a, c, false);
        }
    }
    if inst.rule == SocialRule::Lsr {
        for a in members(b.self_loops() & !q) {
            forced.push((a, a, false));
            cost += inst.link_price(a, a);
            p.set(a, a, false);
        }
    } else if q == 0 {
        empty_csr(inst, &p, forced, cost, best);
        return;
    }
    if cost > best.bound() {
        return;
    }
    if deletions_only {
        if p.closure(p.seeds(inst.rule)) == q {
            best.record(cost, forced);
        }
        return;
    }
    grow(inst, &mut p, q, &mut forced, cost, best);
}

/// With nothing qualified under CSR, every unanimous column needs one
/// disqualification; all cheapest choices are optimal.
fn empty_csr(inst: &BriberyInstance, p: &Bits, forced: Vec<Entry>, cost: u64, best: &mut Best) {
    let n = p.n;
    let mut total = cost;
    let mut choices: Vec<Vec<Entry>> = Vec::new();
    for c in members(p.unanimous()) {
        let cheapest = (0..n).map(|a| inst.link_price(a, c)).min().unwrap();
        total += cheapest;
        choices.push(
            (0..n)
                .filter(|&a| inst.link_price(a, c) == cheapest)
                .map(|a| (a, c, false))
                .collect(),
        );
    }
    if total > best.bound() {
        return;
    }
    let mut combos = vec![forced];
    for options in choices {
        combos = combos
            .into_iter()
            .flat_map(|w| {
                options.iter().map(move |&e| {
                    let mut w = w.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    for w in combos {
        best.record(total, w);
    }
}

/// Adds qualifications inside `q` until the closure is `q`. The first newly
/// reached agent is reached by an added arc from the reached set or becomes
/// a seed itself, so branching on those covers every minimal addition set.
fn grow(inst: &BriberyInstance, p: &mut Bits, q: u32, flips: &mut Vec<Entry>, cost: u64, best: &mut Best) {
    let reached = p.closure(p.seeds(inst.rule));
    debug_assert_eq!(reached & !q, 0);
    if reached == q {
        best.record(cost, flips.clone());
        return;
    }
    if cost + 1 > best.bound() {
        return;
    }
    for v in members(q & !reached) {
        // v becomes a seed.
        let missing: Vec<usize> = match inst.rule {
            SocialRule::Lsr => (!p.get(v, v)).then_some(v).into_iter().collect(),
            _ => (0..p.n).filter(|&a| !p.get(a, v)).collect(),
        };
        let extra: u64 = missing.iter().map(|&a| inst.link_price(a, v)).sum();
        if !missing.is_empty() && cost + extra <= best.bound() {
            let entries: Vec<Entry> = match inst.rule {
                SocialRule::Lsr => vec![(v, v, true)],
                _ => missing.iter().map(|&a| (a, v, true)).collect(),
            };
            apply(p, flips, &entries);
            grow(inst, p, q, flips, cost + extra, best);
            undo(p, flips, &entries);
        }
        // An arc from the reached set into v.
        for u in members(reached) {
            let w = inst.link_price(u, v);
            if !p.get(u, v) && cost + w <= best.bound() {
                let entries = [(u, v, true)];
                apply(p, flips, &entries);
                grow(inst, p, q, flips, cost + w, best);
                undo(p, flips, &entries);
            }
        }
    }
}

fn apply(p: &mut Bits, flips: &mut Vec<Entry>, entries: &[Entry]) {
    for &(a, b, v) in entries {
        p.set(a, b, v);
        flips.push((a, b, v));
    }
}

fn undo(p: &mut Bits, flips: &mut Vec<Entry>, entries: &[Entry]) {
    for &(a, b, v) in entries.iter().rev() {
        p.set(a, b, !v);
        flips.pop();
    }
}

/// Consent rules decide each column alone; the optimum is the product of
/// the cheapest column choices.
fn consent(inst: &BriberyInstance, s: usize, t: usize, deletions_only: bool, best: &mut Best) {
    let b = Bits::from_profile(&inst.profile);
    let n = b.n;
    let (plus, minus) = inst.goal.masks(n);
    let mut total = 0;
    let mut choices: Vec<Vec<Vec<Entry>>> = Vec::new();
    for a in (0..n).filter(|&a| plus[a] || minus[a]) {
        let mut col_best = u64::MAX;
        let mut col_choices = Vec::new();
        for flip_mask in 0u32..1 << n {
            if deletions_only && members(flip_mask).any(|r| !b.get(r, a)) {
                continue;
            }
            let mut p = b.clone();
            let mut c = 0;
            for r in members(flip_mask) {
                p.set(r, a, !b.get(r, a));
                c += inst.link_price(r, a);
            }
            if c > col_best || p.consent_member(a, s, t) != plus[a] {
                continue;
            }
            if c < col_best {
                col_best = c;
                col_choices.clear();
            }
            col_choices.push(members(flip_mask).map(|r| (r, a, !b.get(r, a))).collect());
        }
        if col_choices.is_empty() {
            return;
        }
        total += col_best;
        choices.push(col_choices);
    }
    let mut combos: Vec<Vec<Entry>> = vec![Vec::new()];
    for options in choices {
        combos = combos
            .into_iter()
            .flat_map(|w| {
                options.iter().map(move |o| {
                    let mut w = w.clone();
                    w.extend(o);
                    w
                })
            })
            .collect();
    }
    for w in combos {
        best.record(total, w);
    }
}
