//! Agent bribery under consent rules.
//!
//! A bribed agent's row only matters on goal columns, so constructive
//! bribes qualify everyone and destructive ones disqualify A-.

use super::covering::{covering_within, MAX_TARGETS};
use super::{best_of, finish, wrong_cell, SolveResult};
use crate::error::{Error, Result};
use crate::flips::FlipSet;
use crate::instance::{BriberyInstance, CostModel, Goal, GoalKind, SocialRule};
use crate::profile::{set_of, QualificationProfile};

/// Constructive bribery by the bounded search tree, optimized over the budget.
pub fn solve_consent_agent_const_branch(instance: &BriberyInstance) -> Result<SolveResult> {
    finish(instance, branch(instance))
}

/// Constructive bribery by guessing bribed targets and covering the rest.
pub fn solve_consent_agent_const_subsetcover(instance: &BriberyInstance) -> Result<SolveResult> {
    finish(instance, subset_cover(instance, true))
}

/// Destructive bribery through the dual constructive instance.
pub fn solve_consent_agent_dest(instance: &BriberyInstance) -> Result<SolveResult> {
    finish(instance, dest(instance, true))
}

/// Constructive+destructive (and exact) bribery by guessing bribed targets.
pub fn solve_consent_agent_constdest(instance: &BriberyInstance) -> Result<SolveResult> {
    finish(instance, const_dest(instance, true))
}

/// Whether some bribery of total price at most `budget` reaches the
/// constructive goal, with a witness.
pub fn calcb_decide(instance: &BriberyInstance, budget: u64) -> Result<Option<FlipSet>> {
    let ctx = Ctx::new(instance, GoalKind::Constructive)?;
    Ok(ctx.decide(budget).map(|b| ctx.qualify_all(&b)))
}

struct Ctx<'a> {
    p: &'a QualificationProfile,
    prices: &'a [u64],
    n: usize,
    s: usize,
    t: usize,
    plus: Vec<bool>,
    minus: Vec<bool>,
    col_plus: Vec<usize>,
}

impl<'a> Ctx<'a> {
    fn new(inst: &'a BriberyInstance, kind: GoalKind) -> Result<Self> {
        let SocialRule::Consent { s, t } = inst.rule else {
            return Err(wrong_cell("rule must be a consent rule"));
        };
        let CostModel::AgentPrices(prices) = &inst.cost else {
            return Err(wrong_cell("agent bribery needs agent prices"));
        };
        let goal_kind = inst.goal.kind();
        let fits = match kind {
            GoalKind::ConstDest => matches!(goal_kind, GoalKind::ConstDest | GoalKind::Exact),
            k => goal_kind == k,
        };
        if !fits {
            return Err(wrong_cell("goal kind does not match the solver"));
        }
        let p = &inst.profile;
        let n = p.n();
        let (plus, minus) = inst.goal.masks(n);
        Ok(Ctx {
            p,
            prices,
            n,
            s,
            t,
            plus,
            minus,
            col_plus: (0..n).map(|a| p.column_plus(a)).collect(),
        })
    }

    fn price(&self, set: &[usize]) -> u64 {
        set.iter().map(|&a| self.prices[a]).sum()
    }

    /// Whether `a` is qualified once `bribed` agents qualify everyone.
    fn qualified_after(&self, bribed: &[bool], a: usize) -> bool {
        let gained = (0..self.n).filter(|&b| bribed[b] && !self.p.get(b, a)).count();
        let plus = self.col_plus[a] + gained;
        if self.p.get(a, a) || bribed[a] {
            plus >= self.s
        } else {
            self.n - plus < self.t
        }
    }

    fn all_qualified_after(&self, bribed: &[bool]) -> bool {
        (0..self.n).all(|a| !self.plus[a] || self.qualified_after(bribed, a))
    }

    fn qualify_all(&self, bribed: &[usize]) -> FlipSet {
        FlipSet::rewrite_rows(self.p, bribed.iter().copied(), &vec![true; self.n])
    }

    /// Bribers missing for `a` to stay in without qualifying itself.
    fn deficiency(&self, a: usize) -> usize {
        (self.n - self.col_plus[a]).saturating_sub(self.t - 1)
    }

    fn mask(&self, set: &[usize]) -> Vec<bool> {
        let mut m = vec![false; self.n];
        for &a in set {
            m[a] = true;
        }
        m
    }

    fn decide(&self, budget: u64) -> Option<Vec<usize>> {
        if self.all_qualified_after(&vec![false; self.n]) {
            return Some(Vec::new());
        }
        if budget < self.s as u64 {
            return self.enumerate(Vec::new(), 0, budget);
        }
        if self.prices.iter().all(|&w| w == 1) {
            return self.decide_unit(budget as usize);
        }
        if self.n as u64 <= self.s as u64 + budget + self.t as u64 {
            return self.enumerate(Vec::new(), 0, budget);
        }
        self.decide_priced(budget)
    }

    /// Some set of price at most `budget`, extending `chosen` by agents from
    /// `from` on, that qualifies all of A+.
    fn enumerate(&self, chosen: Vec<usize>, from: usize, budget: u64) -> Option<Vec<usize>> {
        if self.all_qualified_after(&self.mask(&chosen)) {
            return Some(chosen);
        }
        for a in from..self.n {
            if self.prices[a] <= budget {
                let mut next = chosen.clone();
                next.push(a);
                if let Some(found) = self.enumerate(next, a + 1, budget - self.prices[a]) {
                    return Some(found);
                }
            }
        }
        None
    }

    /// Unit prices with `budget >= s`: once at least `s` agents are bribed,
    /// every self-qualifier is in, so only self-disqualifiers of A+ matter.
    fn decide_unit(&self, budget: usize) -> Option<Vec<usize>> {
        if self.s > self.n {
            return None;
        }
        let pending: Vec<usize> = (0..self.n)
            .filter(|&a| self.plus[a] && !self.p.get(a, a) && self.deficiency(a) > 0)
            .collect();
        let mut chosen = self.calcb(&pending, Vec::new(), budget)?;
        for a in 0..self.n {
            if chosen.len() >= self.s {
                break;
            }
            if !chosen.contains(&a) {
                chosen.push(a);
            }
        }
        chosen.sort_unstable();
        debug_assert!(chosen.len() <= budget && self.all_qualified_after(&self.mask(&chosen)));
        Some(chosen)
    }

    /// Bounded search: each pending agent is bribed or has its deficiency
    /// met by bribed disqualifiers.
    fn calcb(&self, pending: &[usize], mut chosen: Vec<usize>, mut budget: usize) -> Option<Vec<usize>> {
        let missing = |chosen: &[usize], a: usize| {
            if chosen.contains(&a) {
                return 0;
            }
            let met = chosen.iter().filter(|&&b| !self.p.get(b, a)).count();
            self.deficiency(a).saturating_sub(met)
        };
        loop {
            let forced = pending
                .iter()
                .copied()
                .find(|&a| missing(&chosen, a) > budget);
            let Some(a) = forced else { break };
            budget = budget.checked_sub(1)?;
            chosen.push(a);
        }
        let Some(&pick) = pending.iter().find(|&&a| missing(&chosen, a) > 0) else {
            return Some(chosen);
        };
        if budget == 0 {
            return None;
        }
        let options = std::iter::once(pick).chain(
            (0..self.n).filter(|&b| b != pick && !self.p.get(b, pick) && !chosen.contains(&b)),
        );
        for b in options {
            let mut next = chosen.clone();
            next.push(b);
            if let Some(found) = self.calcb(pending, next, budget - 1) {
                return Some(found);
            }
        }
        None
    }

    /// Priced search for `n > s + budget + t`.
    fn decide_priced(&self, budget: u64) -> Option<Vec<usize>> {
        let big: Vec<usize> = (0..self.n)
            .filter(|&a| self.plus[a] && self.deficiency(a) as u64 > budget)
            .collect();
        // Such self-disqualifiers can only be qualified by bribing them.
        let forced: Vec<usize> = big.iter().copied().filter(|&a| !self.p.get(a, a)).collect();
        let spent = self.price(&forced);
        if spent > budget {
            return None;
        }
        let pending: Vec<usize> = (0..self.n)
            .filter(|&a| {
                self.plus[a] && !self.p.get(a, a) && self.deficiency(a) > 0 && !big.contains(&a)
            })
            .collect();
        let mut found = None;
        self.small_sets(&forced, 0, budget - spent, self.s, &mut |start, left| {
            let m = self.mask(start);
            if !big.iter().all(|&a| self.qualified_after(&m, a)) {
                return false;
            }
            found = self.calcb_priced(&pending, start.to_vec(), left);
            found.is_some()
        });
        let mut chosen = found?;
        chosen.sort_unstable();
        debug_assert!(self.all_qualified_after(&self.mask(&chosen)));
        Some(chosen)
    }

    /// Calls `visit` on `base` extended by every set of at most `size` further
    /// agents within `budget`, until it returns true.
    fn small_sets(
        &self,
        base: &[usize],
        from: usize,
        budget: u64,
        size: usize,
        visit: &mut dyn FnMut(&[usize], u64) -> bool,
    ) -> bool {
        if visit(base, budget) {
            return true;
        }
        if size == 0 {
            return false;
        }
        for a in from..self.n {
            if !base.contains(&a) && self.prices[a] <= budget {
                let mut next = base.to_vec();
                next.push(a);
                if self.small_sets(&next, a + 1, budget - self.prices[a], size - 1, visit) {
                    return true;
                }
            }
        }
        false
    }

    fn calcb_priced(&self, pending: &[usize], chosen: Vec<usize>, budget: u64) -> Option<Vec<usize>> {
        let missing = |a: usize| {
            if chosen.contains(&a) {
                return 0;
            }
            let met = chosen.iter().filter(|&&b| !self.p.get(b, a)).count();
            self.deficiency(a).saturating_sub(met)
        };
        let Some(&pick) = pending.iter().find(|&&a| missing(a) > 0) else {
            return Some(chosen);
        };
        let options = std::iter::once(pick).chain(
            (0..self.n).filter(|&b| b != pick && !self.p.get(b, pick) && !chosen.contains(&b)),
        );
        for b in options {
            if self.prices[b] <= budget {
                let mut next = chosen.clone();
                next.push(b);
                if let Some(found) = self.calcb_priced(pending, next, budget - self.prices[b]) {
                    return Some(found);
                }
            }
        }
        None
    }

    /// Residual covering after guessing which targets are bribed; returns
    /// the bribed agents. Bribed rows qualify A+ and disqualify A-.
    fn cover(&self, guessed: &[usize], bound: u64) -> Option<Vec<usize>> {
        let g = self.mask(guessed);
        let vars: Vec<usize> = (0..self.n).filter(|&b| !self.plus[b] && !self.minus[b]).collect();
        let mut rows = Vec::new();
        let mut thresholds = Vec::new();
        for a in 0..self.n {
            let (want, self_in) = if self.plus[a] {
                (true, self.p.get(a, a) || g[a])
            } else if self.minus[a] {
                (false, self.p.get(a, a) && !g[a])
            } else {
                continue;
            };
            // Qualifications of `a` once the guessed rows are rewritten.
            let plus = (0..self.n)
                .filter(|&b| if g[b] { want } else { self.p.get(b, a) })
                .count() as i64;
            let (n, s, t) = (self.n as i64, self.s as i64, self.t as i64);
            let need = match (want, self_in) {
                (true, true) => s - plus,
                (true, false) => (n - plus) - (t - 1),
                (false, true) => plus - (s - 1),
                (false, false) => t - (n - plus),
            };
            rows.push(vars.iter().map(|&b| self.p.get(b, a) != want).collect());
            thresholds.push(need);
        }
        let weights: Vec<u64> = vars.iter().map(|&b| self.prices[b]).collect();
        let (_, x) = covering_within(&weights, &rows, &thresholds, bound).ok()??;
        let mut bribed = guessed.to_vec();
        bribed.extend(vars.iter().zip(x).filter(|(_, on)| *on).map(|(&b, _)| b));
        bribed.sort_unstable();
        Some(bribed)
    }

    fn goal_row(&self, a: usize) -> Vec<bool> {
        (0..self.n)
            .map(|b| self.plus[b] || (!self.minus[b] && self.p.get(a, b)))
            .collect()
    }

    fn rewrite_to_goal(&self, bribed: &[usize]) -> FlipSet {
        let mut flips = FlipSet::new();
        for &a in bribed {
            flips.extend(FlipSet::rewrite_rows(self.p, [a], &self.goal_row(a)));
        }
        flips
    }

    /// Guesses which targets are bribed and covers the rest. The empty and
    /// single-target guesses give an incumbent that bounds all other guesses.
    fn guess_and_cover(&self, inst: &BriberyInstance, parallel: bool) -> Result<Option<FlipSet>> {
        let targets: Vec<usize> = (0..self.n).filter(|&a| self.plus[a] || self.minus[a]).collect();
        if targets.len() > MAX_TARGETS {
            return Err(Error::TooManyTargets(targets.len()));
        }
        let guessed = |mask: u32| -> Vec<usize> {
            (0..targets.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| targets[i])
                .collect()
        };
        let incumbent = std::iter::once(0)
            .chain((0..targets.len()).map(|i| 1u32 << i))
            .filter_map(|mask| self.cover(&guessed(mask), u64::MAX))
            .map(|b| self.price(&b))
            .min()
            .unwrap_or(u64::MAX);
        let guesses: Vec<u32> = (0..1u32 << targets.len())
            .filter(|&mask| self.price(&guessed(mask)) <= incumbent)
            .collect();
        best_of(inst, &guesses, parallel, |&mask| {
            let g = guessed(mask);
            let rest = incumbent.saturating_sub(self.price(&g));
            Ok(self.cover(&g, rest).map(|b| self.rewrite_to_goal(&b)))
        })
    }
}

pub(crate) fn branch(inst: &BriberyInstance) -> Result<Option<FlipSet>> {
    let ctx = Ctx::new(inst, GoalKind::Constructive)?;
    let total: u64 = ctx.prices.iter().sum();
    if ctx.decide(total).is_none() {
        return Ok(None);
    }
    if let Some(b) = ctx.decide(0) {
        return Ok(Some(ctx.qualify_all(&b)));
    }
    // Feasibility is monotone in the budget: double, then bisect between an
    // infeasible `lo` and a feasible `hi`.
    let (mut lo, mut hi) = (0, 1.min(total));
    let mut best = loop {
        if let Some(b) = ctx.decide(hi) {
            break b;
        }
        lo = hi;
        hi = (hi * 2).min(total);
    };
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        match ctx.decide(mid) {
            Some(b) => {
                best = b;
                hi = mid;
            }
            None => lo = mid,
        }
    }
    Ok(Some(ctx.qualify_all(&best)))
}

pub(crate) fn subset_cover(inst: &BriberyInstance, parallel: bool) -> Result<Option<FlipSet>> {
    let ctx = Ctx::new(inst, GoalKind::Constructive)?;
    ctx.guess_and_cover(inst, parallel)
}

pub(crate) fn dest(inst: &BriberyInstance, parallel: bool) -> Result<Option<FlipSet>> {
    let ctx = Ctx::new(inst, GoalKind::Destructive)?;
    let dual = BriberyInstance {
        profile: ctx.p.negate(),
        rule: SocialRule::Consent { s: ctx.t, t: ctx.s },
        goal: Goal::constructive(set_of(&ctx.minus)),
        cost: inst.cost.clone(),
        budget: inst.budget,
    };
    let witness = if dual.goal.aplus().len() <= MAX_TARGETS {
        subset_cover(&dual, parallel)?
    } else {
        branch(&dual)?
    };
    Ok(witness.map(|w| w.negated()))
}

pub(crate) fn const_dest(inst: &BriberyInstance, parallel: bool) -> Result<Option<FlipSet>> {
    let ctx = Ctx::new(inst, GoalKind::ConstDest)?;
    if ctx.s == 1 && ctx.t == 1 {
        // Membership is the self entry.
        let mut flips = FlipSet::new();
        for a in 0..ctx.n {
            if ctx.plus[a] && !ctx.p.get(a, a) {
                flips.set(a, a, true);
            } else if ctx.minus[a] && ctx.p.get(a, a) {
                flips.set(a, a, false);
            }
        }
        return Ok(Some(flips));
    }
    ctx.guess_and_cover(inst, parallel)
}
