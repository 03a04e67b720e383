//! Agent bribery under LSR and CSR.
//!
//! Bribed agents always receive a row equal to the indicator of a set that
//! is safe to qualify, so every candidate is a set of bribed agents plus
//! that set.

use std::collections::VecDeque;

use super::{best_of, finish, wrong_cell, SolveResult};
use crate::error::Result;
use crate::flips::{apply_flips, FlipSet};
use crate::graph::{min_vertex_separator, WeightedDigraph};
use crate::instance::{BriberyInstance, SocialRule};
use crate::profile::QualificationProfile;
use crate::rules::evaluate_mask;

/// Optimal agent bribery for LSR or CSR; Exact goals are treated as ConstDest.
pub fn solve_iter_agent(instance: &BriberyInstance) -> Result<SolveResult> {
    finish(instance, solve(instance, true))
}

pub(crate) fn solve(instance: &BriberyInstance, parallel: bool) -> Result<Option<FlipSet>> {
    if !instance.cost.is_agent() {
        return Err(wrong_cell("agent bribery needs agent prices"));
    }
    let ctx = Ctx::new(instance);
    match instance.rule {
        SocialRule::Lsr => ctx.lsr().map(Some),
        SocialRule::Csr => ctx.csr(parallel).map(Some),
        SocialRule::Consent { .. } => Err(wrong_cell("consent rules have their own solvers")),
    }
}

struct Ctx<'a> {
    inst: &'a BriberyInstance,
    p: &'a QualificationProfile,
    n: usize,
    plus: Vec<bool>,
    minus: Vec<bool>,
}

impl<'a> Ctx<'a> {
    fn new(inst: &'a BriberyInstance) -> Self {
        let n = inst.n();
        let (plus, minus) = inst.goal.masks(n);
        Ctx {
            inst,
            p: &inst.profile,
            n,
            plus,
            minus,
        }
    }

    fn satisfied(&self, profile: &QualificationProfile) -> bool {
        let q = evaluate_mask(profile, self.inst.rule);
        (0..self.n).all(|a| (!self.plus[a] || q[a]) && (!self.minus[a] || !q[a]))
    }

    fn cheapest(&self, allowed: impl Fn(usize) -> bool) -> Option<usize> {
        (0..self.n)
            .filter(|&a| allowed(a))
            .min_by_key(|&a| (self.inst.agent_price(a), a))
    }

    fn lsr(&self) -> Result<FlipSet> {
        let n = self.n;
        let liars: Vec<usize> = (0..n).filter(|&a| self.minus[a] && self.p.get(a, a)).collect();
        let mut flips = FlipSet::rewrite_rows(self.p, liars, &vec![false; n]);
        let p1 = apply_flips(self.p, &flips)?;
        if self.satisfied(&p1) {
            return Ok(flips);
        }

        let (sigma, tau) = (n, n + 1);
        let mut g = WeightedDigraph::new(n + 2);
        for a in (0..n).filter(|&a| !self.minus[a]) {
            g.set_vertex_weight(a, self.inst.agent_price(a));
            if self.plus[a] || p1.get(a, a) {
                g.add_arc(sigma, a, 0);
            }
            for b in (0..n).filter(|&b| b != a && p1.get(a, b)) {
                g.add_arc(a, if self.minus[b] { tau } else { b }, 0);
            }
        }
        let (_, separator) = min_vertex_separator(&g, sigma, tau)?;
        let bribed = if separator.is_empty() {
            // Nothing leads into A-, but some of A+ is still unreached.
            vec![self.cheapest(|a| !self.minus[a]).expect("A+ is not empty")]
        } else {
            separator
        };
        for a in bribed {
            let mut row = self.plus.clone();
            row[a] = true;
            flips.extend(FlipSet::rewrite_rows(&p1, [a], &row));
        }
        Ok(flips)
    }

    fn csr(&self, parallel: bool) -> Result<FlipSet> {
        if self.satisfied(self.p) {
            return Ok(FlipSet::new());
        }
        if !self.plus.contains(&true) {
            // One all-negative row leaves no agent qualified by everyone.
            let b = self.cheapest(|_| true).unwrap();
            return Ok(FlipSet::rewrite_rows(self.p, [b], &vec![false; self.n]));
        }
        let none = vec![false; self.n];
        let safe = self.unanimous_outside(&none);
        let reach_minus = self.reaching(&none, &self.minus);
        let safe: Vec<bool> = (0..self.n).map(|u| safe[u] && !reach_minus[u]).collect();
        let base = self.closure(&none, &safe);

        let guesses: Vec<Option<usize>> = std::iter::once(None)
            .chain((0..self.n).filter(|&a| !self.minus[a]).map(Some))
            .collect();
        let best = best_of(self.inst, &guesses, parallel, |&guess| match guess {
            None => Ok(self.no_new_seed(&base)),
            Some(a) => self.with_seed(a, &base),
        })?;
        Ok(best.expect("bribing every agent toward A+ always works"))
    }

    /// All of A+ is reachable from safe seeds: one bribed agent removes every
    /// seed that leads into A-.
    fn no_new_seed(&self, base: &[bool]) -> Option<FlipSet> {
        if (0..self.n).any(|a| self.plus[a] && !base[a]) {
            return None;
        }
        let b = self.cheapest(|_| true)?;
        self.try_bribe(&[b], &self.plus)
    }

    /// `a` becomes qualified by everyone: its non-qualifiers are bribed, and a
    /// minimum separator cuts every path from A+ and `a` into A-.
    fn with_seed(&self, a: usize, base: &[bool]) -> Result<Option<FlipSet>> {
        let n = self.n;
        let detractors: Vec<bool> = (0..n).map(|b| !self.p.get(b, a)).collect();
        let mut targets = self.plus.clone();
        targets[a] = true;

        let (sigma, tau) = (n, n + 1);
        let mut g = WeightedDigraph::new(n + 2);
        for u in (0..n).filter(|&u| !self.minus[u]) {
            g.set_vertex_weight(u, self.inst.agent_price(u));
            if targets[u] {
                g.add_arc(sigma, u, 0);
            }
            if detractors[u] {
                continue;
            }
            for v in (0..n).filter(|&v| v != u && self.p.get(u, v)) {
                g.add_arc(u, if self.minus[v] { tau } else { v }, 0);
            }
        }
        let (_, separator) = min_vertex_separator(&g, sigma, tau)?;
        let mut bribed: Vec<usize> = (0..n).filter(|&b| detractors[b]).collect();
        bribed.extend(separator);
        bribed.sort_unstable();
        bribed.dedup();

        let reached = if bribed.is_empty() {
            base.to_vec()
        } else {
            if let Some(w) = self.try_bribe(&bribed, &targets) {
                return Ok(Some(w));
            }
            let q = self.safe_set(&bribed, &targets);
            let w = FlipSet::rewrite_rows(self.p, bribed.iter().copied(), &q);
            evaluate_mask(&apply_flips(self.p, &w)?, self.inst.rule)
        };
        // A+ is unreached: connect it through the cheapest reached agent.
        let Some(extra) = self.cheapest(|u| reached[u] && !bribed.contains(&u)) else {
            return Ok(None);
        };
        bribed.push(extra);
        bribed.sort_unstable();
        Ok(self.try_bribe(&bribed, &targets))
    }

    /// Rewrites every row of `bribed` to the safe set grown from `targets`,
    /// keeping the result only if it reaches the goal.
    fn try_bribe(&self, bribed: &[usize], targets: &[bool]) -> Option<FlipSet> {
        let q = self.safe_set(bribed, targets);
        if (0..self.n).any(|u| q[u] && self.minus[u]) {
            return None;
        }
        let flips = FlipSet::rewrite_rows(self.p, bribed.iter().copied(), &q);
        let bribed_profile = apply_flips(self.p, &flips).ok()?;
        self.satisfied(&bribed_profile).then_some(flips)
    }

    /// Closure of `targets` and of the agents that would become seeds without
    /// reaching A-, in the graph without the bribed agents' arcs.
    fn safe_set(&self, bribed: &[usize], targets: &[bool]) -> Vec<bool> {
        let mut blocked = vec![false; self.n];
        for &b in bribed {
            blocked[b] = true;
        }
        let seeds = self.unanimous_outside(&blocked);
        let bad = self.reaching(&blocked, &self.minus);
        let start: Vec<bool> = (0..self.n)
            .map(|u| targets[u] || (seeds[u] && !bad[u]))
            .collect();
        self.closure(&blocked, &start)
    }

    /// Agents qualified by every agent outside `blocked`.
    fn unanimous_outside(&self, blocked: &[bool]) -> Vec<bool> {
        (0..self.n)
            .map(|u| (0..self.n).all(|b| blocked[b] || self.p.get(b, u)))
            .collect()
    }

    /// Closure of `seeds` ignoring the out-arcs of `blocked` agents.
    fn closure(&self, blocked: &[bool], seeds: &[bool]) -> Vec<bool> {
        let mut reached = seeds.to_vec();
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&u| reached[u]).collect();
        while let Some(u) = queue.pop_front() {
            if blocked[u] {
                continue;
            }
            for v in 0..self.n {
                if self.p.get(u, v) && !reached[v] {
                    reached[v] = true;
                    queue.push_back(v);
                }
            }
        }
        reached
    }

    /// Agents with a path into `targets` avoiding the out-arcs of `blocked`.
    fn reaching(&self, blocked: &[bool], targets: &[bool]) -> Vec<bool> {
        let mut reached = targets.to_vec();
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&u| reached[u]).collect();
        while let Some(v) = queue.pop_front() {
            for u in 0..self.n {
                if !reached[u] && !blocked[u] && self.p.get(u, v) {
                    reached[u] = true;
                    queue.push_back(u);
                }
            }
        }
        reached
    }
}
