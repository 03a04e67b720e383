//! Briberies as sets of flipped profile entries, their cost and validation.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::instance::{BriberyInstance, CostModel};
use crate::profile::{AgentId, AgentSet, QualificationProfile};
use crate::rules::evaluate_mask;

/// One changed entry: `briber` now (dis)qualifies `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flip {
    pub briber: AgentId,
    pub target: AgentId,
    /// `true` for +1.
    pub value: bool,
}

impl Flip {
    pub fn new(briber: AgentId, target: AgentId, value: bool) -> Self {
        Flip {
            briber,
            target,
            value,
        }
    }

    pub(crate) fn at(briber: usize, target: usize, value: bool) -> Self {
        Flip::new(AgentId::from_index(briber), AgentId::from_index(target), value)
    }
}

impl fmt::Display for Flip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.value { '+' } else { '-' };
        write!(f, "{} {} {sign}", self.briber, self.target)
    }
}

/// A bribery, keyed by `(briber, target)` so pairs cannot repeat.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlipSet {
    entries: BTreeMap<(AgentId, AgentId), bool>,
}

impl FlipSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts a flip, replacing any earlier value for the same pair.
    pub fn insert(&mut self, flip: Flip) {
        self.entries.insert((flip.briber, flip.target), flip.value);
    }

    pub(crate) fn set(&mut self, briber: usize, target: usize, value: bool) {
        self.insert(Flip::at(briber, target, value));
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Flips sorted by `(briber, target)`.
    pub fn iter(&self) -> impl Iterator<Item = Flip> + '_ {
        self.entries
            .iter()
            .map(|(&(briber, target), &value)| Flip::new(briber, target, value))
    }

    pub fn bribers(&self) -> AgentSet {
        self.entries.keys().map(|&(b, _)| b).collect()
    }

    /// Each flip with its value negated.
    pub fn negated(&self) -> Self {
        self.iter().map(|f| Flip { value: !f.value, ..f }).collect()
    }

    /// Flips turning `from` into `to`.
    #[cfg(test)]
    pub(crate) fn diff(from: &QualificationProfile, to: &QualificationProfile) -> Self {
        let n = from.n();
        let mut flips = FlipSet::new();
        for i in 0..n {
            for j in 0..n {
                if from.get(i, j) != to.get(i, j) {
                    flips.set(i, j, to.get(i, j));
                }
            }
        }
        flips
    }

    /// Rewrites the rows of `bribers` to `row`, keeping only real changes.
    pub(crate) fn rewrite_rows(
        profile: &QualificationProfile,
        bribers: impl IntoIterator<Item = usize>,
        row: &[bool],
    ) -> Self {
        let mut flips = FlipSet::new();
        for b in bribers {
            for (j, &v) in row.iter().enumerate() {
                if profile.get(b, j) != v {
                    flips.set(b, j, v);
                }
            }
        }
        flips
    }

    pub(crate) fn extend(&mut self, other: FlipSet) {
        self.entries.extend(other.entries);
    }
}

impl FromIterator<Flip> for FlipSet {
    fn from_iter<I: IntoIterator<Item = Flip>>(iter: I) -> Self {
        let mut set = FlipSet::new();
        for f in iter {
            set.insert(f);
        }
        set
    }
}

pub fn apply_flips(profile: &QualificationProfile, flips: &FlipSet) -> Result<QualificationProfile> {
    let n = profile.n();
    let mut out = profile.clone();
    for f in flips.iter() {
        f.briber.check(n)?;
        f.target.check(n)?;
        let (i, j) = (f.briber.index(), f.target.index());
        if profile.get(i, j) == f.value {
            return Err(Error::FlipNotAChange {
                briber: f.briber,
                target: f.target,
            });
        }
        out.set(i, j, f.value);
    }
    Ok(out)
}

pub fn cost_of(flips: &FlipSet, cost: &CostModel) -> u64 {
    match cost {
        CostModel::AgentPrices(p) => flips.bribers().iter().map(|b| p[b.index()]).sum(),
        CostModel::LinkPrices(p) => {
            let n = (p.len() as f64).sqrt().round() as usize;
            flips
                .iter()
                .map(|f| p[f.briber.index() * n + f.target.index()])
                .sum()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckOutcome {
    Ok,
    GoalViolated,
    BudgetExceeded,
}

/// Checks goal first, then budget. Flips that do not change the profile are
/// reported as errors.
pub fn check_solution(instance: &BriberyInstance, flips: &FlipSet) -> Result<CheckOutcome> {
    let bribed = apply_flips(&instance.profile, flips)?;
    let qualified = evaluate_mask(&bribed, instance.rule);
    if !instance.goal.is_satisfied_by(&qualified) {
        return Ok(CheckOutcome::GoalViolated);
    }
    match instance.budget {
        Some(l) if cost_of(flips, &instance.cost) > l => Ok(CheckOutcome::BudgetExceeded),
        _ => Ok(CheckOutcome::Ok),
    }
}
