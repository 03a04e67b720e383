//! Minimum-cost bribery solvers and the routing table between them.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::flips::{cost_of, FlipSet};
use crate::instance::{BriberyInstance, GoalKind, SocialRule};
use crate::oracle;

mod consent_agent;
mod consent_link;
mod covering;
mod iter_agent;
mod iter_link;

pub use consent_agent::{
    calcb_decide, solve_consent_agent_const_branch, solve_consent_agent_const_subsetcover,
    solve_consent_agent_constdest, solve_consent_agent_dest,
};
pub use consent_link::solve_consent_link;
pub use covering::covering_bnb;
pub use iter_agent::solve_iter_agent;
pub use iter_link::{solve_iter_link_const, solve_iter_link_dest, solve_iter_link_exact};

/// Largest instance the dispatcher hands to the exhaustive oracle.
pub const ORACLE_GUARD: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Optimal,
    Infeasible,
    BudgetExceeded,
    Unsupported,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Optimal => "OPTIMAL",
            Status::Infeasible => "INFEASIBLE",
            Status::BudgetExceeded => "BUDGET_EXCEEDED",
            Status::Unsupported => "UNSUPPORTED",
        })
    }
}

/// Outcome of a solver. `BudgetExceeded` keeps the optimal cost and witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: Status,
    pub cost: Option<u64>,
    pub witness: Option<FlipSet>,
}

impl SolveResult {
    pub fn unsupported() -> Self {
        SolveResult {
            status: Status::Unsupported,
            cost: None,
            witness: None,
        }
    }

    pub fn infeasible() -> Self {
        SolveResult {
            status: Status::Infeasible,
            cost: None,
            witness: None,
        }
    }

    /// Wraps an optimal bribery and compares its cost with the budget.
    pub fn from_optimum(instance: &BriberyInstance, witness: FlipSet) -> Self {
        let cost = cost_of(&witness, &instance.cost);
        let status = match instance.budget {
            Some(l) if cost > l => Status::BudgetExceeded,
            _ => Status::Optimal,
        };
        SolveResult {
            status,
            cost: Some(cost),
            witness: Some(witness),
        }
    }

    fn from_option(instance: &BriberyInstance, witness: Option<FlipSet>) -> Self {
        match witness {
            Some(w) => Self::from_optimum(instance, w),
            None => Self::infeasible(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Auto,
    IterAgent,
    IterLinkDest,
    IterLinkExact,
    IterLinkConst,
    ConsentLink,
    ConsentAgentBranch,
    ConsentAgentCover,
    ConsentAgentDest,
    ConsentAgentConstDest,
    Oracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 11] = [
        Algorithm::Auto,
        Algorithm::IterAgent,
        Algorithm::IterLinkDest,
        Algorithm::IterLinkExact,
        Algorithm::IterLinkConst,
        Algorithm::ConsentLink,
        Algorithm::ConsentAgentBranch,
        Algorithm::ConsentAgentCover,
        Algorithm::ConsentAgentDest,
        Algorithm::ConsentAgentConstDest,
        Algorithm::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::IterAgent => "iter-agent",
            Algorithm::IterLinkDest => "iter-link-dest",
            Algorithm::IterLinkExact => "iter-link-exact",
            Algorithm::IterLinkConst => "iter-link-const",
            Algorithm::ConsentLink => "consent-link",
            Algorithm::ConsentAgentBranch => "consent-agent-branch",
            Algorithm::ConsentAgentCover => "consent-agent-cover",
            Algorithm::ConsentAgentDest => "consent-agent-dest",
            Algorithm::ConsentAgentConstDest => "consent-agent-constdest",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown algorithm `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub algorithm: Algorithm,
    /// Evaluate guess loops on the rayon pool.
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            algorithm: Algorithm::Auto,
            parallel: true,
        }
    }
}

/// Picks the solver for the instance's (rule, cost model, goal) cell.
pub fn route(instance: &BriberyInstance) -> Algorithm {
    let kind = instance.goal.kind();
    match (instance.rule, instance.cost.is_agent()) {
        (SocialRule::Lsr | SocialRule::Csr, true) => Algorithm::IterAgent,
        (SocialRule::Lsr | SocialRule::Csr, false) => match kind {
            GoalKind::Constructive => Algorithm::IterLinkConst,
            GoalKind::Destructive => Algorithm::IterLinkDest,
            GoalKind::Exact => Algorithm::IterLinkExact,
            GoalKind::ConstDest => Algorithm::Oracle,
        },
        (SocialRule::Consent { .. }, false) => Algorithm::ConsentLink,
        (SocialRule::Consent { .. }, true) => match kind {
            GoalKind::Constructive if instance.goal.aplus().len() <= covering::MAX_TARGETS => {
                Algorithm::ConsentAgentCover
            }
            GoalKind::Constructive => Algorithm::ConsentAgentBranch,
            GoalKind::Destructive => Algorithm::ConsentAgentDest,
            GoalKind::ConstDest | GoalKind::Exact => Algorithm::ConsentAgentConstDest,
        },
    }
}

/// Solves with the routed algorithm and default options.
pub fn dispatch(instance: &BriberyInstance) -> SolveResult {
    solve(instance, SolveOptions::default())
}

/// Solves with the requested algorithm. Size caps and mismatched cells are
/// reported as `Unsupported`.
pub fn solve(instance: &BriberyInstance, options: SolveOptions) -> SolveResult {
    let algorithm = match options.algorithm {
        Algorithm::Auto => route(instance),
        a => a,
    };
    let p = options.parallel;
    let outcome = match algorithm {
        Algorithm::Auto => unreachable!(),
        Algorithm::IterAgent => iter_agent::solve(instance, p),
        Algorithm::IterLinkDest => iter_link::dest(instance, p),
        Algorithm::IterLinkExact => iter_link::exact(instance, p),
        Algorithm::IterLinkConst => iter_link::constructive(instance, p),
        Algorithm::ConsentLink => consent_link::solve(instance),
        Algorithm::ConsentAgentBranch => consent_agent::branch(instance),
        Algorithm::ConsentAgentCover => consent_agent::subset_cover(instance, p),
        Algorithm::ConsentAgentDest => consent_agent::dest(instance, p),
        Algorithm::ConsentAgentConstDest => consent_agent::const_dest(instance, p),
        Algorithm::Oracle => guarded_oracle(instance),
    };
    match outcome {
        Ok(witness) => SolveResult::from_option(instance, witness),
        Err(_) => SolveResult::unsupported(),
    }
}

fn guarded_oracle(instance: &BriberyInstance) -> Result<Option<FlipSet>> {
    if instance.n() > ORACLE_GUARD {
        return Err(Error::InstanceTooLarge {
            n: instance.n(),
            max: ORACLE_GUARD,
        });
    }
    
    if instance.cost.is_agent() {
        oracle::oracle_agent(instance, ORACLE_GUARD).map(|r| r.map(|(_, w)| w))
    } else {
        oracle::oracle_link(instance, ORACLE_GUARD).map(|r| r.map(|(_, mut w)| w.swap_remove(0)))
    }
}

/// Converts a raw solver outcome; a mismatched cell becomes `Unsupported`.
pub(crate) fn finish(instance: &BriberyInstance, outcome: Result<Option<FlipSet>>) -> Result<SolveResult> {
    match outcome {
        Ok(w) => Ok(SolveResult::from_option(instance, w)),
        Err(Error::Unsupported(_)) => Ok(SolveResult::unsupported()),
        Err(e) => Err(e),
    }
}

/// Cheapest candidate over `items`, ties broken by position.
pub(crate) fn best_of<T, F>(
    instance: &BriberyInstance,
    items: &[T],
    parallel: bool,
    f: F,
) -> Result<Option<FlipSet>>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<FlipSet>> + Sync + Send,
{
    type Scored = Option<(u64, usize, FlipSet)>;
    let score = |(i, item): (usize, &T)| -> Result<Scored> {
        Ok(f(item)?.map(|w| (cost_of(&w, &instance.cost), i, w)))
    };
    let better = |a: Scored, b: Scored| -> Result<Scored> {
        Ok(match (a, b) {
            (Some(x), Some(y)) => Some(if (y.0, y.1) < (x.0, x.1) { y } else { x }),
            (x, None) | (None, x) => x,
        })
    };
    let best = if parallel {
        items
            .par_iter()
            .enumerate()
            .map(score)
            .try_reduce(|| None, better)?
    } else {
        items
            .iter()
            .enumerate()
            .map(score)
            .try_fold(None, |acc, s| better(acc, s?))?
    };
    Ok(best.map(|(_, _, w)| w))
}

fn wrong_cell(what: &str) -> Error {
    Error::Unsupported(what.to_string())
}
