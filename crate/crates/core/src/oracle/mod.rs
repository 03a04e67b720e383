//! Exhaustive reference solvers for small instances.

mod agent;
mod bits;
mod link;

use crate::error::{Error, Result};
use crate::flips::FlipSet;
use crate::instance::BriberyInstance;

pub const DEFAULT_LINK_MAX_N: usize = 8;
pub const DEFAULT_AGENT_MAX_N: usize = 6;
/// Size limit of the arbitrary-row enumeration.
pub const GENERIC_MAX_N: usize = 5;

fn check_size(instance: &BriberyInstance, max_n: usize) -> Result<()> {
    let max = max_n.min(32);
    if instance.n() > max {
        return Err(Error::InstanceTooLarge {
            n: instance.n(),
            max,
        });
    }
    Ok(())
}

fn need_link(instance: &BriberyInstance) -> Result<()> {
    if instance.cost.is_agent() {
        return Err(Error::Unsupported("the link oracle needs link prices".into()));
    }
    Ok(())
}

fn need_agent(instance: &BriberyInstance) -> Result<()> {
    if !instance.cost.is_agent() {
        return Err(Error::Unsupported("the agent oracle needs agent prices".into()));
    }
    Ok(())
}

/// Optimal link-bribery cost and all optimal witnesses in sorted order;
/// `None` if the goal cannot be reached.
pub fn oracle_link(instance: &BriberyInstance, max_n: usize) -> Result<Option<(u64, Vec<FlipSet>)>> {
    need_link(instance)?;
    check_size(instance, max_n)?;
    Ok(link::solve(instance, false))
}

/// As [`oracle_link`], restricted to flips that remove qualifications.
pub fn oracle_link_deletions(
    instance: &BriberyInstance,
    max_n: usize,
) -> Result<Option<(u64, Vec<FlipSet>)>> {
    need_link(instance)?;
    check_size(instance, max_n)?;
    Ok(link::solve(instance, true))
}

/// Optimal agent-bribery cost and the first optimal witness in
/// `(price, bribed set)` order.
pub fn oracle_agent(instance: &BriberyInstance, max_n: usize) -> Result<Option<(u64, FlipSet)>> {
    need_agent(instance)?;
    check_size(instance, max_n)?;
    Ok(agent::solve(instance))
}

/// Optimal agent-bribery cost over every possible row rewrite, without the
/// canonical-row shortcut. With `max_new_seeds`, briberies may create at
/// most that many new seeds of an iterative rule.
pub fn oracle_agent_generic(instance: &BriberyInstance, max_new_seeds: Option<usize>) -> Result<Option<u64>> {
    need_agent(instance)?;
    check_size(instance, GENERIC_MAX_N)?;
    Ok(agent::solve_generic(instance, max_new_seeds))
}
