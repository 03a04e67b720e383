//! Group identification rules and minimum-cost bribery.
//!
//! Agents qualify or disqualify each other through a [`QualificationProfile`];
//! a [`SocialRule`] selects the socially qualified agents. The [`solvers`]
//! compute cheapest briberies ([`FlipSet`]s) that reach a [`Goal`], and the
//! [`oracle`] module provides exhaustive reference solvers for small inputs.

pub mod error;
pub mod flips;
pub mod format;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod oracle;
pub mod profile;
pub mod reductions;
pub mod rules;
pub mod solvers;

pub use error::{Error, Result};
pub use flips::{apply_flips, check_solution, cost_of, CheckOutcome, Flip, FlipSet};
pub use format::{parse_instance, parse_report, render_solution, serialize_instance, Report};
pub use instance::{BriberyInstance, CostModel, Goal, GoalKind, SocialRule, MAX_PRICE};
pub use reductions::{build_reduction, ReductionKind};
pub use profile::{
    agents, negate_profile, qualifier_counts, AgentId, AgentSet, QualificationProfile, MAX_AGENTS,
};
pub use rules::{closure_rounds, evaluate, iterative_closure};
pub use solvers::{dispatch, solve, Algorithm, SolveOptions, SolveResult, Status};
pub use generate::{generate_random, CostKind, GenParams, SplitMix64};
