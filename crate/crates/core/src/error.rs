use thiserror::Error;

use crate::AgentId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("flip ({briber}, {target}) does not change the profile")]
    FlipNotAChange { briber: AgentId, target: AgentId },

    #[error("agent index {index} out of range for {n} agents")]
    AgentOutOfRange { index: usize, n: usize },

    #[error("invalid consent parameters s={s}, t={t} for n={n} (need s,t >= 1 and s+t <= n+2)")]
    InvalidRuleParameters { s: usize, t: usize, n: usize },

    #[error("invalid goal: {0}")]
    InvalidGoal(String),

    #[error("price {0} outside the allowed range 1..=1000000")]
    PriceOutOfRange(u64),

    #[error("malformed profile: {0}")]
    MalformedProfile(String),

    #[error("cost model does not fit the instance: {0}")]
    CostModelMismatch(String),

    #[error("no vertex separator exists: arc from source to sink")]
    NoSeparatorExists,

    #[error("vertex {0} is not reachable from the root")]
    NotSpannable(usize),

    #[error("terminal {0} is not reachable from the root")]
    TerminalUnreachable(usize),

    #[error("{0} terminals exceed the supported maximum of 20")]
    TooManyTerminals(usize),

    #[error("{0} target agents exceed the supported maximum of 20")]
    TooManyTargets(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("covering program is infeasible")]
    Infeasible,

    #[error("instance with {n} agents exceeds the oracle limit of {max}")]
    InstanceTooLarge { n: usize, max: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("malformed reduction input: {0}")]
    MalformedInput(String),

    #[error("exact cover input is not 3-regular: {0}")]
    NotRegular(String),
}
