//! Social rules, bribery goals, cost models and the instance bundle.

use std::fmt;

use crate::error::{Error, Result};
use crate::profile::{mask_of, AgentSet, QualificationProfile};

/// Largest admissible price.
pub const MAX_PRICE: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SocialRule {
    /// Liberal-start-respecting: seeded by self-qualifiers.
    Lsr,
    /// Consensus-start-respecting: seeded by agents everyone qualifies.
    Csr,
    /// Consent rule `f^(s,t)`.
    Consent { s: usize, t: usize },
}

impl SocialRule {
    pub fn validate(self, n: usize) -> Result<Self> {
        if let SocialRule::Consent { s, t } = self {
            if s == 0 || t == 0 || s + t > n + 2 {
                return Err(Error::InvalidRuleParameters { s, t, n });
            }
        }
        Ok(self)
    }

    pub fn is_iterative(self) -> bool {
        !matches!(self, SocialRule::Consent { .. })
    }
}

impl fmt::Display for SocialRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SocialRule::Lsr => write!(f, "lsr"),
            SocialRule::Csr => write!(f, "csr"),
            SocialRule::Consent { s, t } => write!(f, "consent {s} {t}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GoalKind {
    Constructive,
    Destructive,
    ConstDest,
    Exact,
}

/// Which agents must end up socially qualified (`aplus`) and which must not
/// (`aminus`). For [`GoalKind::Exact`] `aminus` is stored empty and means
/// "everyone outside `aplus`".
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Goal {
    kind: GoalKind,
    aplus: AgentSet,
    aminus: AgentSet,
}

impl Goal {
    pub fn constructive(aplus: AgentSet) -> Self {
        Goal {
            kind: GoalKind::Constructive,
            aplus,
            aminus: AgentSet::new(),
        }
    }

    pub fn destructive(aminus: AgentSet) -> Self {
        Goal {
            kind: GoalKind::Destructive,
            aplus: AgentSet::new(),
            aminus,
        }
    }

    pub fn const_dest(aplus: AgentSet, aminus: AgentSet) -> Result<Self> {
        if let Some(a) = aplus.intersection(&aminus).next() {
            return Err(Error::InvalidGoal(format!(
                "agent {a} is in both the constructive and destructive set"
            )));
        }
        Ok(Goal {
            kind: GoalKind::ConstDest,
            aplus,
            aminus,
        })
    }

    pub fn exact(aplus: AgentSet) -> Self {
        Goal {
            kind: GoalKind::Exact,
            aplus,
            aminus: AgentSet::new(),
        }
    }

    pub fn kind(&self) -> GoalKind {
        self.kind
    }

    pub fn aplus(&self) -> &AgentSet {
        &self.aplus
    }

    /// The stored destructive set (empty for exact goals).
    pub fn aminus(&self) -> &AgentSet {
        &self.aminus
    }

    /// `A-` with the exact goal expanded to the complement of `A+`.
    pub fn effective_aminus(&self, n: usize) -> AgentSet {
        match self.kind {
            GoalKind::Exact => (0..n)
                .map(crate::AgentId::from_index)
                .filter(|a| !self.aplus.contains(a))
                .collect(),
            _ => self.aminus.clone(),
        }
    }

    /// Membership masks `(plus, minus)` with exact goals expanded.
    pub fn masks(&self, n: usize) -> (Vec<bool>, Vec<bool>) {
        let plus = mask_of(&self.aplus, n);
        let minus = match self.kind {
            GoalKind::Exact => plus.iter().map(|&p| !p).collect(),
            _ => mask_of(&self.aminus, n),
        };
        (plus, minus)
    }

    /// The same requirement phrased as a constructive+destructive goal.
    pub fn normalized(&self, n: usize) -> Goal {
        Goal {
            kind: GoalKind::ConstDest,
            aplus: self.aplus.clone(),
            aminus: self.effective_aminus(n),
        }
    }

    pub fn is_satisfied_by(&self, qualified: &[bool]) -> bool {
        let n = qualified.len();
        let (plus, minus) = self.masks(n);
        (0..n).all(|i| (!plus[i] || qualified[i]) && (!minus[i] || !qualified[i]))
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        for a in self.aplus.iter().chain(&self.aminus) {
            a.check(n)?;
        }
        if let Some(a) = self.aplus.intersection(&self.aminus).next() {
            return Err(Error::InvalidGoal(format!(
                "agent {a} is in both the constructive and destructive set"
            )));
        }
        match self.kind {
            GoalKind::Constructive | GoalKind::Exact if !self.aminus.is_empty() => Err(
                Error::InvalidGoal("destructive set must be empty for this goal".into()),
            ),
            GoalKind::Destructive if !self.aplus.is_empty() => Err(Error::InvalidGoal(
                "constructive set must be empty for a destructive goal".into(),
            )),
            _ => Ok(()),
        }
    }
}

/// Per-agent or per-entry prices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CostModel {
    /// `rho(a)` for bribing agent `a`, indexed 0-based.
    AgentPrices(Vec<u64>),
    /// `rho((a, b))` for flipping `phi(a, b)`, row-major `n x n`.
    LinkPrices(Vec<u64>),
}

impl CostModel {
    pub fn unit_agent(n: usize) -> Self {
        CostModel::AgentPrices(vec![1; n])
    }

    pub fn unit_link(n: usize) -> Self {
        CostModel::LinkPrices(vec![1; n * n])
    }

    pub fn is_agent(&self) -> bool {
        matches!(self, CostModel::AgentPrices(_))
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let (prices, expected) = match self {
            CostModel::AgentPrices(p) => (p, n),
            CostModel::LinkPrices(p) => (p, n * n),
        };
        if prices.len() != expected {
            return Err(Error::CostModelMismatch(format!(
                "expected {expected} prices, found {}",
                prices.len()
            )));
        }
        match prices.iter().find(|&&p| p == 0 || p > MAX_PRICE) {
            Some(&p) => Err(Error::PriceOutOfRange(p)),
            None => Ok(()),
        }
    }

    pub fn prices(&self) -> &[u64] {
        match self {
            CostModel::AgentPrices(p) | CostModel::LinkPrices(p) => p,
        }
    }

    pub fn total(&self) -> u64 {
        self.prices().iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.prices().iter().all(|&p| p == 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BriberyInstance {
    pub profile: QualificationProfile,
    pub rule: SocialRule,
    pub goal: Goal,
    pub cost: CostModel,
    /// Budget `l`; `None` asks for the optimum.
    pub budget: Option<u64>,
}

impl BriberyInstance {
    pub fn new(
        profile: QualificationProfile,
        rule: SocialRule,
        goal: Goal,
        cost: CostModel,
        budget: Option<u64>,
    ) -> Result<Self> {
        let instance = BriberyInstance {
            profile,
            rule,
            goal,
            cost,
            budget,
        };
        instance.validate()?;
        Ok(instance)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.profile.n();
        self.rule.validate(n)?;
        self.goal.validate(n)?;
        self.cost.validate(n)
    }

    pub fn n(&self) -> usize {
        self.profile.n()
    }

    pub fn agent_price(&self, a: usize) -> u64 {
        match &self.cost {
            CostModel::AgentPrices(p) => p[a],
            CostModel::LinkPrices(_) => 1,
        }
    }

    pub fn link_price(&self, a: usize, b: usize) -> u64 {
        match &self.cost {
            CostModel::LinkPrices(p) => p[a * self.n() + b],
            CostModel::AgentPrices(_) => 1,
        }
    }

    pub fn with_goal(&self, goal: Goal) -> Self {
        BriberyInstance {
            goal,
            ..self.clone()
        }
    }

    pub fn with_budget(&self, budget: Option<u64>) -> Self {
        BriberyInstance {
            budget,
            ..self.clone()
        }
    }
}
