//! Seeded random instances.
//!
//! The generator is SplitMix64: the state advances by `0x9E3779B97F4A7C15`
//! and each output is the state mixed by
//! `z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9`,
//! `z = (z ^ (z >> 27)) * 0x94D049BB133111EB`, `z ^ (z >> 31)`.
//! Draws happen in this order: profile entries row by row, then prices,
//! then a Fisher-Yates shuffle that picks the goal agents.

use crate::error::{Error, Result};
use crate::instance::{BriberyInstance, CostModel, Goal, SocialRule, MAX_PRICE};
use crate::profile::{AgentId, AgentSet, QualificationProfile, MAX_AGENTS};

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `lo..=hi` (modulo reduction).
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.next_u64() % (hi - lo + 1)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostKind {
    Agent,
    Link,
}

#[derive(Debug, Clone)]
pub struct GenParams {
    pub n: usize,
    pub rule: SocialRule,
    pub cost: CostKind,
    /// Probability of each entry being +1.
    pub density: f64,
    /// Number of agents in A+.
    pub plus: usize,
    /// Number of agents in A-; ignored for exact goals.
    pub minus: usize,
    pub exact: bool,
    pub budget: Option<u64>,
    pub price_range: (u64, u64),
}

impl GenParams {
    pub fn new(n: usize, rule: SocialRule, cost: CostKind) -> Self {
        GenParams {
            n,
            rule,
            cost,
            density: 0.5,
            plus: 0,
            minus: 0,
            exact: false,
            budget: None,
            price_range: (1, 1),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Validation(m));
        if self.n == 0 || self.n > MAX_AGENTS {
            return bad(format!("agent count {} outside 1..={MAX_AGENTS}", self.n));
        }
        if !(0.0..=1.0).contains(&self.density) {
            return bad(format!("density {} outside [0, 1]", self.density));
        }
        if self.plus + if self.exact { 0 } else { self.minus } > self.n {
            return bad("goal sets need more agents than exist".into());
        }
        let (lo, hi) = self.price_range;
        if lo == 0 || lo > hi || hi > MAX_PRICE {
            return bad(format!("price range {lo}:{hi} outside 1..={MAX_PRICE}"));
        }
        self.rule.validate(self.n)?;
        Ok(())
    }
}

/// A random instance; the same parameters and seed give the same instance.
pub fn generate_random(params: &GenParams, seed: u64) -> Result<BriberyInstance> {
    params.validate()?;
    let n = params.n;
    let mut rng = SplitMix64::new(seed);
    let rows: Vec<Vec<bool>> = (0..n)
        .map(|_| (0..n).map(|_| rng.next_f64() < params.density).collect())
        .collect();
    let profile = QualificationProfile::from_rows(&rows)?;
    let (lo, hi) = params.price_range;
    let count = match params.cost {
        CostKind::Agent => n,
        CostKind::Link => n * n,
    };
    let prices: Vec<u64> = (0..count).map(|_| rng.range(lo, hi)).collect();
    let cost = match params.cost {
        CostKind::Agent => CostModel::AgentPrices(prices),
        CostKind::Link => CostModel::LinkPrices(prices),
    };
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i + 1);
        order.swap(i, j);
    }
    let pick = |from: usize, k: usize| -> AgentSet {
        order[from..from + k].iter().map(|&i| AgentId::from_index(i)).collect()
    };
    let aplus = pick(0, params.plus);
    let goal = if params.exact {
        Goal::exact(aplus)
    } else {
        let aminus = pick(params.plus, params.minus);
        match (aplus.is_empty(), aminus.is_empty()) {
            (_, true) => Goal::constructive(aplus),
            (true, false) => Goal::destructive(aminus),
            (false, false) => Goal::const_dest(aplus, aminus)?,
        }
    };
    BriberyInstance::new(profile, params.rule, goal, cost, params.budget)
}
