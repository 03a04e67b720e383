#![allow(dead_code)]

use groupid::oracle::{oracle_agent, oracle_link};
use groupid::solvers::{solve, Algorithm, SolveOptions, Status};
use groupid::{
    check_solution, generate_random, BriberyInstance, CheckOutcome, CostKind, GenParams,
    GoalKind, SocialRule, SplitMix64,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    Lsr,
    Csr,
    Consent,
}

#[derive(Debug, Clone, Copy)]
pub struct Cell {
    pub rule: RuleKind,
    pub cost: CostKind,
    pub goal: GoalKind,
    pub algorithm: Algorithm,
}

/// Every (rule, cost model, goal) cell with a polynomial or FPT solver.
pub fn cells() -> Vec<Cell> {
    use Algorithm as A;
    use GoalKind as G;
    let mut out = Vec::new();
    for rule in [RuleKind::Lsr, RuleKind::Csr] {
        for goal in [G::Constructive, G::Destructive, G::ConstDest, G::Exact] {
            out.push(Cell { rule, cost: CostKind::Agent, goal, algorithm: A::IterAgent });
        }
        for (goal, algorithm) in [
            (G::Destructive, A::IterLinkDest),
            (G::Exact, A::IterLinkExact),
            (G::Constructive, A::IterLinkConst),
        ] {
            out.push(Cell { rule, cost: CostKind::Link, goal, algorithm });
        }
    }
    let consent = RuleKind::Consent;
    for goal in [G::Constructive, G::Destructive, G::ConstDest, G::Exact] {
        out.push(Cell { rule: consent, cost: CostKind::Link, goal, algorithm: A::ConsentLink });
    }
    for (goal, algorithm) in [
        (G::Constructive, A::ConsentAgentBranch),
        (G::Constructive, A::ConsentAgentCover),
        (G::Destructive, A::ConsentAgentDest),
        (G::ConstDest, A::ConsentAgentConstDest),
        (G::Exact, A::ConsentAgentConstDest),
    ] {
        out.push(Cell { rule: consent, cost: CostKind::Agent, goal, algorithm });
    }
    out
}

pub const DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// The `index`-th random instance of a cell: n in 3..=6, prices in 1..=4.
pub fn sample(cell: &Cell, index: u64) -> BriberyInstance {
    let mut rng = SplitMix64::new(index.wrapping_mul(0x2545_F491_4F6C_DD1D) ^ cell_tag(cell));
    let n = 3 + rng.below(4);
    let rule = match cell.rule {
        RuleKind::Lsr => SocialRule::Lsr,
        RuleKind::Csr => SocialRule::Csr,
        RuleKind::Consent => {
            let s = 1 + rng.below(n + 1);
            let t = 1 + rng.below(n + 2 - s);
            SocialRule::Consent { s, t }
        }
    };
    let mut params = GenParams::new(n, rule, cell.cost);
    params.density = DENSITIES[(index % 3) as usize];
    params.price_range = (1, 4);
    let (mut plus, mut minus) = (1 + rng.below(3.min(n)), 1 + rng.below(2.min(n)));
    match cell.goal {
        GoalKind::Constructive => minus = 0,
        GoalKind::Destructive => plus = 0,
        GoalKind::ConstDest => plus = plus.min(n - minus),
        GoalKind::Exact => {
            plus = rng.below(n + 1);
            params.exact = true;
        }
    }
    params.plus = plus;
    params.minus = minus;
    generate_random(&params, rng.next_u64()).unwrap()
}

fn cell_tag(cell: &Cell) -> u64 {
    let name = format!("{:?}{:?}{:?}{}", cell.rule, cell.cost, cell.goal, cell.algorithm);
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

pub fn oracle_cost(instance: &BriberyInstance) -> Option<u64> {
    if instance.cost.is_agent() {
        oracle_agent(instance, 8).unwrap().map(|(c, _)| c)
    } else {
        oracle_link(instance, 8).unwrap().map(|(c, _)| c)
    }
}

/// Solver cost, with the witness checked against the instance.
pub fn solver_cost(instance: &BriberyInstance, algorithm: Algorithm) -> Result<Option<u64>, String> {
    let options = SolveOptions { algorithm, parallel: false };
    let r = solve(instance, options);
    match r.status {
        Status::Optimal | Status::BudgetExceeded => {
            let w = r.witness.as_ref().ok_or("missing witness")?;
            let check = check_solution(&instance.with_budget(None), w).map_err(|e| e.to_string())?;
            if check != CheckOutcome::Ok {
                return Err(format!("witness fails check: {check:?}"));
            }
            Ok(r.cost)
        }
        Status::Infeasible => Ok(None),
        Status::Unsupported => Err("unsupported".into()),
    }
}

/// First disagreement between the solver and the oracle over `count`
/// instances of the cell.
pub fn first_mismatch(cell: &Cell, count: u64) -> Option<String> {
    (0..count).find_map(|i| {
        let inst = sample(cell, i);
        let want = oracle_cost(&inst);
        match solver_cost(&inst, cell.algorithm) {
            Ok(got) if got == want => None,
            got => Some(format!(
                "{cell:?} #{i}: solver {got:?}, oracle {want:?}\n{inst:?}"
            )),
        }
    })
}

/// Consent rule straight from its definition.
pub fn naive_consent(p: &groupid::QualificationProfile, s: usize, t: usize) -> groupid::AgentSet {
    let n = p.n();
    (0..n)
        .filter(|&a| {
            let plus = (0..n).filter(|&b| p.get(b, a)).count();
            if p.get(a, a) {
                plus >= s
            } else {
                n - plus < t
            }
        })
        .map(groupid::AgentId::from_index)
        .collect()
}

pub mod brute;
pub mod graphs;
