//! Text formats: instance files and solution reports.
//!
//! Instance files are line oriented; `#` starts a comment.
//!
//! ```text
//! agents 5
//! rule consent 3 3
//! cost agent
//! goal constructive 1 4
//! budget 2
//! profile
//! 11000
//! 10000
//! 11000
//! 10010
//! 11110
//! agentprices 1 1 1 1 1
//! ```
//!
//! `goal destructive` may accompany `goal constructive`; `goal exact` stands
//! alone. Link prices follow a `linkprices` line as `n` rows of `n` numbers.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::flips::{apply_flips, Flip, FlipSet};
use crate::instance::{BriberyInstance, CostModel, Goal, SocialRule};
use crate::profile::{AgentId, AgentSet, QualificationProfile, MAX_AGENTS};
use crate::rules::evaluate;
use crate::solvers::{SolveResult, Status};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

struct Lines<'a> {
    inner: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let inner = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect()))
            .filter(|(_, toks): &(usize, Vec<&str>)| !toks.is_empty())
            .collect();
        Lines { inner, pos: 0 }
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let item = self.inner.get(self.pos).cloned();
        self.pos += 1;
        item
    }

    fn last_line(&self) -> usize {
        self.inner.last().map_or(1, |(l, _)| *l)
    }
}

fn number<T: std::str::FromStr>(line: usize, tok: Option<&&str>, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found `{tok}`")))
}

fn no_more(line: usize, toks: &[&str], used: usize) -> Result<()> {
    match toks.get(used) {
        Some(extra) => Err(parse_err(line, format!("unexpected token `{extra}`"))),
        None => Ok(()),
    }
}

/// `<k> <i1> ... <ik>` with 1-based agent numbers.
fn agent_list(line: usize, toks: &[&str], n: usize) -> Result<AgentSet> {
    let k: usize = number(line, toks.first(), "set size")?;
    if toks.len() != k + 1 {
        return Err(parse_err(line, format!("expected {k} agents, found {}", toks.len() - 1)));
    }
    let mut set = AgentSet::new();
    for tok in &toks[1..] {
        let a: usize = number(line, Some(tok), "agent number")?;
        let id = AgentId::from_number(a).ok_or(Error::AgentOutOfRange { index: a, n })?;
        if !set.insert(id.check(n)?) {
            return Err(parse_err(line, format!("agent {a} listed twice")));
        }
    }
    Ok(set)
}

#[derive(Default)]
struct Fields {
    n: Option<usize>,
    rule: Option<SocialRule>,
    agent_cost: Option<bool>,
    constructive: Option<AgentSet>,
    destructive: Option<AgentSet>,
    exact: Option<AgentSet>,
    budget: Option<u64>,
    profile: Option<QualificationProfile>,
    agent_prices: Option<Vec<u64>>,
    link_prices: Option<Vec<u64>>,
}

fn set_once<T>(slot: &mut Option<T>, value: T, line: usize, key: &str) -> Result<()> {
    if slot.is_some() {
        return Err(parse_err(line, format!("duplicate `{key}`")));
    }
    *slot = Some(value);
    Ok(())
}

/// Parses and validates an instance file.
pub fn parse_instance(text: &str) -> Result<BriberyInstance> {
    let mut lines = Lines::new(text);
    let mut f = Fields::default();
    while let Some((line, toks)) = lines.next() {
        let key = toks[0];
        if key != "agents" && f.n.is_none() {
            return Err(parse_err(line, "`agents` must come first"));
        }
        let n = f.n.unwrap_or(0);
        match key {
            "agents" => {
                let n: usize = number(line, toks.get(1), "agent count")?;
                no_more(line, &toks, 2)?;
                if n == 0 || n > MAX_AGENTS {
                    return Err(Error::Validation(format!("agent count {n} outside 1..={MAX_AGENTS}")));
                }
                set_once(&mut f.n, n, line, key)?;
            }
            "rule" => {
                let rule = match toks.get(1).copied() {
                    Some("lsr") => {
                        no_more(line, &toks, 2)?;
                        SocialRule::Lsr
                    }
                    Some("csr") => {
                        no_more(line, &toks, 2)?;
                        SocialRule::Csr
                    }
                    Some("consent") => {
                        no_more(line, &toks, 4)?;
                        SocialRule::Consent {
                            s: number(line, toks.get(2), "s")?,
                            t: number(line, toks.get(3), "t")?,
                        }
                    }
                    other => return Err(parse_err(line, format!("unknown rule {other:?}"))),
                };
                set_once(&mut f.rule, rule, line, key)?;
            }
            "cost" => {
                let agent = match toks.get(1).copied() {
                    Some("agent") => true,
                    Some("link") => false,
                    other => return Err(parse_err(line, format!("unknown cost model {other:?}"))),
                };
                no_more(line, &toks, 2)?;
                set_once(&mut f.agent_cost, agent, line, key)?;
            }
            "goal" => {
                let set = agent_list(line, &toks[2.min(toks.len())..], n)?;
                let slot = match toks.get(1).copied() {
                    Some("constructive") => &mut f.constructive,
                    Some("destructive") => &mut f.destructive,
                    Some("exact") => &mut f.exact,
                    other => return Err(parse_err(line, format!("unknown goal {other:?}"))),
                };
                set_once(slot, set, line, &toks[..2].join(" "))?;
            }
            "budget" => {
                no_more(line, &toks, 2)?;
                set_once(&mut f.budget, number(line, toks.get(1), "budget")?, line, key)?;
            }
            "profile" => {
                no_more(line, &toks, 1)?;
                let mut rows = Vec::with_capacity(n);
                for _ in 0..n {
                    let (l, row) = lines
                        .next()
                        .ok_or_else(|| parse_err(lines.last_line(), "profile has too few rows"))?;
                    if row.len() != 1 || row[0].len() != n || !row[0].bytes().all(|c| c == b'0' || c == b'1') {
                        return Err(parse_err(l, format!("expected a row of {n} characters 0/1")));
                    }
                    rows.push(row[0].bytes().map(|c| c == b'1').collect::<Vec<bool>>());
                }
                set_once(&mut f.profile, QualificationProfile::from_rows(&rows)?, line, key)?;
            }
            "agentprices" => {
                if toks.len() != n + 1 {
                    return Err(parse_err(line, format!("expected {n} agent prices")));
                }
                let p = toks[1..]
                    .iter()
                    .map(|t| number(line, Some(t), "price"))
                    .collect::<Result<Vec<u64>>>()?;
                set_once(&mut f.agent_prices, p, line, key)?;
            }
            "linkprices" => {
                no_more(line, &toks, 1)?;
                let mut p = Vec::with_capacity(n * n);
                for _ in 0..n {
                    let (l, row) = lines
                        .next()
                        .ok_or_else(|| parse_err(lines.last_line(), "link prices have too few rows"))?;
                    if row.len() != n {
                        return Err(parse_err(l, format!("expected {n} link prices")));
                    }
                    for t in &row {
                        p.push(number(l, Some(t), "price")?);
                    }
                }
                set_once(&mut f.link_prices, p, line, key)?;
            }
            other => return Err(parse_err(line, format!("unknown keyword `{other}`"))),
        }
    }
    let end = lines.last_line();
    let n = f.n.ok_or_else(|| parse_err(end, "missing `agents`"))?;
    let rule = f.rule.ok_or_else(|| parse_err(end, "missing `rule`"))?;
    let agent_cost = f.agent_cost.ok_or_else(|| parse_err(end, "missing `cost`"))?;
    let profile = f.profile.ok_or_else(|| parse_err(end, "missing `profile`"))?;
    let goal = match (f.constructive, f.destructive, f.exact) {
        (None, None, Some(x)) => Goal::exact(x),
        (_, _, Some(_)) => {
            return Err(Error::Validation("an exact goal cannot be combined with another goal".into()))
        }
        (Some(p), None, None) => Goal::constructive(p),
        (None, Some(m), None) => Goal::destructive(m),
        (Some(p), Some(m), None) => Goal::const_dest(p, m)?,
        (None, None, None) => Goal::constructive(AgentSet::new()),
    };
    let cost = match (agent_cost, f.agent_prices, f.link_prices) {
        (true, p, None) => CostModel::AgentPrices(p.unwrap_or_else(|| vec![1; n])),
        (false, None, p) => CostModel::LinkPrices(p.unwrap_or_else(|| vec![1; n * n])),
        (true, _, Some(_)) => {
            return Err(Error::CostModelMismatch("link prices given for agent bribery".into()))
        }
        (false, Some(_), _) => {
            return Err(Error::CostModelMismatch("agent prices given for link bribery".into()))
        }
    };
    BriberyInstance::new(profile, rule, goal, cost, f.budget)
}

fn write_set(out: &mut String, set: &AgentSet) {
    write!(out, "{}", set.len()).unwrap();
    for a in set {
        write!(out, " {a}").unwrap();
    }
}

/// Writes an instance in the format read by [`parse_instance`].
pub fn serialize_instance(instance: &BriberyInstance) -> String {
    use crate::instance::GoalKind;
    let n = instance.n();
    let mut out = String::new();
    writeln!(out, "agents {n}").unwrap();
    writeln!(out, "rule {}", instance.rule).unwrap();
    let agent = instance.cost.is_agent();
    writeln!(out, "cost {}", if agent { "agent" } else { "link" }).unwrap();
    let goal = &instance.goal;
    let mut goal_line = |name: &str, set: &AgentSet| {
        write!(out, "goal {name} ").unwrap();
        write_set(&mut out, set);
        out.push('\n');
    };
    match goal.kind() {
        GoalKind::Constructive => goal_line("constructive", goal.aplus()),
        GoalKind::Destructive => goal_line("destructive", goal.aminus()),
        GoalKind::ConstDest => {
            goal_line("constructive", goal.aplus());
            goal_line("destructive", goal.aminus());
        }
        GoalKind::Exact => goal_line("exact", goal.aplus()),
    }
    if let Some(l) = instance.budget {
        writeln!(out, "budget {l}").unwrap();
    }
    out.push_str("profile\n");
    for row in instance.profile.to_strings() {
        out.push_str(&row);
        out.push('\n');
    }
    let prices = instance.cost.prices();
    if agent {
        out.push_str("agentprices");
        for p in prices {
            write!(out, " {p}").unwrap();
        }
        out.push('\n');
    } else {
        out.push_str("linkprices\n");
        for row in prices.chunks(n) {
            let row: Vec<String> = row.iter().map(u64::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

/// The solution report. Unsupported and infeasible results print only the
/// status line; otherwise the flips and the qualified set after applying
/// them follow.
pub fn render_solution(instance: &BriberyInstance, result: &SolveResult) -> String {
    let mut out = format!("status {}\n", result.status);
    let (Some(cost), Some(witness)) = (result.cost, &result.witness) else {
        return out;
    };
    writeln!(out, "cost {cost}").unwrap();
    writeln!(out, "flips {}", witness.len()).unwrap();
    for f in witness.iter() {
        writeln!(out, "{f}").unwrap();
    }
    let qualified = apply_flips(&instance.profile, witness)
        .and_then(|p| evaluate(&p, instance.rule))
        .unwrap_or_default();
    out.push_str("qualified ");
    write_set(&mut out, &qualified);
    out.push('\n');
    out
}

/// A parsed solution report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub status: Status,
    pub cost: Option<u64>,
    pub flips: Option<FlipSet>,
    pub qualified: Option<AgentSet>,
}

/// Reads a report written by [`render_solution`].
pub fn parse_report(text: &str) -> Result<Report> {
    let mut lines = Lines::new(text);
    let (line, toks) = lines.next().ok_or_else(|| parse_err(1, "empty report"))?;
    if toks[0] != "status" {
        return Err(parse_err(line, "expected `status`"));
    }
    no_more(line, &toks, 2)?;
    let status = match toks.get(1).copied() {
        Some("OPTIMAL") => Status::Optimal,
        Some("INFEASIBLE") => Status::Infeasible,
        Some("BUDGET_EXCEEDED") => Status::BudgetExceeded,
        Some("UNSUPPORTED") => Status::Unsupported,
        other => return Err(parse_err(line, format!("unknown status {other:?}"))),
    };
    let mut report = Report {
        status,
        cost: None,
        flips: None,
        qualified: None,
    };
    let Some((line, toks)) = lines.next() else {
        return Ok(report);
    };
    if toks[0] != "cost" {
        return Err(parse_err(line, "expected `cost`"));
    }
    no_more(line, &toks, 2)?;
    report.cost = Some(number(line, toks.get(1), "cost")?);
    let (line, toks) = lines.next().ok_or_else(|| parse_err(line, "missing `flips`"))?;
    if toks[0] != "flips" {
        return Err(parse_err(line, "expected `flips`"));
    }
    no_more(line, &toks, 2)?;
    let m: usize = number(line, toks.get(1), "flip count")?;
    let mut flips = FlipSet::new();
    for _ in 0..m {
        let (l, t) = lines.next().ok_or_else(|| parse_err(line, "too few flip lines"))?;
        no_more(l, &t, 3)?;
        let agent = |tok: Option<&&str>| -> Result<AgentId> {
            let k: usize = number(l, tok, "agent number")?;
            AgentId::from_number(k).ok_or_else(|| parse_err(l, "agent numbers start at 1"))
        };
        let value = match t.get(2).copied() {
            Some("+") => true,
            Some("-") => false,
            other => return Err(parse_err(l, format!("expected + or -, found {other:?}"))),
        };
        flips.insert(Flip::new(agent(t.first())?, agent(t.get(1))?, value));
    }
    if flips.len() != m {
        return Err(parse_err(line, "a flipped pair is listed twice"));
    }
    report.flips = Some(flips);
    if let Some((line, toks)) = lines.next() {
        if toks[0] != "qualified" {
            return Err(parse_err(line, "expected `qualified`"));
        }
        let set: Result<AgentSet> = toks[1..]
            .iter()
            .skip(1)
            .map(|t| {
                let k: usize = number(line, Some(t), "agent number")?;
                AgentId::from_number(k).ok_or_else(|| parse_err(line, "agent numbers start at 1"))
            })
            .collect();
        let k: usize = number(line, toks.get(1), "set size")?;
        let set = set?;
        if set.len() != k || toks.len() != k + 2 {
            return Err(parse_err(line, format!("expected {k} qualified agents")));
        }
        report.qualified = Some(set);
        if let Some((line, _)) = lines.next() {
            return Err(parse_err(line, "trailing content"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_random, CostKind, GenParams};
    use crate::profile::agents;
    use proptest::prelude::*;

    const EXAMPLE: &str = "\
# five agents
agents 5
rule consent 3 3
cost agent
goal constructive 1 4   # a4 must qualify
profile
11000
10000
11000
10010
11110
";

    #[test]
    fn parses_example() {
        let inst = parse_instance(EXAMPLE).unwrap();
        assert_eq!(inst.n(), 5);
        assert_eq!(inst.rule, SocialRule::Consent { s: 3, t: 3 });
        assert_eq!(inst.goal, Goal::constructive(agents(&[4])));
        assert_eq!(inst.cost, CostModel::unit_agent(5));
        assert_eq!(inst.budget, None);
        assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);
    }

    fn line_of(text: &str) -> Option<usize> {
        match parse_instance(text) {
            Err(Error::Parse { line, .. }) => Some(line),
            _ => None,
        }
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert!(line_of(&EXAMPLE.replace("profile\n11000\n10000\n11000\n10010\n11110\n", "")).is_some());
        assert_eq!(line_of(&EXAMPLE.replace("10010", "1002")), Some(10));
        assert_eq!(line_of(&EXAMPLE.replace("cost agent", "cost free")), Some(4));
        assert_eq!(line_of(&EXAMPLE.replace("goal constructive 1 4", "goal constructive 2 4")), Some(5));
        assert_eq!(line_of("rule lsr\n"), Some(1));
    }

    #[test]
    fn validation_errors() {
        let bad_rule = EXAMPLE.replace("consent 3 3", "consent 4 4");
        assert!(matches!(parse_instance(&bad_rule), Err(Error::InvalidRuleParameters { .. })));
        let out_of_range = EXAMPLE.replace("constructive 1 4", "constructive 1 6");
        assert!(matches!(parse_instance(&out_of_range), Err(Error::AgentOutOfRange { .. })));
        let overlap = format!("{EXAMPLE}goal destructive 1 4\n");
        assert!(matches!(parse_instance(&overlap), Err(Error::InvalidGoal(_))));
        let mixed = format!("{EXAMPLE}goal exact 1 1\n");
        assert!(matches!(parse_instance(&mixed), Err(Error::Validation(_))));
        let prices = format!("{EXAMPLE}linkprices\n1 1 1 1 1\n1 1 1 1 1\n1 1 1 1 1\n1 1 1 1 1\n1 1 1 1 1\n");
        assert!(matches!(parse_instance(&prices), Err(Error::CostModelMismatch(_))));
    }

    #[test]
    fn report_round_trip() {
        let inst = parse_instance(EXAMPLE).unwrap();
        let result = crate::solvers::dispatch(&inst);
        let text = render_solution(&inst, &result);
        assert_eq!(text, "status OPTIMAL\ncost 1\nflips 1\n1 4 +\nqualified 3 1 2 4\n");
        let report = parse_report(&text).unwrap();
        assert_eq!(report.cost, Some(1));
        assert_eq!(report.flips, result.witness);
        assert_eq!(report.qualified, Some(agents(&[1, 2, 4])));
    }

    #[test]
    fn short_reports() {
        assert_eq!(render_solution(&parse_instance(EXAMPLE).unwrap(), &SolveResult::unsupported()), "status UNSUPPORTED\n");
        let r = parse_report("status INFEASIBLE\n").unwrap();
        assert_eq!((r.status, r.cost, r.flips), (Status::Infeasible, None, None));
        assert!(parse_report("status DONE\n").is_err());
        assert!(parse_report("status OPTIMAL\ncost 1\nflips 2\n1 2 +\n").is_err());
    }

    proptest! {
        #[test]
        fn serialize_round_trip(
            n in 1usize..8,
            seed in any::<u64>(),
            rule in 0usize..3,
            link in any::<bool>(),
            exact in any::<bool>(),
            sizes in (0usize..8, 0usize..8),
            budget in proptest::option::of(0u64..50),
        ) {
            let rule = match rule {
                0 => SocialRule::Lsr,
                1 => SocialRule::Csr,
                _ => SocialRule::Consent { s: 1 + seed as usize % (n + 1), t: 1 },
            };
            let cost = if link { CostKind::Link } else { CostKind::Agent };
            let mut params = GenParams::new(n, rule, cost);
            params.plus = sizes.0 % (n + 1);
            params.minus = sizes.1 % (n + 1 - params.plus);
            params.exact = exact;
            params.budget = budget;
            params.price_range = (1, 9);
            let inst = generate_random(&params, seed).unwrap();
            prop_assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);
        }
    }
}
