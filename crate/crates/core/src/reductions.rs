//! Bribery instances built from classic combinatorial problems.
//!
//! Input formats, one item per line, `#` comments:
//!
//! * set cover: `universe <u>`, then `set <k> <e1> ... <ek>` lines, then
//!   `k <K>`; an optional `rule lsr|csr` line picks the rule (default lsr).
//! * graphs: `vertices <n>`, `edge <u> <v>` lines, `k <K>`.
//! * exact cover by 3-sets: `universe <3m>`, then `set <a> <b> <c>` lines.
//!
//! Elements and vertices are numbered from 1.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::instance::{BriberyInstance, CostModel, Goal, SocialRule};
use crate::profile::{AgentId, AgentSet, QualificationProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    SetCover,
    IndependentSet,
    DominatingSet,
    X3c,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 4] = [
        ReductionKind::SetCover,
        ReductionKind::IndependentSet,
        ReductionKind::DominatingSet,
        ReductionKind::X3c,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::SetCover => "set-cover",
            ReductionKind::IndependentSet => "independent-set",
            ReductionKind::DominatingSet => "dominating-set",
            ReductionKind::X3c => "x3c",
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReductionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::MalformedInput(format!("unknown reduction `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInput {
    pub universe: usize,
    /// Sets of 1-based elements.
    pub sets: Vec<BTreeSet<usize>>,
    pub k: usize,
    pub rule: SocialRule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphInput {
    pub vertices: usize,
    /// Undirected edges `(u, v)` with `u < v`, 1-based.
    pub edges: BTreeSet<(usize, usize)>,
    pub k: usize,
}

impl GraphInput {
    fn neighbours(&self, v: usize) -> BTreeSet<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X3cInput {
    pub universe: usize,
    pub sets: Vec<[usize; 3]>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::MalformedInput(msg.into())
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, t)| !t.is_empty())
}

fn numbers(line: usize, toks: &[&str]) -> Result<Vec<usize>> {
    toks.iter()
        .map(|t| t.parse().map_err(|_| bad(format!("line {line}: expected a number, found `{t}`"))))
        .collect()
}

fn single(line: usize, toks: &[&str]) -> Result<usize> {
    match numbers(line, toks)?.as_slice() {
        [x] => Ok(*x),
        _ => Err(bad(format!("line {line}: expected one number"))),
    }
}

fn element(line: usize, e: usize, universe: usize) -> Result<usize> {
    if e == 0 || e > universe {
        return Err(bad(format!("line {line}: element {e} outside 1..={universe}")));
    }
    Ok(e)
}

impl SetCoverInput {
    pub fn parse(text: &str) -> Result<Self> {
        let (mut universe, mut k, mut rule) = (None, None, SocialRule::Lsr);
        let mut sets = Vec::new();
        for (line, toks) in tokens(text) {
            match toks[0] {
                "universe" => universe = Some(single(line, &toks[1..])?),
                "k" => k = Some(single(line, &toks[1..])?),
                "rule" => {
                    rule = match toks.get(1..) {
                        Some(["lsr"]) => SocialRule::Lsr,
                        Some(["csr"]) => SocialRule::Csr,
                        _ => return Err(bad(format!("line {line}: rule must be lsr or csr"))),
                    }
                }
                "set" => {
                    let u = universe.ok_or_else(|| bad(format!("line {line}: `universe` must come first")))?;
                    let nums = numbers(line, &toks[1..])?;
                    if nums.is_empty() || nums.len() != nums[0] + 1 {
                        return Err(bad(format!("line {line}: set size does not match its elements")));
                    }
                    let set = nums[1..]
                        .iter()
                        .map(|&e| element(line, e, u))
                        .collect::<Result<BTreeSet<usize>>>()?;
                    sets.push(set);
                }
                other => return Err(bad(format!("line {line}: unknown keyword `{other}`"))),
            }
        }
        let input = SetCoverInput {
            universe: universe.ok_or_else(|| bad("missing `universe`"))?,
            sets,
            k: k.ok_or_else(|| bad("missing `k`"))?,
            rule,
        };
        input.validate()?;
        Ok(input)
    }

    fn validate(&self) -> Result<()> {
        let covered: BTreeSet<usize> = self.sets.iter().flatten().copied().collect();
        if covered.len() != self.universe {
            return Err(bad("the sets do not cover the universe"));
        }
        if !self.rule.is_iterative() {
            return Err(bad("set cover reduction needs lsr or csr"));
        }
        Ok(())
    }
}

impl GraphInput {
    pub fn parse(text: &str) -> Result<Self> {
        let (mut vertices, mut k) = (None, None);
        let mut edges = BTreeSet::new();
        for (line, toks) in tokens(text) {
            match toks[0] {
                "vertices" => vertices = Some(single(line, &toks[1..])?),
                "k" => k = Some(single(line, &toks[1..])?),
                "edge" => {
                    let n = vertices.ok_or_else(|| bad(format!("line {line}: `vertices` must come first")))?;
                    let [u, v] = numbers(line, &toks[1..])?[..] else {
                        return Err(bad(format!("line {line}: an edge has two endpoints")));
                    };
                    let (u, v) = (element(line, u, n)?, element(line, v, n)?);
                    if u == v {
                        return Err(bad(format!("line {line}: self-loop at {u}")));
                    }
                    edges.insert((u.min(v), u.max(v)));
                }
                other => return Err(bad(format!("line {line}: unknown keyword `{other}`"))),
            }
        }
        let vertices = vertices.ok_or_else(|| bad("missing `vertices`"))?;
        if vertices == 0 {
            return Err(bad("the graph has no vertices"));
        }
        Ok(GraphInput {
            vertices,
            edges,
            k: k.ok_or_else(|| bad("missing `k`"))?,
        })
    }
}

impl X3cInput {
    pub fn parse(text: &str) -> Result<Self> {
        let mut universe = None;
        let mut sets = Vec::new();
        for (line, toks) in tokens(text) {
            match toks[0] {
                "universe" => universe = Some(single(line, &toks[1..])?),
                "set" => {
                    let u = universe.ok_or_else(|| bad(format!("line {line}: `universe` must come first")))?;
                    let [a, b, c] = numbers(line, &toks[1..])?[..] else {
                        return Err(bad(format!("line {line}: a set has three elements")));
                    };
                    let set = [element(line, a, u)?, element(line, b, u)?, element(line, c, u)?];
                    if a == b || b == c || a == c {
                        return Err(bad(format!("line {line}: repeated element")));
                    }
                    sets.push(set);
                }
                other => return Err(bad(format!("line {line}: unknown keyword `{other}`"))),
            }
        }
        let input = X3cInput {
            universe: universe.ok_or_else(|| bad("missing `universe`"))?,
            sets,
        };
        input.validate()?;
        Ok(input)
    }

    fn validate(&self) -> Result<()> {
        if self.universe == 0 || !self.universe.is_multiple_of(3) {
            return Err(bad(format!("universe size {} is not a positive multiple of 3", self.universe)));
        }
        for e in 1..=self.universe {
            let count = self.sets.iter().filter(|s| s.contains(&e)).count();
            if count != 3 {
                return Err(Error::NotRegular(format!("element {e} appears in {count} sets")));
            }
        }
        Ok(())
    }
}

fn profile(n: usize, qualifies: impl Fn(usize, usize) -> bool) -> Result<QualificationProfile> {
    let rows: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| qualifies(i, j)).collect()).collect();
    QualificationProfile::from_rows(&rows)
}

fn ids(range: impl Iterator<Item = usize>) -> AgentSet {
    range.map(AgentId::from_index).collect()
}

/// Constructive link bribery. Agents are the sets, then the elements, then
/// one extra agent that qualifies only itself; every set agent qualifies its
/// elements and the extra agent, every element agent the extra agent.
pub fn set_cover_instance(input: &SetCoverInput) -> Result<BriberyInstance> {
    input.validate()?;
    let m = input.sets.len();
    let u = input.universe;
    let star = m + u;
    let p = profile(star + 1, |i, j| {
        if i == star || j == star {
            return j == star;
        }
        i < m && j >= m && input.sets[i].contains(&(j - m + 1))
    })?;
    BriberyInstance::new(
        p,
        input.rule,
        Goal::constructive(ids(m..m + u)),
        CostModel::unit_link(star + 1),
        Some(input.k as u64),
    )
}

/// Constructive agent bribery under `Consent(k+2, 1)`. Agents are the
/// vertices, then per edge an edge agent and a dummy agent; the goal is every
/// edge and dummy agent.
pub fn independent_set_instance(input: &GraphInput) -> Result<BriberyInstance> {
    let nv = input.vertices;
    if input.edges.is_empty() {
        return Err(bad("the independent set reduction needs at least one edge"));
    }
    if input.k == 0 || input.k > nv {
        return Err(bad(format!("k = {} outside 1..={nv}", input.k)));
    }
    let edges: Vec<(usize, usize)> = input.edges.iter().copied().collect();
    let n = nv + 2 * edges.len();
    let edge_agent = |e: usize| nv + 2 * e;
    let p = profile(n, |i, j| {
        if i < nv {
            // Vertex agents qualify the edge agents of their edges.
            return (0..edges.len()).any(|e| j == edge_agent(e) && (edges[e].0 == i + 1 || edges[e].1 == i + 1));
        }
        if (i - nv).is_multiple_of(2) {
            j == i || j == i + 1
        } else {
            j == i
        }
    })?;
    let rule = SocialRule::Consent { s: input.k + 2, t: 1 };
    BriberyInstance::new(
        p,
        rule,
        Goal::constructive(ids(nv..n)),
        CostModel::unit_agent(n),
        Some(input.k as u64),
    )
}

/// Constructive agent bribery under `Consent(1, d+1)` for maximum degree `d`.
/// Agents are the vertices, then `d - deg(v)` dummies per vertex `v` in
/// vertex order; the goal is every vertex agent.
pub fn dominating_set_instance(input: &GraphInput) -> Result<BriberyInstance> {
    let nv = input.vertices;
    let nbrs: Vec<BTreeSet<usize>> = (1..=nv).map(|v| input.neighbours(v)).collect();
    let dmax = nbrs.iter().map(BTreeSet::len).max().unwrap_or(0);
    // Vertex each dummy belongs to.
    let owner: Vec<usize> = (0..nv).flat_map(|v| std::iter::repeat_n(v, dmax - nbrs[v].len())).collect();
    let n = nv + owner.len();
    let p = profile(n, |i, j| {
        if i < nv {
            j != i && !(j < nv && nbrs[i].contains(&(j + 1)))
        } else {
            j != owner[i - nv]
        }
    })?;
    BriberyInstance::new(
        p,
        SocialRule::Consent { s: 1, t: dmax + 1 },
        Goal::constructive(ids(0..nv)),
        CostModel::unit_agent(n),
        Some(input.k as u64),
    )
}

/// Constructive and destructive link bribery with budget `4m`, meant to be
/// solved with deletions only. Agents are the sets, then the elements, then
/// a hub qualified by everyone and two agents that must stay out.
pub fn x3c_instance(input: &X3cInput, rule: SocialRule) -> Result<BriberyInstance> {
    input.validate()?;
    if !rule.is_iterative() {
        return Err(bad("exact cover reduction needs lsr or csr"));
    }
    let ns = input.sets.len();
    let u = input.universe;
    let hub = ns + u;
    let (out1, out2) = (hub + 1, hub + 2);
    let p = profile(hub + 3, |i, j| {
        if j == hub {
            return true;
        }
        if i == hub {
            return j < ns;
        }
        i < ns && (j == out1 || j == out2 || (j >= ns && j < hub && input.sets[i].contains(&(j - ns + 1))))
    })?;
    let mut aplus = ids(ns..hub);
    aplus.insert(AgentId::from_index(hub));
    BriberyInstance::new(
        p,
        rule,
        Goal::const_dest(aplus, ids(out1..=out2))?,
        CostModel::unit_link(hub + 3),
        Some(4 * (u / 3) as u64),
    )
}

/// Parses `input` for `kind` and builds its instance. Set cover reads its
/// rule from the input; exact cover uses lsr.
pub fn build_reduction(kind: ReductionKind, input: &str) -> Result<BriberyInstance> {
    match kind {
        ReductionKind::SetCover => set_cover_instance(&SetCoverInput::parse(input)?),
        ReductionKind::IndependentSet => independent_set_instance(&GraphInput::parse(input)?),
        ReductionKind::DominatingSet => dominating_set_instance(&GraphInput::parse(input)?),
        ReductionKind::X3c => x3c_instance(&X3cInput::parse(input)?, SocialRule::Lsr),
    }
}
