//! Link bribery under LSR and CSR.

use super::{best_of, finish, wrong_cell, SolveResult};
use crate::error::{Error, Result};
use crate::flips::{apply_flips, FlipSet};
use crate::graph::{
    directed_steiner_tree, max_flow_min_cut, min_spanning_arborescence, WeightedDigraph,
    MAX_TERMINALS,
};
use crate::instance::{BriberyInstance, GoalKind, SocialRule};
use crate::profile::QualificationProfile;
use crate::rules::closure_mask;

/// Destructive link bribery by minimum cuts.
pub fn solve_iter_link_dest(instance: &BriberyInstance) -> Result<SolveResult> {
    finish(instance, dest(instance, true))
}

/// Exact link bribery by minimum spanning arborescences.
pub fn solve_iter_link_exact(instance: &BriberyInstance) -> Result<SolveResult> {
    finish(instance, exact(instance, true))
}

/// Constructive link bribery by directed Steiner trees; at most 20 targets.
pub fn solve_iter_link_const(instance: &BriberyInstance) -> Result<SolveResult> {
    finish(instance, constructive(instance, true))
}

fn check_cell(instance: &BriberyInstance, kind: GoalKind) -> Result<()> {
    if instance.cost.is_agent() {
        return Err(wrong_cell("link bribery needs link prices"));
    }
    if !instance.rule.is_iterative() {
        return Err(wrong_cell("rule must be LSR or CSR"));
    }
    if instance.goal.kind() != kind {
        return Err(wrong_cell("goal kind does not match the solver"));
    }
    Ok(())
}

fn price(inst: &BriberyInstance, a: usize, b: usize) -> u64 {
    inst.link_price(a, b)
}

/// Cheapest agent that could disqualify `a`: `(price, briber)`.
fn cheapest_detractor(inst: &BriberyInstance, a: usize) -> (u64, usize) {
    (0..inst.n()).map(|b| (price(inst, b, a), b)).min().unwrap()
}

/// Flips making every agent qualify `a`.
fn fill_column(p: &QualificationProfile, a: usize) -> FlipSet {
    let mut flips = FlipSet::new();
    for b in (0..p.n()).filter(|&b| !p.get(b, a)) {
        flips.set(b, a, true);
    }
    flips
}

pub(crate) fn dest(inst: &BriberyInstance, parallel: bool) -> Result<Option<FlipSet>> {
    check_cell(inst, GoalKind::Destructive)?;
    let (p, n) = (&inst.profile, inst.n());
    let minus = inst.goal.masks(n).1;
    if !minus.contains(&true) {
        return Ok(Some(FlipSet::new()));
    }
    let inf = inst.cost.total() + 1;
    let (sigma, tau) = (n, n + 1);
    let mut g = WeightedDigraph::new(n + 2);
    for a in 0..n {
        for b in (0..n).filter(|&b| b != a && p.get(a, b)) {
            g.add_arc(a, b, price(inst, a, b));
        }
        if minus[a] {
            g.add_arc(a, tau, inf);
        }
    }
    let cut_flips = |g: &WeightedDigraph| {
        let (_, cut) = max_flow_min_cut(g, sigma, tau);
        let mut flips = FlipSet::new();
        for (u, v) in cut {
            if u == sigma {
                flips.set(v, v, false);
            } else {
                debug_assert!(v != tau, "arcs into the sink are never cut");
                flips.set(u, v, false);
            }
        }
        flips
    };
    match inst.rule {
        SocialRule::Lsr => {
            for a in (0..n).filter(|&a| p.get(a, a)) {
                g.add_arc(sigma, a, price(inst, a, a));
            }
            Ok(Some(cut_flips(&g)))
        }
        _ => {
            let unanimous = p.unanimous_mask();
            let seeds: Vec<usize> = (0..n).filter(|&a| unanimous[a]).collect();
            if seeds.is_empty() {
                return Ok(Some(FlipSet::new()));
            }
            // Either no seed survives, or one surviving seed reaches the rest.
            let mut no_seed = FlipSet::new();
            for &a in &seeds {
                no_seed.set(cheapest_detractor(inst, a).1, a, false);
            }
            let mut options = vec![None];
            options.extend(seeds.iter().filter(|&&a| !minus[a]).map(|&a| Some(a)));
            best_of(inst, &options, parallel, |&option| {
                Ok(Some(match option {
                    None => no_seed.clone(),
                    Some(a) => {
                        let mut g = g.clone();
                        g.add_arc(sigma, a, inf);
                        cut_flips(&g)
                    }
                }))
            })
        }
    }
}

pub(crate) fn exact(inst: &BriberyInstance, parallel: bool) -> Result<Option<FlipSet>> {
    check_cell(inst, GoalKind::Exact)?;
    let (p, n) = (&inst.profile, inst.n());
    let (plus, minus) = inst.goal.masks(n);

    let mut forced = FlipSet::new();
    for a in (0..n).filter(|&a| plus[a]) {
        for b in (0..n).filter(|&b| minus[b] && p.get(a, b)) {
            forced.set(a, b, false);
        }
    }
    match inst.rule {
        SocialRule::Lsr => {
            for a in (0..n).filter(|&a| minus[a] && p.get(a, a)) {
                forced.set(a, a, false);
            }
            let p1 = apply_flips(p, &forced)?;
            let seeds: Vec<bool> = (0..n).map(|a| plus[a] && p1.get(a, a)).collect();
            let mut flips = connect(inst, &p1, &plus, &seeds, true)?;
            flips.extend(forced);
            Ok(Some(flips))
        }
        _ if !plus.contains(&true) => {
            let mut flips = FlipSet::new();
            let unanimous = p.unanimous_mask();
            for a in (0..n).filter(|&a| unanimous[a]) {
                flips.set(cheapest_detractor(inst, a).1, a, false);
            }
            Ok(Some(flips))
        }
        _ => {
            let p1 = apply_flips(p, &forced)?;
            let seeds = p1.unanimous_mask();
            let finish_with = |p2: &QualificationProfile, extra: FlipSet| -> Result<Option<FlipSet>> {
                let mut flips = connect(inst, p2, &plus, &p2.unanimous_mask(), false)?;
                flips.extend(extra);
                flips.extend(forced.clone());
                Ok(Some(flips))
            };
            if seeds.contains(&true) {
                return finish_with(&p1, FlipSet::new());
            }
            // No seed is left: create one inside A+.
            let guesses: Vec<usize> = (0..n).filter(|&a| plus[a]).collect();
            best_of(inst, &guesses, parallel, |&a| {
                let column = fill_column(&p1, a);
                let p2 = apply_flips(&p1, &column)?;
                finish_with(&p2, column)
            })
        }
    }
}

/// Cheapest additions making every agent of `plus` reachable from `seeds`,
/// which lie inside `plus` in a profile with no arcs from `plus` elsewhere.
/// With `self_loops`, an agent may also become a seed by qualifying itself.
fn connect(
    inst: &BriberyInstance,
    p: &QualificationProfile,
    plus: &[bool],
    seeds: &[bool],
    self_loops: bool,
) -> Result<FlipSet> {
    let n = p.n();
    let reached = closure_mask(p, seeds);
    let rest: Vec<usize> = (0..n).filter(|&a| plus[a] && !reached[a]).collect();
    if rest.is_empty() {
        return Ok(FlipSet::new());
    }
    // Vertex 0 is the merged reached set, vertex i+1 is rest[i].
    let mut g = WeightedDigraph::new(rest.len() + 1);
    let mut entry = Vec::with_capacity(rest.len());
    for (i, &b) in rest.iter().enumerate() {
        let from_root = (0..n)
            .filter(|&a| reached[a])
            .map(|a| (price(inst, a, b), a))
            .chain(self_loops.then(|| (price(inst, b, b), b)))
            .min();
        if let Some((w, _)) = from_root {
            g.add_arc(0, i + 1, w);
        }
        entry.push(from_root.map(|(_, a)| a));
        for (j, &c) in rest.iter().enumerate() {
            if i != j {
                let w = if p.get(b, c) { 0 } else { price(inst, b, c) };
                g.add_arc(i + 1, j + 1, w);
            }
        }
    }
    let (_, arcs) = min_spanning_arborescence(&g, 0).map_err(|_| Error::Infeasible)?;
    let mut flips = FlipSet::new();
    for (u, v) in arcs {
        let b = rest[v - 1];
        if u == 0 {
            flips.set(entry[v - 1].unwrap(), b, true);
        } else if !p.get(rest[u - 1], b) {
            flips.set(rest[u - 1], b, true);
        }
    }
    Ok(flips)
}

pub(crate) fn constructive(inst: &BriberyInstance, parallel: bool) -> Result<Option<FlipSet>> {
    check_cell(inst, GoalKind::Constructive)?;
    let (p, n) = (&inst.profile, inst.n());
    let plus = inst.goal.masks(n).0;
    let terminals: Vec<usize> = (0..n).filter(|&a| plus[a]).collect();
    if terminals.len() > MAX_TERMINALS {
        return Err(Error::TooManyTerminals(terminals.len()));
    }
    if terminals.is_empty() {
        return Ok(Some(FlipSet::new()));
    }
    match inst.rule {
        SocialRule::Lsr => {
            let root_arcs: Vec<u64> = (0..n)
                .map(|a| if p.get(a, a) { 0 } else { price(inst, a, a) })
                .collect();
            steiner(inst, p, &root_arcs, &terminals).map(Some)
        }
        _ => {
            // Guess one agent to be qualified by everyone; existing seeds stay.
            let guesses: Vec<usize> = (0..n).collect();
            best_of(inst, &guesses, parallel, |&a| {
                let column = fill_column(p, a);
                let p2 = apply_flips(p, &column)?;
                let root_arcs: Vec<u64> = p2
                    .unanimous_mask()
                    .iter()
                    .map(|&s| if s { 0 } else { u64::MAX })
                    .collect();
                let mut flips = steiner(inst, &p2, &root_arcs, &terminals)?;
                flips.extend(column);
                Ok(Some(flips))
            })
        }
    }
}

/// Steiner tree from a root joined to each agent at `root_arcs[a]`
/// (`u64::MAX` for no arc), where a paid root arc means `a` qualifying itself.
fn steiner(
    inst: &BriberyInstance,
    p: &QualificationProfile,
    root_arcs: &[u64],
    terminals: &[usize],
) -> Result<FlipSet> {
    let n = p.n();
    let root = n;
    let mut g = WeightedDigraph::new(n + 1);
    for a in 0..n {
        if root_arcs[a] != u64::MAX {
            g.add_arc(root, a, root_arcs[a]);
        }
        for b in (0..n).filter(|&b| b != a) {
            g.add_arc(a, b, if p.get(a, b) { 0 } else { price(inst, a, b) });
        }
    }
    let (_, arcs) = directed_steiner_tree(&g, root, terminals)?;
    let mut flips = FlipSet::new();
    for (u, v) in arcs {
        if u == root {
            if root_arcs[v] > 0 {
                flips.set(v, v, true);
            }
        } else if !p.get(u, v) {
            flips.set(u, v, true);
        }
    }
    Ok(flips)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flips::{check_solution, cost_of, CheckOutcome};
    use crate::instance::{CostModel, Goal};
    use crate::profile::agents;
    use crate::profile::tests::example_profile;

    fn example(rule: SocialRule, goal: Goal) -> BriberyInstance {
        BriberyInstance::new(example_profile(), rule, goal, CostModel::unit_link(5), None).unwrap()
    }

    fn cost(inst: &BriberyInstance, f: fn(&BriberyInstance, bool) -> Result<Option<FlipSet>>) -> u64 {
        let w = f(inst, false).unwrap().unwrap();
        assert_eq!(check_solution(inst, &w).unwrap(), CheckOutcome::Ok);
        cost_of(&w, &inst.cost)
    }

    #[test]
    fn dest_examples() {
        let inst = example(SocialRule::Lsr, Goal::destructive(agents(&[2])));
        assert_eq!(cost(&inst, dest), 1);
        let inst = example(SocialRule::Lsr, Goal::destructive(agents(&[])));
        assert_eq!(cost(&inst, dest), 0);
        let inst = example(SocialRule::Csr, Goal::destructive(agents(&[1])));
        assert_eq!(cost(&inst, dest), 1);
    }

    #[test]
    fn const_example() {
        let inst = example(SocialRule::Lsr, Goal::constructive(agents(&[1, 2, 3, 4, 5])));
        assert_eq!(cost(&inst, constructive), 1);
    }

    #[test]
    fn exact_already_met() {
        let inst = example(SocialRule::Lsr, Goal::exact(agents(&[1, 2, 4])));
        assert_eq!(cost(&inst, exact), 0);
        let inst = example(SocialRule::Csr, Goal::exact(agents(&[1, 2])));
        assert_eq!(cost(&inst, exact), 0);
    }

    #[test]
    fn wrong_goal_is_unsupported() {
        let inst = example(SocialRule::Lsr, Goal::constructive(agents(&[1])));
        assert_eq!(solve_iter_link_dest(&inst).unwrap(), SolveResult::unsupported());
    }
}
