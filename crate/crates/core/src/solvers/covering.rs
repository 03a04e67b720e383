//! Exact 0/1 covering by branch and bound.

use crate::error::{Error, Result};

/// Cap on guessed target agents for the subset-guessing consent solvers.
pub(crate) const MAX_TARGETS: usize = 20;

/// Minimum-weight 0/1 vector `x` with `sum_j rows[i][j] * x[j] >= thresholds[i]`
/// for every row. Non-positive thresholds are always met.
pub fn covering_bnb(weights: &[u64], rows: &[Vec<bool>], thresholds: &[i64]) -> Result<(u64, Vec<bool>)> {
    covering_within(weights, rows, thresholds, u64::MAX)?.ok_or(Error::Infeasible)
}

/// As [`covering_bnb`], but only looks for solutions of weight at most
/// `bound`; `Ok(None)` if there is none.
pub(crate) fn covering_within(
    weights: &[u64],
    rows: &[Vec<bool>],
    thresholds: &[i64],
    bound: u64,
) -> Result<Option<(u64, Vec<bool>)>> {
    assert_eq!(rows.len(), thresholds.len(), "one threshold per row");
    let m = weights.len();
    // Per row, covering variables sorted by weight.
    let mut by_row: Vec<Vec<usize>> = Vec::new();
    let mut deficit: Vec<usize> = Vec::new();
    for (row, &need) in rows.iter().zip(thresholds) {
        assert_eq!(row.len(), m, "row length must match the number of variables");
        if need <= 0 {
            continue;
        }
        let mut vars: Vec<usize> = (0..m).filter(|&j| row[j]).collect();
        if vars.len() < need as usize {
            return Err(Error::Infeasible);
        }
        vars.sort_by_key(|&j| (weights[j], j));
        by_row.push(vars);
        deficit.push(need as usize);
    }
    let mut search = Search {
        weights,
        by_row,
        deficit,
        state: vec![State::Open; m],
        best: bound.saturating_add(1),
        best_x: None,
    };
    search.greedy();
    search.branch(0);
    Ok(search.best_x.map(|x| (search.best, x)))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Open,
    In,
    Out,
}

struct Search<'a> {
    weights: &'a [u64],
    by_row: Vec<Vec<usize>>,
    deficit: Vec<usize>,
    state: Vec<State>,
    best: u64,
    best_x: Option<Vec<bool>>,
}

impl Search<'_> {
    fn covers(&self, r: usize, j: usize) -> bool {
        self.by_row[r].binary_search_by_key(&(self.weights[j], j), |&v| (self.weights[v], v)).is_ok()
    }

    /// Incumbent from repeatedly taking the variable with the most deficit
    /// reduction per unit of weight.
    fn greedy(&mut self) {
        let m = self.weights.len();
        let mut deficit = self.deficit.clone();
        let mut x = vec![false; m];
        while deficit.iter().any(|&d| d > 0) {
            let pick = (0..m)
                .filter(|&j| !x[j])
                .map(|j| {
                    let gain = (0..deficit.len())
                        .filter(|&r| deficit[r] > 0 && self.covers(r, j))
                        .count() as u64;
                    (j, gain)
                })
                .filter(|&(_, gain)| gain > 0)
                .max_by(|&(a, ga), &(b, gb)| {
                    (ga * self.weights[b])
                        .cmp(&(gb * self.weights[a]))
                        .then(b.cmp(&a))
                });
            let Some((j, _)) = pick else { return };
            x[j] = true;
            for r in 0..deficit.len() {
                if deficit[r] > 0 && self.covers(r, j) {
                    deficit[r] -= 1;
                }
            }
        }
        let w = (0..m).filter(|&j| x[j]).map(|j| self.weights[j]).sum();
        if w < self.best {
            self.best = w;
            self.best_x = Some(x);
        }
    }

    /// Largest over rows of the cheapest way to close that row alone, or
    /// `None` if some row can no longer be closed.
    fn lower_bound(&self) -> Option<u64> {
        let mut bound = 0;
        for (r, vars) in self.by_row.iter().enumerate() {
            let d = self.deficit[r];
            if d == 0 {
                continue;
            }
            let open: Vec<u64> = vars
                .iter()
                .filter(|&&j| self.state[j] == State::Open)
                .take(d)
                .map(|&j| self.weights[j])
                .collect();
            if open.len() < d {
                return None;
            }
            bound = bound.max(open.iter().sum());
        }
        Some(bound)
    }

    fn set(&mut self, j: usize, state: State) {
        if state == State::In {
            for r in 0..self.by_row.len() {
                if self.deficit[r] > 0 && self.covers(r, j) {
                    self.deficit[r] -= 1;
                }
            }
        }
        self.state[j] = state;
    }

    fn branch(&mut self, cost: u64) {
        let Some(bound) = self.lower_bound() else { return };
        if cost + bound >= self.best {
            return;
        }
        // Most constrained open row.
        let row = (0..self.by_row.len())
            .filter(|&r| self.deficit[r] > 0)
            .min_by_key(|&r| {
                let open = self.by_row[r].iter().filter(|&&j| self.state[j] == State::Open).count();
                open - self.deficit[r]
            });
        let Some(r) = row else {
            self.best = cost;
            self.best_x = Some(self.state.iter().map(|&s| s == State::In).collect());
            return;
        };
        // The first chosen variable of row r, in weight order, is the i-th open one.
        let open: Vec<usize> = self.by_row[r]
            .iter()
            .copied()
            .filter(|&j| self.state[j] == State::Open)
            .collect();
        let saved = (self.deficit.clone(), self.state.clone());
        let tries = open.len() + 1 - self.deficit[r];
        for (i, &j) in open.iter().enumerate().take(tries) {
            for &k in &open[..i] {
                self.state[k] = State::Out;
            }
            self.set(j, State::In);
            self.branch(cost + self.weights[j]);
            self.deficit.clone_from(&saved.0);
            self.state.clone_from(&saved.1);
        }
    }
}
