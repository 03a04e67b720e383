//! Agents and qualification profiles.
//!
//! A profile is the `n x n` matrix `phi` where `phi(a, b) = +1` means that
//! agent `a` qualifies agent `b`. Entries are stored as `bool` (`true` for
//! `+1`). Agents are numbered from 1 in every user-facing place; the
//! matrix accessors that take plain `usize` use 0-based indices.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest number of agents accepted anywhere in the crate.
pub const MAX_AGENTS: usize = 10_000;

/// An agent, displayed 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AgentId(usize);

impl AgentId {
    /// Agent with the given 0-based index.
    pub const fn from_index(index: usize) -> Self {
        AgentId(index)
    }

    /// Agent `a_number`; `number` is 1-based.
    pub fn from_number(number: usize) -> Option<Self> {
        number.checked_sub(1).map(AgentId)
    }

    pub const fn index(self) -> usize {
        self.0
    }

    pub const fn number(self) -> usize {
        self.0 + 1
    }

    pub fn check(self, n: usize) -> Result<Self> {
        if self.0 < n {
            Ok(self)
        } else {
            Err(Error::AgentOutOfRange {
                index: self.number(),
                n,
            })
        }
    }
}

impl fmt::Display for AgentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

pub type AgentSet = BTreeSet<AgentId>;

/// Shorthand for building agent sets from 1-based numbers in tests and docs.
pub fn agents(numbers: &[usize]) -> AgentSet {
    numbers
        .iter()
        .map(|&k| AgentId::from_number(k).expect("agent numbers are 1-based"))
        .collect()
}

pub(crate) fn mask_of(set: &AgentSet, n: usize) -> Vec<bool> {
    let mut mask = vec![false; n];
    for a in set {
        mask[a.index()] = true;
    }
    mask
}

pub(crate) fn set_of(mask: &[bool]) -> AgentSet {
    mask.iter()
        .enumerate()
        .filter(|(_, &m)| m)
        .map(|(i, _)| AgentId::from_index(i))
        .collect()
}

/// The qualification profile `phi: A x A -> {-1, +1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QualificationProfile {
    n: usize,
    cells: Vec<bool>,
}

impl QualificationProfile {
    /// Profile where every entry equals `value`.
    pub fn filled(n: usize, value: bool) -> Result<Self> {
        if n == 0 || n > MAX_AGENTS {
            return Err(Error::MalformedProfile(format!(
                "agent count {n} outside 1..={MAX_AGENTS}"
            )));
        }
        Ok(QualificationProfile {
            n,
            cells: vec![value; n * n],
        })
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let n = rows.len();
        let mut profile = Self::filled(n, false)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedProfile(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            profile.cells[i * n..(i + 1) * n].copy_from_slice(row);
        }
        Ok(profile)
    }

    /// Parses rows written with `'1'` for +1 and `'0'` for -1.
    pub fn from_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let parsed = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.as_ref()
                    .chars()
                    .map(|c| match c {
                        '1' => Ok(true),
                        '0' => Ok(false),
                        other => Err(Error::MalformedProfile(format!(
                            "row {}: unexpected character {other:?}",
                            i + 1
                        ))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&parsed)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `phi(i, j) = +1`, 0-based.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.n + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, value: bool) {
        self.cells[i * self.n + j] = value;
    }

    pub fn qualifies(&self, a: AgentId, b: AgentId) -> bool {
        self.get(a.index(), b.index())
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.cells[i * self.n..(i + 1) * self.n]
    }

    pub fn agents(&self) -> impl Iterator<Item = AgentId> {
        (0..self.n).map(AgentId::from_index)
    }

    /// `(|Q+(a)|, |Q-(a)|)`: how many agents qualify and disqualify `a`.
    pub fn qualifier_counts(&self, a: AgentId) -> (usize, usize) {
        let plus = self.column_plus(a.index());
        (plus, self.n - plus)
    }

    pub(crate) fn column_plus(&self, j: usize) -> usize {
        (0..self.n).filter(|&i| self.get(i, j)).count()
    }

    /// `Q+(a)`, the agents qualifying `a`.
    pub fn qualifiers(&self, a: AgentId) -> AgentSet {
        self.agents().filter(|&b| self.qualifies(b, a)).collect()
    }

    /// `Q-(a)`, the agents disqualifying `a`.
    pub fn disqualifiers(&self, a: AgentId) -> AgentSet {
        self.agents().filter(|&b| !self.qualifies(b, a)).collect()
    }

    /// `A*`, agents qualified by everyone including themselves.
    pub fn unanimous(&self) -> AgentSet {
        set_of(&self.unanimous_mask())
    }

    pub(crate) fn unanimous_mask(&self) -> Vec<bool> {
        (0..self.n)
            .map(|j| (0..self.n).all(|i| self.get(i, j)))
            .collect()
    }

    /// `-phi`: every entry flipped.
    pub fn negate(&self) -> Self {
        QualificationProfile {
            n: self.n,
            cells: self.cells.iter().map(|&c| !c).collect(),
        }
    }

    /// Rows rendered as `'1'`/`'0'` strings.
    pub fn to_strings(&self) -> Vec<String> {
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|&c| if c { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for QualificationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_strings()).finish()
    }
}

pub fn negate_profile(profile: &QualificationProfile) -> QualificationProfile {
    profile.negate()
}

pub fn qualifier_counts(profile: &QualificationProfile, a: AgentId) -> (usize, usize) {
    profile.qualifier_counts(a)
}
