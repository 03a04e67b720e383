//! Profiles as row bitmasks, for the exhaustive searches.

use crate::instance::SocialRule;
use crate::profile::QualificationProfile;

/// Row `a` has bit `b` set iff `a` qualifies `b`; at most 32 agents.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct Bits {
    pub n: usize,
    pub rows: Vec<u32>,
}

impl Bits {
    pub fn from_profile(p: &QualificationProfile) -> Self {
        let n = p.n();
        let rows = (0..n)
            .map(|a| (0..n).filter(|&b| p.get(a, b)).fold(0, |m, b| m | 1 << b))
            .collect();
        Bits { n, rows }
    }

    pub fn full(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1 << self.n) - 1
        }
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    pub fn set(&mut self, a: usize, b: usize, value: bool) {
        if value {
            self.rows[a] |= 1 << b;
        } else {
            self.rows[a] &= !(1 << b);
        }
    }

    pub fn unanimous(&self) -> u32 {
        self.rows.iter().fold(self.full(), |m, &r| m & r)
    }

    pub fn self_loops(&self) -> u32 {
        (0..self.n).filter(|&a| self.get(a, a)).fold(0, |m, a| m | 1 << a)
    }

    pub fn seeds(&self, rule: SocialRule) -> u32 {
        match rule {
            SocialRule::Lsr => self.self_loops(),
            _ => self.unanimous(),
        }
    }

    pub fn closure(&self, seeds: u32) -> u32 {
        let mut reached = seeds;
        let mut frontier = seeds;
        while frontier != 0 {
            let a = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.rows[a] & !reached;
            reached |= new;
            frontier |= new;
        }
        reached
    }

    pub fn column_plus(&self, b: usize) -> usize {
        self.rows.iter().filter(|&&r| r >> b & 1 == 1).count()
    }

    pub fn consent_member(&self, a: usize, s: usize, t: usize) -> bool {
        let plus = self.column_plus(a);
        if self.get(a, a) {
            plus >= s
        } else {
            self.n - plus < t
        }
    }

    pub fn evaluate(&self, rule: SocialRule) -> u32 {
        match rule {
            SocialRule::Consent { s, t } => (0..self.n)
                .filter(|&a| self.consent_member(a, s, t))
                .fold(0, |m, a| m | 1 << a),
            _ => self.closure(self.seeds(rule)),
        }
    }
}

pub(crate) fn bits_of(mask: &[bool]) -> u32 {
    mask.iter().enumerate().filter(|(_, &m)| m).fold(0, |m, (i, _)| m | 1 << i)
}

/// Agent indices in `mask`, ascending.
pub(crate) fn members(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            i
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::tests::example_profile;
    use crate::rules::evaluate_mask;

    #[test]
    fn agrees_with_rules() {
        let p = example_profile();
        let b = Bits::from_profile(&p);
        for rule in [SocialRule::Lsr, SocialRule::Csr, SocialRule::Consent { s: 3, t: 3 }] {
            assert_eq!(b.evaluate(rule), bits_of(&evaluate_mask(&p, rule)));
        }
        assert_eq!(members(0b10110).collect::<Vec<_>>(), vec![1, 2, 4]);
    }
}
