//! Label combinatorics of a family of parallel edges.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `size` parallel edges; edge `t` joins label `start + t` to `k - start - t` (mod `n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParallelFamily {
    pub n: u32,
    pub k: u32,
    pub start: u32,
    pub size: u32,
}

/// Incidence counts of a family of `m n + 1` edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCountReport {
    pub m: u32,
    /// Number of edge ends at each label `i`, i.e. how many `(i, k-i)` edges there are.
    pub incidence: Vec<u32>,
    pub every_pair_at_least_2m: bool,
    pub some_pair_at_least_2m_plus_1: bool,
    /// Labels whose count is strictly above `2m`.
    pub above_2m: Vec<u32>,
}

impl PairCountReport {
    pub fn holds(&self) -> bool {
        self.every_pair_at_least_2m && self.some_pair_at_least_2m_plus_1
    }
}

impl ParallelFamily {
    pub fn new(n: u32, k: u32, start: u32, size: u32) -> Result<Self> {
        if n == 0 || size == 0 {
            return Err(Error::PreconditionViolated("family needs n >= 1 and size >= 1".into()));
        }
        Ok(ParallelFamily { n, k: k % n, start: start % n, size })
    }

    /// Labels at the two ends of edge `t`.
    pub fn end_labels(&self, t: u32) -> (u32, u32) {
        let n = self.n as i64;
        let a = (self.start as i64 + t as i64).rem_euclid(n);
        let b = (self.k as i64 - self.start as i64 - t as i64).rem_euclid(n);
        (a as u32, b as u32)
    }

    /// Multiset of unordered label pairs.
    pub fn label_spectrum(&self) -> BTreeMap<(u32, u32), u32> {
        let mut out = BTreeMap::new();
        for t in 0..self.size {
            let (a, b) = self.end_labels(t);
            *out.entry((a.min(b), a.max(b))).or_default() += 1;
        }
        out
    }

    /// Edge ends carrying each label.
    pub fn incidence(&self) -> Vec<u32> {
        let mut inc = vec![0u32; self.n as usize];
        for t in 0..self.size {
            let (a, b) = self.end_labels(t);
            inc[a as usize] += 1;
            inc[b as usize] += 1;
        }
        inc
    }

    /// For a family of `m n + 1` edges, the counts behind the pairing claims:
    /// every `(i, k-i)` pair occurs at least `2m` times and one at least `2m+1`.
    pub fn pair_counts(&self) -> Option<PairCountReport> {
        if self.size < self.n + 1 || !(self.size - 1).is_multiple_of(self.n) {
            return None;
        }
        let m = (self.size - 1) / self.n;
        let incidence = self.incidence();
        Some(PairCountReport {
            m,
            every_pair_at_least_2m: incidence.iter().all(|c| *c >= 2 * m),
            some_pair_at_least_2m_plus_1: incidence.iter().any(|c| *c > 2 * m),
            above_2m: (0..self.n).filter(|i| incidence[*i as usize] > 2 * m).collect(),
            incidence,
        })
    }

    /// Whether every edge joins labels of opposite parity, as needed when the
    /// vertex signs of the dual graph alternate with the label.
    pub fn parity_admissible(&self) -> bool {
        self.n.is_multiple_of(2)
            && (0..self.size).all(|t| {
                let (a, b) = self.end_labels(t);
                a % 2 != b % 2
            })
    }

    fn is_s_cycle_at(&self, t: u32) -> bool {
        let i = (self.start as u64 + t as u64) % self.n as u64;
        (2 * i + 1) % self.n as u64 == self.k as u64
    }

    /// First position `t` where edges `t, t+1` have labels `{i, i+1}` swapped
    /// end to end, i.e. `k = 2i + 1`.
    pub fn find_s_cycle(&self) -> Result<Option<u32>> {
        if self.n % 2 == 1 {
            return Err(Error::OddIndexCount(self.n));
        }
        Ok((0..self.size.saturating_sub(1)).find(|t| self.is_s_cycle_at(*t)))
    }

    /// First S-cycle position `t` with an extra parallel edge on each side.
    pub fn find_extended_s_cycle(&self) -> Result<Option<u32>> {
        if self.n % 2 == 1 {
            return Err(Error::OddIndexCount(self.n));
        }
        Ok((1..self.size.saturating_sub(2)).find(|t| self.is_s_cycle_at(*t)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_example() {
        let f = ParallelFamily::new(4, 1, 0, 5).unwrap();
        let spec = f.label_spectrum();
        assert_eq!(spec.values().sum::<u32>(), 5);
        let r = f.pair_counts().unwrap();
        assert_eq!(r.m, 1);
        assert!(r.holds());
        assert!(r.incidence.iter().all(|c| *c >= 2));
        assert!(r.incidence.iter().any(|c| *c >= 3));
        let one = ParallelFamily::new(6, 3, 2, 1).unwrap();
        assert_eq!(one.label_spectrum().len(), 1);
        assert!(one.pair_counts().is_none());
    }

    #[test]
    fn s_cycle_example() {
        let f = ParallelFamily::new(4, 1, 0, 3).unwrap();
        assert_eq!(f.find_s_cycle().unwrap(), Some(0));
        assert_eq!(f.end_labels(0), (0, 1));
        assert_eq!(f.end_labels(1), (1, 0));
        assert_eq!(f.find_extended_s_cycle().unwrap(), None);
        let odd = ParallelFamily::new(5, 1, 0, 3).unwrap();
        assert_eq!(odd.find_s_cycle(), Err(Error::OddIndexCount(5)));
    }

    #[test]
    fn parity_selects_odd_k() {
        for n in (2..=12).step_by(2) {
            for k in 0..n {
                let f = ParallelFamily::new(n, k, 0, n).unwrap();
                assert_eq!(f.parity_admissible(), k % 2 == 1);
            }
        }
    }
}
