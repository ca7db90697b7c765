//! Finite partial orders on `{0, .., n-1}`.

use crate::point_set::{PointSet, MAX_POINTS};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("carrier size {0} exceeds the cap of {MAX_POINTS} points")]
    TooLarge(usize),
    #[error("relation is not reflexive at point {0}")]
    NotReflexive(usize),
    #[error("cycle among distinct points {0} and {1} (antisymmetry failure)")]
    Cycle(usize, usize),
    #[error("relation is not transitive: {0} <= {1} and {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("point {0} out of range for carrier of size {1}")]
    PointOutOfRange(usize, usize),
}

/// A partial order on points `0..n`, stored as principal filters: `up[i]`
/// is the set of points above (and including) `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    n: usize,
    up: Vec<PointSet>,
}

impl FinitePoset {
    /// Builds from an arbitrary relation predicate and validates the poset axioms.
    pub fn from_relation(
        n: usize,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, PosetError> {
        if n > MAX_POINTS {
            return Err(PosetError::TooLarge(n));
        }
        let up: Vec<PointSet> = (0..n)
            .map(|i| PointSet::from_points((0..n).filter(|&j| leq(i, j))))
            .collect();
        let p = FinitePoset { n, up };
        p.validate()?;
        Ok(p)
    }

    /// Builds from `le` pairs, applying the reflexive-transitive closure, then
    /// checks antisymmetry (a cycle among distinct points is rejected).
    pub fn from_le_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, PosetError> {
        if n > MAX_POINTS {
            return Err(PosetError::TooLarge(n));
        }
        for &(i, j) in pairs {
            if i >= n {
                return Err(PosetError::PointOutOfRange(i, n));
            }
            if j >= n {
                return Err(PosetError::PointOutOfRange(j, n));
            }
        }
        let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for &(i, j) in pairs {
            up[i] = up[i].with(j);
        }
        // Warshall closure on the up-masks.
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i].union(up[k]);
                }
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if i != j && up[j].contains(i) {
                    return Err(PosetError::Cycle(i, j));
                }
            }
        }
        Ok(FinitePoset { n, up })
    }

    pub fn discrete(n: usize) -> Self {
        FinitePoset {
            n,
            up: (0..n).map(PointSet::singleton).collect(),
        }
    }

    pub fn chain(n: usize) -> Self {
        FinitePoset {
            n,
            up: (0..n)
                .map(|i| PointSet::from_points(i..n))
                .collect(),
        }
    }

    /// Unchecked constructor for callers that guarantee validity (enumeration).
    pub(crate) fn from_up_masks(n: usize, up: Vec<PointSet>) -> Self {
        debug_assert_eq!(up.len(), n);
        FinitePoset { n, up }
    }

    pub fn validate(&self) -> Result<(), PosetError> {
        let n = self.n;
        if n > MAX_POINTS {
            return Err(PosetError::TooLarge(n));
        }
        for i in 0..n {
            if !self.le(i, i) {
                return Err(PosetError::NotReflexive(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && self.le(i, j) && self.le(j, i) {
                    return Err(PosetError::Cycle(i, j));
                }
            }
        }
        for i in 0..n {
            for j in self.up[i].iter() {
                if !self.up[j].is_subset_of(self.up[i]) {
                    let k = self.up[j].minus(self.up[i]).min().unwrap();
                    return Err(PosetError::NotTransitive(i, j, k));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// Principal filter of `i`.
    pub fn up(&self, i: usize) -> PointSet {
        self.up[i]
    }

    /// Principal ideal of `i`.
    pub fn down(&self, i: usize) -> PointSet {
        PointSet::from_points((0..self.n).filter(|&j| self.le(j, i)))
    }

    pub fn up_set(&self, a: PointSet) -> PointSet {
        a.iter().fold(PointSet::EMPTY, |acc, i| acc.union(self.up[i]))
    }

    pub fn down_set(&self, a: PointSet) -> PointSet {
        PointSet::from_points((0..self.n).filter(|&j| self.up[j].meets(a)))
    }

    pub fn is_upper(&self, a: PointSet) -> bool {
        self.up_set(a) == a
    }

    pub fn is_lower(&self, a: PointSet) -> bool {
        self.down_set(a) == a
    }

    /// All upper sets, ascending by bit pattern. This is the Alexandroff open
    /// family of the poset.
    pub fn all_upper_sets(&self) -> Vec<PointSet> {
        PointSet::all_subsets(self.n)
            .filter(|&a| self.is_upper(a))
            .collect()
    }

    /// Definitional directedness: nonempty and every pair of members has an
    /// upper bound among the members.
    pub fn is_directed(&self, a: PointSet) -> bool {
        if a.is_empty() {
            return false;
        }
        for i in a.iter() {
            for j in a.iter() {
                if !self.up[i].intersect(self.up[j]).meets(a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn greatest_of(&self, a: PointSet) -> Option<usize> {
        a.iter().find(|&m| a.is_subset_of(self.down(m)))
    }

    /// All nonempty directed subsets. A finite directed set has a greatest
    /// element, so each one arises exactly once as {m} ∪ S with S below m.
    pub fn directed_subsets(&self) -> Vec<PointSet> {
        let mut out = Vec::new();
        for m in 0..self.n {
            let strict_down = self.down(m).without(m);
            for s in PointSet::subsets_of(strict_down) {
                out.push(s.with(m));
            }
        }
        out
    }

    /// Smyth preorder on subsets: G <= H iff H ⊆ ↑G.
    pub fn smyth_le(&self, g: PointSet, h: PointSet) -> bool {
        h.is_subset_of(self.up_set(g))
    }

    /// Directedness of a family of finite sets with respect to the Smyth
    /// preorder: any two members have a member inside both up-sets.
    pub fn is_smyth_directed(&self, family: &[PointSet]) -> bool {
        if family.is_empty() {
            return false;
        }
        family.iter().all(|&f1| {
            family.iter().all(|&f2| {
                let bound = self.up_set(f1).intersect(self.up_set(f2));
                family.iter().any(|&f| !f.is_empty() && f.is_subset_of(bound))
            })
        })
    }

    pub fn maximal_points(&self) -> PointSet {
        PointSet::from_points((0..self.n).filter(|&i| self.up[i] == PointSet::singleton(i)))
    }

    /// Covering pairs (i, j): i < j with nothing strictly between. Sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.up[i].iter() {
                if i == j {
                    continue;
                }
                let between = (0..self.n)
                    .any(|k| k != i && k != j && self.le(i, k) && self.le(k, j));
                if !between {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

impl std::fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "poset(n={}, covers={:?})", self.n, self.covers())
    }
}
