//! Subsets of a finite carrier `{0, .., n-1}` as bitmasks.

use std::cmp::Ordering;
use std::fmt;

/// Hard cap on carrier size. Everything in this crate assumes point sets fit in a u32.
pub const MAX_POINTS: usize = 16;

/// A subset of `{0, .., n-1}`. The carrier size is carried by the surrounding
/// structure (poset/space), not by the set itself.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet(u32);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        PointSet(if n == 0 { 0 } else { (1u32 << n) - 1 })
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_POINTS);
        PointSet(1 << i)
    }

    pub fn from_bits(bits: u32) -> Self {
        PointSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        let mut s = PointSet::EMPTY;
        for p in points {
            s = s.with(p);
        }
        s
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        debug_assert!(i < MAX_POINTS);
        PointSet(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        PointSet(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        PointSet(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & Self::full(n).0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn points(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Least member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Lexicographic comparison of the ascending point lists, e.g.
    /// {0,3} < {1,2} and {0} < {0,4}.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let low = (self.0 ^ other.0).trailing_zeros();
        if self.0 & (1 << low) != 0 {
            // self owns the lowest differing point; it comes first unless the
            // other set is a proper prefix of self.
            if other.0 >> low == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 >> low == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// All subsets of the full carrier, ascending by bit pattern.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = PointSet> {
        (0..=Self::full(n).0).map(PointSet)
    }

    /// All subsets of `mask` (including the empty set), ascending by bit pattern.
    pub fn subsets_of(mask: PointSet) -> impl Iterator<Item = PointSet> {
        let m = mask.0;
        let mut cur = Some(0u32);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == m {
                None
            } else {
                Some(s.wrapping_sub(m) & m)
            };
            Some(PointSet(s))
        })
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering::*;

    #[test]
    fn basic_ops() {
        let a = PointSet::from_points([0, 2]);
        assert!(a.contains(0) && !a.contains(1) && a.contains(2));
        assert_eq!(a.len(), 2);
        assert_eq!(a.points(), vec![0, 2]);
        assert_eq!(a.complement(3), PointSet::singleton(1));
        assert!(PointSet::EMPTY.is_subset_of(a));
        assert_eq!(format!("{a}"), "{0,2}");
    }

    #[test]
    fn lex_order_on_sorted_lists() {
        fn s(points: &[usize]) -> PointSet {
            PointSet::from_points(points.iter().copied())
        }
        assert_eq!(s(&[0, 3]).lex_cmp(s(&[1, 2])), Less);
        assert_eq!(s(&[1, 2]).lex_cmp(s(&[0, 3])), Greater);
        assert_eq!(s(&[0]).lex_cmp(s(&[0, 4])), Less);
        assert_eq!(s(&[0, 4]).lex_cmp(s(&[0])), Greater);
        assert_eq!(s(&[2]).lex_cmp(s(&[2])), Equal);
    }

    #[test]
    fn submask_enumeration_is_ascending_and_complete() {
        let m = PointSet::from_points([0, 2, 3]);
        let subs: Vec<u32> = PointSet::subsets_of(m).map(|s| s.bits()).collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        for s in &subs {
            assert_eq!(s & !m.bits(), 0);
        }
    }
}
