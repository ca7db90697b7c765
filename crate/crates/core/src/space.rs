//! Finite T0 spaces: a carrier with an explicit open-set family, always
//! carrying its specialization order alongside.

use crate::point_set::{PointSet, MAX_POINTS};
use crate::poset::FinitePoset;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpaceError {
    #[error("carrier size {0} exceeds the cap of {MAX_POINTS} points")]
    TooLarge(usize),
    #[error("open family does not contain the empty set")]
    MissingEmptySet,
    #[error("open family does not contain the full carrier")]
    MissingFullSet,
    #[error("open family is not closed under union: {0} ∪ {1} is missing")]
    NotUnionClosed(PointSet, PointSet),
    #[error("open family is not closed under intersection: {0} ∩ {1} is missing")]
    NotIntersectionClosed(PointSet, PointSet),
    #[error("not T0: points {0} and {1} lie in exactly the same opens")]
    NotT0(usize, usize),
    #[error("open {open} is not an upper set of the specialization order")]
    OpenNotUpper { open: PointSet },
    #[error("open family is not the full Alexandroff family: upper set {missing} is not open")]
    MissingUpperSet { missing: PointSet },
    #[error("open family is not the full Alexandroff family: open {extra} is not an upper set")]
    ExtraOpen { extra: PointSet },
    #[error("member {0} is not a subset of the carrier of size {1}")]
    NotInCarrier(PointSet, usize),
    #[error("directed-set argument is empty")]
    EmptyDirectedSet,
    #[error("set {0} is not directed in the specialization order")]
    NotDirected(PointSet),
    #[error("point {0} out of range for carrier of size {1}")]
    PointOutOfRange(usize, usize),
}

/// A finite T0 space. The invariant (checked on construction) is the finite
/// collapse: the open family is exactly the family of all upper sets of the
/// specialization order.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    poset: FinitePoset,
    opens: Vec<PointSet>,
}

impl FiniteSpace {
    /// The Alexandroff space of a poset: all upper sets are open.
    pub fn alexandroff(poset: FinitePoset) -> Self {
        let opens = poset.all_upper_sets();
        FiniteSpace { poset, opens }
    }

    /// Validates an explicit open family and computes its specialization order.
    pub fn from_opens(n: usize, opens: &[PointSet]) -> Result<Self, SpaceError> {
        if n > MAX_POINTS {
            return Err(SpaceError::TooLarge(n));
        }
        let full = PointSet::full(n);
        let mut fam: Vec<PointSet> = opens.to_vec();
        fam.sort();
        fam.dedup();
        for &u in &fam {
            if !u.is_subset_of(full) {
                return Err(SpaceError::NotInCarrier(u, n));
            }
        }
        if !fam.contains(&PointSet::EMPTY) {
            return Err(SpaceError::MissingEmptySet);
        }
        if !fam.contains(&full) {
            return Err(SpaceError::MissingFullSet);
        }
        for &a in &fam {
            for &b in &fam {
                if !fam.contains(&a.union(b)) {
                    return Err(SpaceError::NotUnionClosed(a, b));
                }
                if !fam.contains(&a.intersect(b)) {
                    return Err(SpaceError::NotIntersectionClosed(a, b));
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let same = fam
                    .iter()
                    .all(|u| u.contains(i) == u.contains(j));
                if same {
                    return Err(SpaceError::NotT0(i, j));
                }
            }
        }
        // Specialization order: x <= y iff x ∈ cl{y} iff every open around x
        // contains y.
        let leq = |x: usize, y: usize| fam.iter().all(|u| !u.contains(x) || u.contains(y));
        let poset = FinitePoset::from_relation(n, leq)
            .expect("specialization of a T0 topology is a partial order");
        for &u in &fam {
            if !poset.is_upper(u) {
                return Err(SpaceError::OpenNotUpper { open: u });
            }
        }
        // Finite-collapse invariant: the family must be every upper set.
        let upper = poset.all_upper_sets();
        for &u in &upper {
            if !fam.contains(&u) {
                return Err(SpaceError::MissingUpperSet { missing: u });
            }
        }
        for &u in &fam {
            if !upper.contains(&u) {
                return Err(SpaceError::ExtraOpen { extra: u });
            }
        }
        Ok(FiniteSpace { poset, opens: fam })
    }

    pub fn n(&self) -> usize {
        self.poset.n()
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    /// Open family, ascending by bit pattern.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn is_open(&self, u: PointSet) -> bool {
        self.opens.binary_search(&u).is_ok()
    }

    /// Recomputes the specialization order from the opens (x <= y iff
    /// x ∈ cl{y}) and checks it coincides with the stored order.
    pub fn specialization(&self) -> FinitePoset {
        let n = self.n();
        let leq =
            |x: usize, y: usize| self.opens.iter().all(|u| !u.contains(x) || u.contains(y));
        let p = FinitePoset::from_relation(n, leq)
            .expect("specialization of a valid space is a partial order");
        assert!(
            p == self.poset,
            "stored order disagrees with recomputed specialization order"
        );
        p
    }

    pub fn check_point(&self, x: usize) -> Result<(), SpaceError> {
        if x < self.n() {
            Ok(())
        } else {
            Err(SpaceError::PointOutOfRange(x, self.n()))
        }
    }

    /// Topological closure: x ∈ cl(A) iff every open around x meets A.
    pub fn cl(&self, a: PointSet) -> PointSet {
        PointSet::from_points((0..self.n()).filter(|&x| {
            self.opens
                .iter()
                .all(|u| !u.contains(x) || u.meets(a))
        }))
    }

    /// Topological interior: the union of opens inside A.
    pub fn int(&self, a: PointSet) -> PointSet {
        self.opens
            .iter()
            .filter(|u| u.is_subset_of(a))
            .fold(PointSet::EMPTY, |acc, &u| acc.union(u))
    }

    /// Intersection of all opens containing x — itself open by finite
    /// intersection closure.
    pub fn minimal_open_around(&self, x: usize) -> PointSet {
        self.opens
            .iter()
            .filter(|u| u.contains(x))
            .fold(PointSet::full(self.n()), |acc, &u| acc.intersect(u))
    }

    /// Net convergence of a directed set (validated): D → x iff every open
    /// around x meets D.
    pub fn converges(&self, d: PointSet, x: usize) -> Result<bool, SpaceError> {
        self.check_point(x)?;
        if d.is_empty() {
            return Err(SpaceError::EmptyDirectedSet);
        }
        if !d.is_subset_of(PointSet::full(self.n())) {
            return Err(SpaceError::NotInCarrier(d, self.n()));
        }
        if !self.poset.is_directed(d) {
            return Err(SpaceError::NotDirected(d));
        }
        Ok(self.converges_directed(d, x))
    }

    /// Same decision without the preconditions, for internal quantifier loops
    /// over sets already known to be directed.
    pub(crate) fn converges_directed(&self, d: PointSet, x: usize) -> bool {
        self.opens
            .iter()
            .all(|u| !u.contains(x) || u.meets(d))
    }

    /// For a directed set D, the set of points it converges to.
    pub(crate) fn convergence_points(&self, d: PointSet) -> PointSet {
        // x fails iff some open around x misses D.
        let bad = self
            .opens
            .iter()
            .filter(|u| !u.meets(d))
            .fold(PointSet::EMPTY, |acc, &u| acc.union(u));
        bad.complement(self.n())
    }

    /// The family of monotone determined open sets, computed definitionally:
    /// U qualifies iff for every directed D converging to a point of U, D
    /// meets U. Directed sets are enumerated via their greatest elements.
    pub fn md_opens(&self) -> Vec<PointSet> {
        let directed = self.poset.directed_subsets();
        let conv: Vec<PointSet> = directed
            .iter()
            .map(|&d| self.convergence_points(d))
            .collect();
        PointSet::all_subsets(self.n())
            .filter(|&u| {
                directed
                    .iter()
                    .zip(&conv)
                    .all(|(&d, &c)| !c.meets(u) || d.meets(u))
            })
            .collect()
    }

    pub fn is_monotone_determined(&self) -> bool {
        self.md_opens() == self.opens
    }

    /// Lower topology: generated by complements of principal filters.
    pub fn omega(&self) -> Vec<PointSet> {
        let n = self.n();
        let subbasis: Vec<PointSet> = (0..n).map(|x| self.poset.up(x).complement(n)).collect();
        generate_topology(n, &subbasis)
    }

    /// Lawson topology: the join of the open family and the lower topology.
    /// On a finite T0 space this is discrete, which is asserted.
    pub fn lawson(&self) -> Vec<PointSet> {
        let mut subbasis = self.opens.clone();
        subbasis.extend(self.omega());
        let lam = generate_topology(self.n(), &subbasis);
        assert_eq!(
            lam.len(),
            1usize << self.n(),
            "Lawson topology of a finite T0 space must be discrete"
        );
        lam
    }
}

/// Closes a subbasis into a topology: all finite intersections (including the
/// empty intersection = full carrier), then all unions (including the empty
/// union = empty set). Returned ascending by bit pattern.
pub fn generate_topology(n: usize, subbasis: &[PointSet]) -> Vec<PointSet> {
    let full = PointSet::full(n);
    let mut basis: Vec<PointSet> = vec![full];
    // Finite intersections: iterate to a fixpoint.
    loop {
        let mut added = false;
        let snapshot = basis.clone();
        for &b in &snapshot {
            for &s in subbasis {
                let v = b.intersect(s);
                if !basis.contains(&v) {
                    basis.push(v);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut opens: Vec<PointSet> = vec![PointSet::EMPTY];
    loop {
        let mut added = false;
        let snapshot = opens.clone();
        for &o in &snapshot {
            for &b in &basis {
                let v = o.union(b);
                if !opens.contains(&v) {
                    opens.push(v);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    opens.sort();
    opens.dedup();
    opens
}

impl std::fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "space(n={}, covers={:?}, opens={:?})",
            self.n(),
            self.poset.covers(),
            self.opens
        )
    }
}

/// The Sierpinski space: carrier {0,1} with 0 < 1.
pub fn sierpinski() -> FiniteSpace {
    FiniteSpace::alexandroff(FinitePoset::chain(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    #[test]
    fn sierpinski_from_opens_matches_alexandroff() {
        let sp = FiniteSpace::from_opens(2, &[s(&[]), s(&[1]), s(&[0, 1])]).unwrap();
        assert_eq!(sp, sierpinski());
        assert!(sp.poset().le(0, 1) && !sp.poset().le(1, 0));
    }

    #[test]
    fn indiscrete_two_points_is_not_t0() {
        let err = FiniteSpace::from_opens(2, &[s(&[]), s(&[0, 1])]).unwrap_err();
        assert_eq!(err, SpaceError::NotT0(0, 1));
    }

    #[test]
    fn union_closure_is_checked() {
        let err =
            FiniteSpace::from_opens(3, &[s(&[]), s(&[0]), s(&[1]), s(&[0, 1, 2])]).unwrap_err();
        assert_eq!(err, SpaceError::NotUnionClosed(s(&[0]), s(&[1])));
    }

    #[test]
    fn specialization_of_chain_space() {
        // opens ∅, {2}, {1,2}, X force 0 <= 1 <= 2.
        let sp =
            FiniteSpace::from_opens(3, &[s(&[]), s(&[2]), s(&[1, 2]), s(&[0, 1, 2])]).unwrap();
        let p = sp.specialization();
        assert!(p.le(0, 1) && p.le(1, 2) && p.le(0, 2));
        assert!(!p.le(1, 0) && !p.le(2, 1));
    }

    #[test]
    fn convergence_examples() {
        let sp = sierpinski();
        // {1} → 0 because 0 <= 1.
        assert!(sp.converges(s(&[1]), 0).unwrap());
        // Reflexive: {x} → x.
        assert!(sp.converges(s(&[0]), 0).unwrap());
        let chain = FiniteSpace::alexandroff(FinitePoset::chain(3));
        // Open {2} misses {0,1}.
        assert!(!chain.converges(s(&[0, 1]), 2).unwrap());
        assert_eq!(
            chain.converges(PointSet::EMPTY, 0).unwrap_err(),
            SpaceError::EmptyDirectedSet
        );
        let v = FinitePoset::from_le_pairs(3, &[(0, 2), (1, 2)]).unwrap();
        let vspace = FiniteSpace::alexandroff(v);
        assert_eq!(
            vspace.converges(s(&[0, 1]), 0).unwrap_err(),
            SpaceError::NotDirected(s(&[0, 1]))
        );
    }

    #[test]
    fn md_opens_equals_opens_on_small_spaces() {
        let sp = sierpinski();
        assert_eq!(sp.md_opens(), sp.opens().to_vec());
        let disc = FiniteSpace::alexandroff(FinitePoset::discrete(3));
        assert_eq!(disc.md_opens().len(), 8);
        assert!(disc.is_monotone_determined());
    }

    #[test]
    fn omega_and_lawson_on_sierpinski() {
        let sp = sierpinski();
        assert_eq!(sp.omega(), vec![s(&[]), s(&[0]), s(&[0, 1])]);
        assert_eq!(sp.lawson().len(), 4);
    }

    #[test]
    fn lawson_of_chain_is_discrete() {
        let chain = FiniteSpace::alexandroff(FinitePoset::chain(3));
        assert_eq!(chain.lawson().len(), 8);
        let disc = FiniteSpace::alexandroff(FinitePoset::discrete(3));
        assert_eq!(disc.omega().len(), 8);
        assert_eq!(disc.lawson().len(), 8);
    }

    #[test]
    fn closure_and_interior() {
        let sp = sierpinski();
        assert_eq!(sp.cl(s(&[1])), s(&[0, 1]));
        assert_eq!(sp.cl(s(&[0])), s(&[0]));
        assert_eq!(sp.int(s(&[0])), PointSet::EMPTY);
        assert_eq!(sp.int(s(&[1])), s(&[1]));
        assert_eq!(sp.minimal_open_around(0), s(&[0, 1]));
        assert_eq!(sp.minimal_open_around(1), s(&[1]));
    }
}
