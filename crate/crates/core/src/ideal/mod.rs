//! Ideal convergence: ideals on finite directed index sets, nets, the six
//! convergence modes, the induced convergence topologies, and the bounded
//! verification of the convergence-theoretic propositions.

mod modes;
mod sections;
mod topology;

pub use modes::{converges_mode, ConvergenceOracle, ExactOracle, Mode, ModeKind, Topology};
pub use sections::{check_section, check_section_with, Mutation, MutatedOracle};
pub(crate) use sections::{
    literal_igsl_refutation as sections_literal_igsl_refuted,
    literal_isl_refutation as sections_literal_isl_refuted,
};
pub use topology::{induced_topology, EnumBounds, InducedTopology};

use crate::point_set::PointSet;
use crate::poset::FinitePoset;
use crate::report::{Counterexample, Report};
use crate::space::FiniteSpace;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("index set is empty")]
    EmptyIndex,
    #[error("index poset is not directed: {0} and {1} have no upper bound")]
    NotDirected(usize, usize),
    #[error("family is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("net has {0} values but the index set has {1} points")]
    NetSize(usize, usize),
    #[error("net value {0} out of range for carrier of size {1}")]
    NetValue(usize, usize),
    #[error("point {0} out of range for carrier of size {1}")]
    PointOutOfRange(usize, usize),
    #[error("bounds must be positive")]
    BadBounds,
    #[error("induced topology is defined for modes IS/ISL/IGS/IGSL only")]
    UnsupportedMode,
}

/// A finite directed poset serving as the index set of nets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    poset: FinitePoset,
}

impl IndexSet {
    pub fn new(poset: FinitePoset) -> Result<Self, IdealError> {
        let n = poset.n();
        if n == 0 {
            return Err(IdealError::EmptyIndex);
        }
        for i in 0..n {
            for j in 0..n {
                if poset.up(i).intersect(poset.up(j)).is_empty() {
                    return Err(IdealError::NotDirected(i, j));
                }
            }
        }
        Ok(IndexSet { poset })
    }

    pub fn chain(k: usize) -> Self {
        IndexSet::new(FinitePoset::chain(k)).expect("a nonempty chain is directed")
    }

    pub fn size(&self) -> usize {
        self.poset.n()
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.size())
    }

    /// M_d = {d' : d <= d'}, the principal tail at d.
    pub fn tail(&self, d: usize) -> PointSet {
        self.poset.up(d)
    }

    pub fn greatest(&self) -> usize {
        self.poset
            .greatest_of(self.full())
            .expect("a finite directed set has a greatest element")
    }
}

/// An ideal over an index set of `size` points. On a finite carrier every
/// family closed downward and under binary union is the power set of its own
/// union, so the representation is that union (`top`); the constructor
/// validates the axioms on the explicit family first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    size: usize,
    top: PointSet,
}

impl Ideal {
    pub fn from_family(size: usize, family: &[PointSet]) -> Result<Self, IdealError> {
        if family.is_empty() {
            return Err(IdealError::NotAnIdeal("family is empty".into()));
        }
        let full = PointSet::full(size);
        for &a in family {
            if !a.is_subset_of(full) {
                return Err(IdealError::NotAnIdeal(format!(
                    "member {a} is not a subset of the index set"
                )));
            }
        }
        for &a in family {
            for b in PointSet::subsets_of(a) {
                if !family.contains(&b) {
                    return Err(IdealError::NotAnIdeal(format!(
                        "not downward closed: {b} ⊆ {a} is missing"
                    )));
                }
            }
            for &b in family {
                if !family.contains(&a.union(b)) {
                    return Err(IdealError::NotAnIdeal(format!(
                        "not union closed: {a} ∪ {b} is missing"
                    )));
                }
            }
        }
        let top = family.iter().fold(PointSet::EMPTY, |acc, &a| acc.union(a));
        Ok(Ideal { size, top })
    }

    /// The canonical admissible ideal: sets bounded away from some tail,
    /// A ∈ I0 iff A ⊆ J ∖ M_d for some d.
    pub fn i0(j: &IndexSet) -> Ideal {
        let top = (0..j.size())
            .map(|d| j.full().minus(j.tail(d)))
            .fold(PointSet::EMPTY, PointSet::union);
        Ideal {
            size: j.size(),
            top,
        }
    }

    /// The ideal {∅}.
    pub fn trivial(size: usize) -> Ideal {
        Ideal {
            size,
            top: PointSet::EMPTY,
        }
    }

    /// The improper ideal P(J).
    pub fn power_set(size: usize) -> Ideal {
        Ideal {
            size,
            top: PointSet::full(size),
        }
    }

    /// Down+union closure of generator sets.
    pub fn generated(size: usize, generators: &[PointSet]) -> Ideal {
        let top = generators
            .iter()
            .fold(PointSet::EMPTY, |acc, &g| acc.union(g));
        Ideal { size, top }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn top(&self) -> PointSet {
        self.top
    }

    pub fn contains(&self, a: PointSet) -> bool {
        a.is_subset_of(self.top)
    }

    pub fn is_proper(&self) -> bool {
        self.top != PointSet::full(self.size)
    }

    pub fn is_admissible(&self, j: &IndexSet) -> bool {
        (0..j.size()).all(|d| self.contains(j.full().minus(j.tail(d))))
    }

    pub fn members(&self) -> Vec<PointSet> {
        PointSet::subsets_of(self.top).collect()
    }

    /// Every ideal over the index set (one per possible union), ascending by
    /// the union's bit pattern, ending with the improper power set.
    pub fn all(j: &IndexSet) -> Vec<Ideal> {
        PointSet::all_subsets(j.size())
            .map(|top| Ideal {
                size: j.size(),
                top,
            })
            .collect()
    }

    /// CLI-grammar token for this ideal, so failure payloads feed straight
    /// back into `--ideal`.
    pub fn describe(&self) -> String {
        if self.top.is_empty() {
            "trivial".into()
        } else if self.top == PointSet::full(self.size) {
            "powerset".into()
        } else {
            format!(
                "gen:[{}]",
                self.top
                    .points()
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        }
    }
}

/// Validates the ideal axioms, properness, admissibility, and the eventuality
/// consequence on an explicit family: a defect set in I0 leaves a tail clean,
/// so any net whose defect set for ↑A lies in I0 is eventually in ↑A. The
/// family satisfies that consequence exactly when it sits inside I0.
pub fn validate_ideal(j: &IndexSet, family: &[PointSet]) -> Report {
    let mut report = Report::new();
    let full = j.full();
    let in_carrier = family.iter().all(|a| a.is_subset_of(full));
    report.flag("in_carrier", in_carrier, || {
        Counterexample::new("a member is not a subset of the index set")
    });
    report.flag("contains_empty", family.contains(&PointSet::EMPTY), || {
        Counterexample::new("the empty set is missing")
    });
    let mut down_cex = None;
    let down_closed = family.iter().all(|&a| {
        PointSet::subsets_of(a).all(|b| {
            let ok = family.contains(&b);
            if !ok && down_cex.is_none() {
                down_cex = Some((b, a));
            }
            ok
        })
    });
    report.flag("downward_closed", down_closed, || {
        let (b, a) = down_cex.unwrap();
        Counterexample::new("missing subset of a member")
            .with("set", format!("{b} ⊆ {a}"))
    });
    let mut union_cex = None;
    let union_closed = family.iter().all(|&a| {
        family.iter().all(|&b| {
            let ok = family.contains(&a.union(b));
            if !ok && union_cex.is_none() {
                union_cex = Some((a, b));
            }
            ok
        })
    });
    report.flag("union_closed", union_closed, || {
        let (a, b) = union_cex.unwrap();
        Counterexample::new("missing union of members").with("set", format!("{a} ∪ {b}"))
    });
    report.flag("proper", !family.contains(&full), || {
        Counterexample::new("the whole index set is a member").with("set", full)
    });
    let mut adm_cex = None;
    let admissible = (0..j.size()).all(|d| {
        let c = full.minus(j.tail(d));
        let ok = family.contains(&c);
        if !ok && adm_cex.is_none() {
            adm_cex = Some((d, c));
        }
        ok
    });
    report.flag("admissible", admissible, || {
        let (d, c) = adm_cex.unwrap();
        Counterexample::new("complement of a principal tail is missing")
            .with("point", d)
            .with("set", c)
    });
    let i0 = Ideal::i0(j);
    let mut ev_cex = None;
    let eventuality = family.iter().all(|&a| {
        // Tail-cleanness is the eventuality property itself; it must agree
        // with the principal form of I0.
        let tail_clean = (0..j.size()).any(|d| !j.tail(d).meets(a));
        assert_eq!(
            tail_clean,
            i0.contains(a),
            "principal I0 disagrees with the tail characterization"
        );
        if !tail_clean && ev_cex.is_none() {
            ev_cex = Some(a);
        }
        tail_clean
    });
    report.flag("eventually_in_upper_sets", eventuality, || {
        Counterexample::new(
            "member outside I0: a net with this defect set need not be eventually in the upper set",
        )
        .with("set", ev_cex.unwrap())
    });
    report
}

/// A net: an assignment from the index set into a carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Net {
    pub index: IndexSet,
    pub values: Vec<usize>,
}

impl Net {
    pub fn new(index: IndexSet, values: Vec<usize>, space: &FiniteSpace) -> Result<Self, IdealError> {
        if values.len() != index.size() {
            return Err(IdealError::NetSize(values.len(), index.size()));
        }
        if let Some(&v) = values.iter().find(|&&v| v >= space.n()) {
            return Err(IdealError::NetValue(v, space.n()));
        }
        Ok(Net { index, values })
    }

    pub fn constant(index: IndexSet, value: usize) -> Self {
        let values = vec![value; index.size()];
        Net { index, values }
    }

    /// The defect set {j : x_j ∉ S}.
    pub fn defect(&self, s: PointSet) -> PointSet {
        PointSet::from_points(
            (0..self.values.len()).filter(|&j| !s.contains(self.values[j])),
        )
    }

    /// The hit set {j : x_j ∈ S}.
    pub fn hits(&self, s: PointSet) -> PointSet {
        PointSet::from_points((0..self.values.len()).filter(|&j| s.contains(self.values[j])))
    }

    pub fn describe(&self) -> String {
        self.values
            .iter()
            .enumerate()
            .map(|(j, v)| format!("{j}:{v}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// All nets from `index` into the carrier, odometer order.
    pub fn all(index: &IndexSet, space: &FiniteSpace) -> Vec<Net> {
        let k = index.size();
        let n = space.n();
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        let mut values = vec![0usize; k];
        loop {
            out.push(Net {
                index: index.clone(),
                values: values.clone(),
            });
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if values[i] + 1 < n {
                    values[i] += 1;
                    for v in values.iter_mut().skip(i + 1) {
                        *v = 0;
                    }
                    break;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i0_of_a_chain() {
        let j = IndexSet::chain(3);
        let i0 = Ideal::i0(&j);
        assert_eq!(i0.top(), PointSet::from_points([0, 1]));
        assert!(i0.is_proper());
        assert!(i0.is_admissible(&j));
        assert_eq!(i0.members().len(), 4);
    }

    #[test]
    fn i0_of_a_singleton() {
        let j = IndexSet::chain(1);
        let i0 = Ideal::i0(&j);
        assert_eq!(i0.top(), PointSet::EMPTY);
        assert!(i0.is_proper());
    }

    #[test]
    fn power_set_is_a_valid_improper_ideal() {
        let j = IndexSet::chain(2);
        let family: Vec<PointSet> = PointSet::all_subsets(2).collect();
        let ideal = Ideal::from_family(2, &family).unwrap();
        assert!(!ideal.is_proper());
        let report = validate_ideal(&j, &family);
        assert_eq!(report.get("downward_closed"), Some(true));
        assert_eq!(report.get("union_closed"), Some(true));
        assert_eq!(report.get("proper"), Some(false));
    }

    #[test]
    fn non_ideal_families_are_rejected() {
        let not_down = [PointSet::from_points([0, 1])];
        assert!(Ideal::from_family(2, &not_down).is_err());
        let not_union = [
            PointSet::EMPTY,
            PointSet::singleton(0),
            PointSet::singleton(1),
        ];
        assert!(Ideal::from_family(2, &not_union).is_err());
    }

    /// Engineering lemma behind the principal representation: every family
    /// over a finite index set satisfying the ideal axioms is the power set
    /// of its union. Brute force over all candidate families for |J| <= 3.
    #[test]
    fn every_finite_ideal_is_a_power_set() {
        for k in 1..=3usize {
            let subsets: Vec<PointSet> = PointSet::all_subsets(k).collect();
            let m = subsets.len();
            for mask in 1u64..(1 << m) {
                let family: Vec<PointSet> = subsets
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &s)| s)
                    .collect();
                if let Ok(ideal) = Ideal::from_family(k, &family) {
                    let mut expected = ideal.members();
                    let mut got = family.clone();
                    expected.sort();
                    got.sort();
                    got.dedup();
                    assert_eq!(expected, got);
                }
            }
        }
    }

    #[test]
    fn directedness_is_required() {
        let v = FinitePoset::from_le_pairs(3, &[(0, 2), (1, 2)]).unwrap();
        assert!(IndexSet::new(v).is_ok());
        let anti = FinitePoset::discrete(2);
        assert_eq!(
            IndexSet::new(anti).unwrap_err(),
            IdealError::NotDirected(0, 1)
        );
    }

    #[test]
    fn nets_enumerate_completely() {
        let j = IndexSet::chain(2);
        let sp = crate::space::sierpinski();
        let nets = Net::all(&j, &sp);
        assert_eq!(nets.len(), 4);
        let net = Net::new(j, vec![0, 1], &sp).unwrap();
        assert_eq!(net.defect(PointSet::singleton(1)), PointSet::singleton(0));
        assert_eq!(net.describe(), "0:0,1:1");
    }

    /// Bounded form of the eventuality consequence with concrete nets: if the
    /// defect set of ↑A lies in I0, some tail of the net sits inside ↑A.
    #[test]
    fn i0_defects_mean_eventually_inside() {
        let sp = crate::space::sierpinski();
        for k in 1..=3 {
            let j = IndexSet::chain(k);
            let i0 = Ideal::i0(&j);
            for net in Net::all(&j, &sp) {
                for a in PointSet::all_subsets(sp.n()) {
                    let up_a = sp.poset().up_set(a);
                    let defect = net.defect(up_a);
                    if i0.contains(defect) {
                        let eventually = (0..k).any(|d| !j.tail(d).meets(defect));
                        assert!(eventually);
                    }
                }
            }
        }
    }
}
