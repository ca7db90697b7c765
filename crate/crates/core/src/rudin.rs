//! Directed transversals of Smyth-directed families of nonempty finite sets.

use crate::point_set::PointSet;
use crate::poset::FinitePoset;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RudinError {
    #[error("family is empty")]
    EmptyFamily,
    #[error("family member #{0} is empty")]
    EmptyMember(usize),
    #[error("family member {0} is not a subset of the carrier")]
    NotInCarrier(PointSet),
    #[error("family is not directed under the Smyth preorder: members {0} and {1} have no member below both")]
    NotSmythDirected(PointSet, PointSet),
}

/// Finds a directed D ⊆ ∪family with D ∩ F ≠ ∅ for every member F.
/// Deterministic: among all valid transversals of minimal cardinality, the
/// lexicographically least (by ascending point list) is returned.
pub fn rudin_transversal(
    poset: &FinitePoset,
    family: &[PointSet],
) -> Result<PointSet, RudinError> {
    if family.is_empty() {
        return Err(RudinError::EmptyFamily);
    }
    let full = PointSet::full(poset.n());
    for (k, &f) in family.iter().enumerate() {
        if f.is_empty() {
            return Err(RudinError::EmptyMember(k));
        }
        if !f.is_subset_of(full) {
            return Err(RudinError::NotInCarrier(f));
        }
    }
    for &f1 in family {
        for &f2 in family {
            let bound = poset.up_set(f1).intersect(poset.up_set(f2));
            if !family
                .iter()
                .any(|&f| f.is_subset_of(bound))
            {
                return Err(RudinError::NotSmythDirected(f1, f2));
            }
        }
    }
    let union = family.iter().fold(PointSet::EMPTY, |acc, &f| acc.union(f));
    let mut candidates: Vec<PointSet> = PointSet::subsets_of(union)
        .filter(|d| !d.is_empty())
        .collect();
    candidates.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
    for d in candidates {
        if poset.is_directed(d) && family.iter().all(|&f| d.meets(f)) {
            return Ok(d);
        }
    }
    // Rudin's lemma guarantees a transversal exists for a Smyth-directed
    // family, so exhausting the candidates means the validation above or the
    // search itself is broken.
    unreachable!("no directed transversal for a validated Smyth-directed family")
}
