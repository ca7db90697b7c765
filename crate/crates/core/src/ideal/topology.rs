//! Convergence topologies induced by the four structural modes, computed two
//! ways: the theorem-predicted family and a bounded enumeration over
//! (net, ideal, point) contexts.

use super::modes::{converges_mode, Mode, ModeKind};
use super::{Ideal, IdealError, IndexSet, Net};
use crate::point_set::PointSet;
use crate::space::FiniteSpace;

#[derive(Debug, Clone)]
pub struct InducedTopology {
    /// Theorem-predicted family: D(X) for IS/IGS; the Lawson family as a
    /// lower bound certificate for ISL/IGSL.
    pub exact: Vec<PointSet>,
    /// Subsets surviving the defining condition over every enumerated
    /// (net, ideal, point) context within bounds.
    pub enumerated: Vec<PointSet>,
    /// enumerated ⊇ exact, and for IS/IGS every non-upper set was rejected.
    pub consistent: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct EnumBounds {
    /// Largest chain index set used in the enumeration.
    pub max_index: usize,
}

impl Default for EnumBounds {
    fn default() -> Self {
        EnumBounds { max_index: 3 }
    }
}

/// The enumeration contexts: chain index sets up to the bound, every ideal
/// on chains of up to 3 points, and a generator-bounded family beyond that
/// (all ideals generated by up to two subsets, which on a finite index set
/// is again every principal family reachable from two generators, plus I0
/// and the power set).
pub(crate) fn enumeration_ideals(j: &IndexSet) -> Vec<Ideal> {
    if j.size() <= 3 {
        return Ideal::all(j);
    }
    let mut out = vec![
        Ideal::trivial(j.size()),
        Ideal::i0(j),
        Ideal::power_set(j.size()),
    ];
    let singles: Vec<PointSet> = (0..j.size()).map(PointSet::singleton).collect();
    for (k, &a) in singles.iter().enumerate() {
        for &b in &singles[k..] {
            out.push(Ideal::generated(j.size(), &[a, b]));
        }
    }
    out.sort_by_key(|i| i.top());
    out.dedup();
    out
}

pub fn induced_topology(
    space: &FiniteSpace,
    kind: ModeKind,
    bounds: EnumBounds,
) -> Result<InducedTopology, IdealError> {
    if bounds.max_index == 0 {
        return Err(IdealError::BadBounds);
    }
    let lawson;
    let exact: Vec<PointSet> = match kind {
        ModeKind::Is | ModeKind::Igs => space.md_opens(),
        ModeKind::Isl | ModeKind::Igsl => {
            lawson = space.lawson();
            lawson
        }
        _ => return Err(IdealError::UnsupportedMode),
    };

    let mode = Mode::new(kind);
    // Collect every converging (net, ideal, x) context once, then test each
    // candidate subset against all of them.
    let mut contexts: Vec<(Net, Ideal, usize)> = Vec::new();
    for jk in 1..=bounds.max_index {
        let j = IndexSet::chain(jk);
        for ideal in enumeration_ideals(&j) {
            for net in Net::all(&j, space) {
                for x in 0..space.n() {
                    if converges_mode(space, &net, &ideal, &mode, x)? {
                        contexts.push((net.clone(), ideal.clone(), x));
                    }
                }
            }
        }
    }
    let enumerated: Vec<PointSet> = PointSet::all_subsets(space.n())
        .filter(|&u| {
            contexts
                .iter()
                .all(|(net, ideal, x)| !u.contains(*x) || ideal.contains(net.defect(u)))
        })
        .collect();

    let mut consistent = exact.iter().all(|u| enumerated.contains(u));
    if matches!(kind, ModeKind::Is | ModeKind::Igs) {
        // Every non-upper candidate must be rejected, and rejected for the
        // constructible reason: a constant net at y >= x with the trivial
        // ideal converges to x ∈ U while its defect on U is not small.
        for u in PointSet::all_subsets(space.n()) {
            if space.poset().is_upper(u) {
                continue;
            }
            let witness = u.iter().find_map(|x| {
                space
                    .poset()
                    .up(x)
                    .minus(u)
                    .min()
                    .map(|y| (x, y))
            });
            let Some((x, y)) = witness else {
                consistent = false;
                break;
            };
            let j = IndexSet::chain(1);
            let net = Net::constant(j, y);
            let trivial = Ideal::trivial(1);
            let rejects = converges_mode(space, &net, &trivial, &mode, x)?
                && !trivial.contains(net.defect(u));
            consistent = consistent && rejects && !enumerated.contains(&u);
        }
    }
    Ok(InducedTopology {
        exact,
        enumerated,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::FinitePoset;
    use crate::space::sierpinski;

    #[test]
    fn sierpinski_is_topology_matches_md_opens() {
        let sp = sierpinski();
        let t = induced_topology(&sp, ModeKind::Is, EnumBounds::default()).unwrap();
        assert_eq!(t.exact, sp.md_opens());
        assert_eq!(t.enumerated, t.exact);
        assert!(t.consistent);
    }

    #[test]
    fn discrete_igs_topology_is_the_power_set() {
        let sp = FiniteSpace::alexandroff(FinitePoset::discrete(2));
        let t = induced_topology(&sp, ModeKind::Igs, EnumBounds::default()).unwrap();
        assert_eq!(t.exact.len(), 4);
        assert_eq!(t.enumerated.len(), 4);
        assert!(t.consistent);
    }

    #[test]
    fn sierpinski_isl_contains_lawson() {
        let sp = sierpinski();
        let t = induced_topology(&sp, ModeKind::Isl, EnumBounds { max_index: 2 }).unwrap();
        assert_eq!(t.exact.len(), 4);
        for u in &t.exact {
            assert!(t.enumerated.contains(u));
        }
        assert!(t.consistent);
    }

    #[test]
    fn bad_bounds_and_modes_error() {
        let sp = sierpinski();
        assert!(matches!(
            induced_topology(&sp, ModeKind::Is, EnumBounds { max_index: 0 }),
            Err(IdealError::BadBounds)
        ));
        assert!(matches!(
            induced_topology(&sp, ModeKind::I, EnumBounds::default()),
            Err(IdealError::UnsupportedMode)
        ));
    }

    #[test]
    fn generator_bounded_family_on_larger_chains() {
        let j = IndexSet::chain(4);
        let ideals = enumeration_ideals(&j);
        assert!(ideals.iter().any(|i| !i.is_proper()));
        assert!(ideals.iter().any(|i| i.top() == PointSet::EMPTY));
        assert!(ideals.contains(&Ideal::i0(&j)));
    }
}
