//! The d-way-below relation, its set form, and the derived neighborhood data.

use crate::point_set::PointSet;
use crate::space::{FiniteSpace, SpaceError};

/// x ≪_d y: every directed set converging to y contains a point above x.
/// Computed definitionally over all nonempty directed subsets.
pub fn way_below_d(space: &FiniteSpace, x: usize, y: usize) -> bool {
    let up_x = space.poset().up(x);
    space
        .poset()
        .directed_subsets()
        .into_iter()
        .all(|d| !space.converges_directed(d, y) || d.meets(up_x))
}

/// G ≪_d H: every directed set converging to some point of H meets ↑G.
/// Both sets must be nonempty.
pub fn set_way_below_d(
    space: &FiniteSpace,
    g: PointSet,
    h: PointSet,
) -> Result<bool, SpaceError> {
    if g.is_empty() || h.is_empty() {
        return Err(SpaceError::EmptyDirectedSet);
    }
    let full = PointSet::full(space.n());
    if !g.is_subset_of(full) {
        return Err(SpaceError::NotInCarrier(g, space.n()));
    }
    if !h.is_subset_of(full) {
        return Err(SpaceError::NotInCarrier(h, space.n()));
    }
    Ok(set_way_below_unchecked(space, g, h))
}

pub(crate) fn set_way_below_unchecked(space: &FiniteSpace, g: PointSet, h: PointSet) -> bool {
    let up_g = space.poset().up_set(g);
    space.poset().directed_subsets().into_iter().all(|d| {
        let converges_into_h = space.convergence_points(d).meets(h);
        !converges_into_h || d.meets(up_g)
    })
}

/// ⟱_d x = {y : y ≪_d x}.
pub fn down_way_below(space: &FiniteSpace, x: usize) -> PointSet {
    PointSet::from_points((0..space.n()).filter(|&y| way_below_d(space, y, x)))
}

/// ↟_d x = {y : x ≪_d y}.
pub fn up_way_below(space: &FiniteSpace, x: usize) -> PointSet {
    PointSet::from_points((0..space.n()).filter(|&y| way_below_d(space, x, y)))
}

/// fin_d(x): all nonempty F with F ≪_d {x}.
pub fn fin_d(space: &FiniteSpace, x: usize) -> Vec<PointSet> {
    PointSet::all_subsets(space.n())
        .filter(|&f| !f.is_empty() && set_way_below_unchecked(space, f, PointSet::singleton(x)))
        .collect()
}

/// ⇑_d F = {x : F ≪_d x}.
pub fn up_way_below_of_set(space: &FiniteSpace, f: PointSet) -> PointSet {
    PointSet::from_points(
        (0..space.n())
            .filter(|&x| set_way_below_unchecked(space, f, PointSet::singleton(x))),
    )
}

#[derive(Debug, Clone)]
pub struct Neighborhoods {
    pub down_d: PointSet,
    pub up_d: PointSet,
    pub fin_d: Vec<PointSet>,
    pub int_up: PointSet,
    pub d_compact: bool,
}

pub fn neighborhoods(space: &FiniteSpace, x: usize) -> Result<Neighborhoods, SpaceError> {
    space.check_point(x)?;
    Ok(Neighborhoods {
        down_d: down_way_below(space, x),
        up_d: up_way_below(space, x),
        fin_d: fin_d(space, x),
        int_up: space.int(space.poset().up(x)),
        d_compact: way_below_d(space, x, x),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::FinitePoset;
    use crate::space::sierpinski;

    fn s(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    #[test]
    fn way_below_collapses_to_order_on_sierpinski() {
        let sp = sierpinski();
        assert!(way_below_d(&sp, 0, 1));
        assert!(way_below_d(&sp, 0, 0));
        assert!(!way_below_d(&sp, 1, 0));
    }

    #[test]
    fn set_way_below_example_on_chain() {
        let chain = FiniteSpace::alexandroff(FinitePoset::chain(3));
        assert!(set_way_below_d(&chain, s(&[0]), s(&[1, 2])).unwrap());
        assert!(!set_way_below_d(&chain, s(&[2]), s(&[0])).unwrap());
        assert!(set_way_below_d(&chain, PointSet::EMPTY, s(&[0])).is_err());
    }

    #[test]
    fn neighborhoods_on_sierpinski() {
        let sp = sierpinski();
        let nb = neighborhoods(&sp, 1).unwrap();
        assert_eq!(nb.down_d, s(&[0, 1]));
        assert_eq!(nb.up_d, s(&[1]));
        assert_eq!(nb.int_up, s(&[1]));
        assert!(nb.d_compact);
    }

    #[test]
    fn isolated_point_is_d_compact() {
        let disc = FiniteSpace::alexandroff(FinitePoset::discrete(3));
        let nb = neighborhoods(&disc, 1).unwrap();
        assert_eq!(nb.down_d, s(&[1]));
        assert!(nb.d_compact);
    }

    #[test]
    fn fin_d_on_chain_top() {
        // On the 3-chain every nonempty F has its least point below 2, so
        // every nonempty F is d-way-below {2}.
        let chain = FiniteSpace::alexandroff(FinitePoset::chain(3));
        let fam = fin_d(&chain, 2);
        assert_eq!(fam.len(), 7);
    }
}
