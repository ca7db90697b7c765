//! Closure-style operators on subsets: order hulls, topological closure and
//! interior, the two way-below approximations, and the one-step operators.

use crate::point_set::PointSet;
use crate::space::FiniteSpace;
use crate::waybelow::down_way_below;

/// All eight operators evaluated on one subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureSuite {
    pub up: PointSet,
    pub down: PointSet,
    pub closure: PointSet,
    pub interior: PointSet,
    /// A^{↓≪} = {x ∈ A : ⟱_d x meets A}.
    pub lower_approx: PointSet,
    /// A^{↑≪} = {x : ⟱_d x ⊆ ↓A}.
    pub upper_approx: PointSet,
    /// Ã = {x : some directed D ⊆ ↓A ∩ ↓x converges to x}.
    pub one_step: PointSet,
    /// Â = {x : some directed D ⊆ ↓A converges to x}.
    pub weak_one_step: PointSet,
}

/// Ã(A): directed witnesses confined to ↓A ∩ ↓x.
pub fn tilde(space: &FiniteSpace, a: PointSet) -> PointSet {
    let down_a = space.poset().down_set(a);
    PointSet::from_points((0..space.n()).filter(|&x| {
        let fence = down_a.intersect(space.poset().down(x));
        space
            .poset()
            .directed_subsets()
            .into_iter()
            .any(|d| d.is_subset_of(fence) && space.converges_directed(d, x))
    }))
}

/// Â(A): directed witnesses confined to ↓A.
pub fn hat(space: &FiniteSpace, a: PointSet) -> PointSet {
    let down_a = space.poset().down_set(a);
    PointSet::from_points((0..space.n()).filter(|&x| {
        space
            .poset()
            .directed_subsets()
            .into_iter()
            .any(|d| d.is_subset_of(down_a) && space.converges_directed(d, x))
    }))
}

pub fn closure_suite(space: &FiniteSpace, a: PointSet) -> ClosureSuite {
    let poset = space.poset();
    let down = poset.down_set(a);
    let closure = space.cl(a);
    let one_step = tilde(space, a);
    let weak_one_step = hat(space, a);
    let suite = ClosureSuite {
        up: poset.up_set(a),
        down,
        closure,
        interior: space.int(a),
        lower_approx: PointSet::from_points(
            a.iter().filter(|&x| down_way_below(space, x).meets(a)),
        ),
        upper_approx: PointSet::from_points(
            (0..space.n()).filter(|&x| down_way_below(space, x).is_subset_of(down)),
        ),
        one_step,
        weak_one_step,
    };
    // A ⊆ ↓A ⊆ Ã ⊆ cl(A) and Ã ⊆ Â ⊆ cl(A) hold in every monotone
    // determined space; a violation here is a bug, not an input condition.
    assert!(a.is_subset_of(suite.down), "A ⊆ ↓A failed on {a}");
    assert!(suite.down.is_subset_of(suite.one_step), "↓A ⊆ Ã failed on {a}");
    assert!(
        suite.one_step.is_subset_of(suite.closure),
        "Ã ⊆ cl(A) failed on {a}"
    );
    assert!(
        suite.one_step.is_subset_of(suite.weak_one_step),
        "Ã ⊆ Â failed on {a}"
    );
    assert!(
        suite.weak_one_step.is_subset_of(suite.closure),
        "Â ⊆ cl(A) failed on {a}"
    );
    suite
}

/// cl(A) = Ã(A) for every subset.
pub fn has_one_step_closure(space: &FiniteSpace) -> bool {
    PointSet::all_subsets(space.n()).all(|a| tilde(space, a) == space.cl(a))
}

/// cl(A) = Â(A) for every subset.
pub fn has_weak_one_step_closure(space: &FiniteSpace) -> bool {
    PointSet::all_subsets(space.n()).all(|a| hat(space, a) == space.cl(a))
}
