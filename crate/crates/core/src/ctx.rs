//! Per-space enumeration cache. The quantifier loops over directed subsets
//! appear in nearly every check; this caches the directed family, each
//! member's convergence points, and each member's down-set once per space.
//! All deciders built on it remain definitional — the cache only avoids
//! recomputing the same enumerations.

use crate::point_set::PointSet;
use crate::space::FiniteSpace;

pub(crate) struct SpaceCtx<'a> {
    pub space: &'a FiniteSpace,
    pub directed: Vec<PointSet>,
    /// conv[k] = set of points directed[k] converges to.
    pub conv: Vec<PointSet>,
    /// downs[k] = ↓ directed[k].
    pub downs: Vec<PointSet>,
}

impl<'a> SpaceCtx<'a> {
    pub fn new(space: &'a FiniteSpace) -> Self {
        let directed = space.poset().directed_subsets();
        let conv = directed
            .iter()
            .map(|&d| space.convergence_points(d))
            .collect();
        let downs = directed
            .iter()
            .map(|&d| space.poset().down_set(d))
            .collect();
        SpaceCtx {
            space,
            directed,
            conv,
            downs,
        }
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn way_below(&self, x: usize, y: usize) -> bool {
        let up_x = self.space.poset().up(x);
        self.directed
            .iter()
            .zip(&self.conv)
            .all(|(&d, &c)| !c.contains(y) || d.meets(up_x))
    }

    /// ⟱_d x as the intersection of ↓D over every directed D converging to x
    /// (y ≪_d x iff ↑y meets every such D iff y ∈ ↓D for every such D).
    pub fn down_wb(&self, x: usize) -> PointSet {
        self.conv
            .iter()
            .zip(&self.downs)
            .filter(|(c, _)| c.contains(x))
            .fold(PointSet::full(self.n()), |acc, (_, &dn)| acc.intersect(dn))
    }

    pub fn set_way_below(&self, g: PointSet, h: PointSet) -> bool {
        let up_g = self.space.poset().up_set(g);
        self.directed
            .iter()
            .zip(&self.conv)
            .all(|(&d, &c)| !c.meets(h) || d.meets(up_g))
    }

    /// fin_d(x): nonempty F with F ≪_d {x}, i.e. F meets ↓D for every D → x.
    pub fn fin_d(&self, x: usize) -> Vec<PointSet> {
        let constraints: Vec<PointSet> = self
            .conv
            .iter()
            .zip(&self.downs)
            .filter(|(c, _)| c.contains(x))
            .map(|(_, &dn)| dn)
            .collect();
        PointSet::all_subsets(self.n())
            .filter(|&f| !f.is_empty() && constraints.iter().all(|&dn| f.meets(dn)))
            .collect()
    }

    /// Ã(A): some directed D ⊆ ↓A ∩ ↓x converges to x.
    pub fn tilde(&self, a: PointSet) -> PointSet {
        let down_a = self.space.poset().down_set(a);
        PointSet::from_points((0..self.n()).filter(|&x| {
            let fence = down_a.intersect(self.space.poset().down(x));
            self.directed
                .iter()
                .zip(&self.conv)
                .any(|(&d, &c)| d.is_subset_of(fence) && c.contains(x))
        }))
    }

    /// Â(A): some directed D ⊆ ↓A converges to x.
    pub fn hat(&self, a: PointSet) -> PointSet {
        let down_a = self.space.poset().down_set(a);
        PointSet::from_points((0..self.n()).filter(|&x| {
            self.directed
                .iter()
                .zip(&self.conv)
                .any(|(&d, &c)| d.is_subset_of(down_a) && c.contains(x))
        }))
    }
}

/// All Smyth-directed families of nonempty subsets. Exponential; callers must
/// keep n tiny (the bounded IGS cross-check uses n <= 3).
pub(crate) fn smyth_directed_families(space: &FiniteSpace) -> Vec<Vec<PointSet>> {
    let nonempty: Vec<PointSet> = PointSet::all_subsets(space.n())
        .filter(|s| !s.is_empty())
        .collect();
    let mut out = Vec::new();
    for mask in 1u64..(1 << nonempty.len()) {
        let fam: Vec<PointSet> = nonempty
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &f)| f)
            .collect();
        if space.poset().is_smyth_directed(&fam) {
            out.push(fam);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::waybelow;

    /// The cached paths must agree with the plain definitional functions.
    #[test]
    fn ctx_agrees_with_direct_definitions() {
        for n in 1..=3 {
            for p in crate::enumerate::labeled_posets(n).unwrap() {
                let sp = FiniteSpace::alexandroff(p);
                let ctx = SpaceCtx::new(&sp);
                for x in 0..n {
                    assert_eq!(ctx.down_wb(x), waybelow::down_way_below(&sp, x));
                    assert_eq!(ctx.fin_d(x), waybelow::fin_d(&sp, x));
                    for y in 0..n {
                        assert_eq!(ctx.way_below(x, y), waybelow::way_below_d(&sp, x, y));
                    }
                }
                for a in PointSet::all_subsets(n) {
                    assert_eq!(ctx.tilde(a), crate::closure::tilde(&sp, a));
                    assert_eq!(ctx.hat(a), crate::closure::hat(&sp, a));
                    for b in PointSet::all_subsets(n) {
                        if !a.is_empty() && !b.is_empty() {
                            assert_eq!(
                                ctx.set_way_below(a, b),
                                waybelow::set_way_below_d(&sp, a, b).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }
}
