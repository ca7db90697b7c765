//! Property tests over randomly generated posets and spaces.

use mdspace::dsl::{emit_poset, parse_space};
use mdspace::poset::FinitePoset;
use mdspace::point_set::PointSet;
use mdspace::rudin::rudin_transversal;
use mdspace::FiniteSpace;
use proptest::prelude::*;

/// Random poset as a strategy: random edges on a shuffled carrier closed
/// transitively, which is always acyclic.
fn arb_poset(max_n: usize) -> impl Strategy<Value = FinitePoset> {
    (1..=max_n, proptest::collection::vec(any::<u16>(), 0..20)).prop_map(|(n, edges)| {
        let pairs: Vec<(usize, usize)> = edges
            .iter()
            .map(|&e| {
                let i = (e as usize / n) % n;
                let j = e as usize % n;
                (i.min(j), i.max(j))
            })
            .filter(|(i, j)| i != j)
            .collect();
        FinitePoset::from_le_pairs(n, &pairs).expect("acyclic by construction")
    })
}

proptest! {
    #[test]
    fn dsl_round_trips(poset in arb_poset(6)) {
        let text = emit_poset(&poset);
        let space = parse_space(&text).unwrap();
        prop_assert_eq!(space.poset(), &poset);
    }

    #[test]
    fn closure_interior_duality(poset in arb_poset(5), bits in any::<u32>()) {
        let space = FiniteSpace::alexandroff(poset);
        let a = PointSet::from_bits(bits & PointSet::full(space.n()).bits());
        let complement = a.complement(space.n());
        prop_assert_eq!(space.cl(a), space.int(complement).complement(space.n()));
    }

    #[test]
    fn directed_convergence_is_bounded_above(poset in arb_poset(5), bits in any::<u32>(), x in 0usize..5) {
        let space = FiniteSpace::alexandroff(poset);
        let x = x % space.n();
        let d = PointSet::from_bits(bits & PointSet::full(space.n()).bits());
        if !d.is_empty() && space.poset().is_directed(d) {
            // Finite collapse of net convergence: D → x iff x is below the
            // greatest element of D.
            let greatest = space.poset().greatest_of(d).unwrap();
            prop_assert_eq!(
                space.converges(d, x).unwrap(),
                space.poset().le(x, greatest)
            );
        }
    }

    #[test]
    fn rudin_output_ignores_family_order(poset in arb_poset(4), perm in any::<u64>()) {
        // A fixed Smyth-directed family given in two different orders must
        // produce the same transversal.
        let n = poset.n();
        let full = PointSet::full(n);
        let single = PointSet::singleton(0).intersect(full);
        if single.is_empty() {
            return Ok(());
        }
        let mut family = vec![single, full];
        if poset.is_smyth_directed(&family) {
            let first = rudin_transversal(&poset, &family).unwrap();
            if perm % 2 == 1 {
                family.reverse();
            }
            let second = rudin_transversal(&poset, &family).unwrap();
            prop_assert_eq!(first, second);
        }
    }

    #[test]
    fn specialization_is_involutive(poset in arb_poset(6)) {
        let space = FiniteSpace::alexandroff(poset.clone());
        prop_assert_eq!(space.specialization(), poset);
    }
}
