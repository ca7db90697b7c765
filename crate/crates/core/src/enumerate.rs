//! Enumeration of all labeled partial orders on n points.

use crate::point_set::PointSet;
use crate::poset::FinitePoset;
use rand::Rng;
use thiserror::Error;

/// Number of labeled posets on 0..=6 points (A001035).
pub const LABELED_POSET_COUNTS: [u64; 7] = [1, 1, 3, 19, 219, 4231, 130023];

pub const MAX_ENUMERATION_N: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("n must be between 1 and {MAX_ENUMERATION_N}, got {0}")]
    OutOfRange(usize),
}

/// All labeled posets on `{0, .., n-1}` in a canonical deterministic order.
///
/// Each poset on n points restricts to a poset on the first n-1 points; the
/// last point contributes a lower set D (strictly below it), an upper set U
/// (strictly above it) with D ∩ U = ∅ and D × U inside the existing order.
/// Every labeled poset arises exactly once this way.
pub fn labeled_posets(n: usize) -> Result<Vec<FinitePoset>, EnumerateError> {
    if n == 0 || n > MAX_ENUMERATION_N {
        return Err(EnumerateError::OutOfRange(n));
    }
    let mut level: Vec<Vec<PointSet>> = vec![vec![PointSet::singleton(0)]];
    for m in 1..n {
        let mut next = Vec::new();
        for base in &level {
            extend_with_point(base, m, &mut next);
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|up| FinitePoset::from_up_masks(n, up))
        .collect())
}

fn extend_with_point(base: &[PointSet], m: usize, out: &mut Vec<Vec<PointSet>>) {
    let poset = FinitePoset::from_up_masks(m, base.to_vec());
    for below in PointSet::all_subsets(m) {
        if !poset.is_lower(below) {
            continue;
        }
        for above in PointSet::all_subsets(m) {
            if !poset.is_upper(above) || below.meets(above) {
                continue;
            }
            // d < m < u forces d < u, which must already hold.
            let ok = below
                .iter()
                .all(|d| above.is_subset_of(poset.up(d)));
            if !ok {
                continue;
            }
            let mut up: Vec<PointSet> = base.to_vec();
            for d in below.iter() {
                up[d] = up[d].with(m);
            }
            up.push(above.with(m));
            out.push(up);
        }
    }
}

/// Iterator form; yields each labeled poset exactly once, in canonical order.
pub struct PosetEnumerator {
    inner: std::vec::IntoIter<FinitePoset>,
}

impl PosetEnumerator {
    pub fn new(n: usize) -> Result<Self, EnumerateError> {
        Ok(PosetEnumerator {
            inner: labeled_posets(n)?.into_iter(),
        })
    }
}

impl Iterator for PosetEnumerator {
    type Item = FinitePoset;
    fn next(&mut self) -> Option<FinitePoset> {
        self.inner.next()
    }
}

/// Independent oracle: filter every candidate relation matrix. Only feasible
/// for n <= 4 (2^(n(n-1)) candidates).
pub fn brute_force_labeled_poset_count(n: usize) -> u64 {
    assert!(n <= 4);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .collect();
    let mut count = 0u64;
    for mask in 0u32..(1 << pairs.len()) {
        let leq = |i: usize, j: usize| {
            i == j
                || pairs
                    .iter()
                    .position(|&p| p == (i, j))
                    .is_some_and(|k| mask & (1 << k) != 0)
        };
        if FinitePoset::from_relation(n, leq).is_ok() {
            count += 1;
        }
    }
    count
}

/// Random poset for sampled suite runs beyond the exhaustive caps: random
/// edges on a shuffled carrier, then transitive closure (acyclic by
/// construction, so always a valid poset).
pub fn random_poset<R: Rng>(rng: &mut R, n: usize) -> FinitePoset {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if rng.gen_bool(0.35) {
                pairs.push((perm[a], perm[b]));
            }
        }
    }
    FinitePoset::from_le_pairs(n, &pairs).expect("random DAG closure is a poset")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        for n in 1..=5 {
            assert_eq!(
                labeled_posets(n).unwrap().len() as u64,
                LABELED_POSET_COUNTS[n],
                "n={n}"
            );
        }
    }

    #[test]
    fn counts_match_brute_force_oracle() {
        for n in 1..=4 {
            assert_eq!(
                labeled_posets(n).unwrap().len() as u64,
                brute_force_labeled_poset_count(n)
            );
        }
    }

    #[test]
    fn every_emitted_relation_is_a_valid_poset_and_unique() {
        for n in 1..=4 {
            let posets = labeled_posets(n).unwrap();
            for p in &posets {
                p.validate().unwrap();
            }
            let mut keys: Vec<Vec<u32>> = posets
                .iter()
                .map(|p| (0..n).map(|i| p.up(i).bits()).collect())
                .collect();
            keys.sort();
            keys.dedup();
            assert_eq!(keys.len(), posets.len());
        }
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(labeled_posets(0).is_err());
        assert!(labeled_posets(7).is_err());
    }

    #[test]
    fn random_posets_are_valid() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            random_poset(&mut rng, 7).validate().unwrap();
        }
    }
}
