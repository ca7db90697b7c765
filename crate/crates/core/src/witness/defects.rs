//! Symbolic evaluation of net defect/hit sets over the natural-number index
//! set. Net patterns are a finite prefix plus a repeating block whose terms
//! are constants or linear chain ramps, so the defect of an upper set is
//! either finite (explicitly enumerable) or contains a whole arithmetic
//! progression — decidable in closed form against every ideal descriptor.

use super::{IdealDescriptor, NetDescriptor, NetTerm, SymPoint};
use std::collections::BTreeSet;

/// An upper set of a single-chain witness carrier: a set of finite-part
/// points plus an optional chain tail {k : k >= from}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct UpSetSym {
    pub fin: u32,
    pub tail: Option<u64>,
}

impl UpSetSym {
    pub fn contains(&self, p: &SymPoint) -> bool {
        match p {
            SymPoint::Fin(i) => self.fin & (1 << i) != 0,
            SymPoint::Chain { k, .. } => self.tail.is_some_and(|t| *k >= t),
        }
    }
}

/// A subset of the index set N, as far as ideal membership needs to know it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum IndexSetSym {
    Finite(BTreeSet<u64>),
    /// Contains a whole arithmetic progression (or a tail of one).
    Infinite,
}

impl IndexSetSym {
    pub fn in_ideal(&self, ideal: &IdealDescriptor) -> bool {
        match (self, ideal) {
            (_, IdealDescriptor::PowerSet) => true,
            (IndexSetSym::Infinite, _) => false,
            (IndexSetSym::Finite(_), IdealDescriptor::I0) => true,
            (IndexSetSym::Finite(set), IdealDescriptor::FiniteGenerated(gens)) => {
                set.iter().all(|j| gens.iter().any(|g| g.contains(j)))
            }
        }
    }
}

fn slot_indices_below(net: &NetDescriptor, slot: usize, cutoff: u64) -> impl Iterator<Item = u64> {
    let plen = net.prefix.len() as u64;
    let len = net.block.len() as u64;
    let first = plen + slot as u64;
    (0..)
        .map(move |m| first + m * len)
        .take_while(move |&j| j < cutoff)
}

/// {j : x_j ∉ S}.
pub(crate) fn defect_of(net: &NetDescriptor, s: &UpSetSym) -> IndexSetSym {
    let mut finite = BTreeSet::new();
    for (j, p) in net.prefix.iter().enumerate() {
        if !s.contains(p) {
            finite.insert(j as u64);
        }
    }
    for (slot, term) in net.block.iter().enumerate() {
        match term {
            NetTerm::Const(p) => {
                if !s.contains(p) {
                    return IndexSetSym::Infinite;
                }
            }
            NetTerm::Ramp { div, offset, .. } => {
                // Value j/div + offset is a chain point; it misses S exactly
                // when S has no tail or the value is below the tail start.
                match s.tail {
                    None => return IndexSetSym::Infinite,
                    Some(t) => {
                        if t > *offset {
                            let cutoff = div * (t - offset);
                            finite.extend(slot_indices_below(net, slot, cutoff));
                        }
                    }
                }
            }
        }
    }
    IndexSetSym::Finite(finite)
}

/// {j : x_j ∈ S}.
pub(crate) fn hits_of(net: &NetDescriptor, s: &UpSetSym) -> IndexSetSym {
    let mut finite = BTreeSet::new();
    for (j, p) in net.prefix.iter().enumerate() {
        if s.contains(p) {
            finite.insert(j as u64);
        }
    }
    for term in &net.block {
        match term {
            NetTerm::Const(p) => {
                if s.contains(p) {
                    return IndexSetSym::Infinite;
                }
            }
            NetTerm::Ramp { .. } => {
                // Ramp values grow without bound, so they land in any tail
                // cofinitely often.
                if s.tail.is_some() {
                    return IndexSetSym::Infinite;
                }
            }
        }
    }
    IndexSetSym::Finite(finite)
}

/// Decides ∀k: defect(fin ∪ tail(k)) ∈ I, the quantifier behind convergence
/// to points whose neighborhoods form an infinite descending family.
pub(crate) fn forall_tails_defect_in_ideal(
    net: &NetDescriptor,
    fin: u32,
    ideal: &IdealDescriptor,
) -> bool {
    match ideal {
        IdealDescriptor::PowerSet => true,
        IdealDescriptor::I0 => {
            // A constant slot must sit in the finite part: a chain-point
            // constant falls outside the tail for large k and floods the
            // defect with its whole progression. Ramp slots contribute
            // finitely for each k.
            net.block.iter().all(|term| match term {
                NetTerm::Const(SymPoint::Fin(i)) => fin & (1 << i) != 0,
                NetTerm::Const(SymPoint::Chain { .. }) => false,
                NetTerm::Ramp { .. } => true,
            })
        }
        IdealDescriptor::FiniteGenerated(gens) => {
            // Beyond the I0 condition, ramp slots are fatal (their finite
            // contributions grow without bound as k grows), and every prefix
            // index that ever defects must lie in the generators.
            let slots_ok = net.block.iter().all(|term| match term {
                NetTerm::Const(SymPoint::Fin(i)) => fin & (1 << i) != 0,
                _ => false,
            });
            if !slots_ok {
                return false;
            }
            net.prefix.iter().enumerate().all(|(j, p)| {
                let ever_defects = match p {
                    SymPoint::Fin(i) => fin & (1 << i) == 0,
                    // Falls out of the tail once k passes its value.
                    SymPoint::Chain { .. } => true,
                };
                !ever_defects || gens.iter().any(|g| g.contains(&(j as u64)))
            })
        }
    }
}

/// The chain window {n : defect(fin ∪ tail(n)) ∈ I}; down-closed because the
/// up-sets shrink as n grows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ChainWindow {
    All,
    Below(u64),
}

impl ChainWindow {
    pub fn contains(&self, n: u64) -> bool {
        match self {
            ChainWindow::All => true,
            ChainWindow::Below(t) => n < *t,
        }
    }

    pub fn unbounded(&self) -> bool {
        matches!(self, ChainWindow::All)
    }
}

pub(crate) fn chain_window_with_small_defect(
    net: &NetDescriptor,
    fin_of_up: u32,
    ideal: &IdealDescriptor,
) -> ChainWindow {
    match ideal {
        IdealDescriptor::PowerSet => ChainWindow::All,
        IdealDescriptor::I0 => {
            let mut bound: Option<u64> = None;
            for term in &net.block {
                match term {
                    NetTerm::Const(SymPoint::Fin(i)) => {
                        if fin_of_up & (1 << i) == 0 {
                            return ChainWindow::Below(0);
                        }
                    }
                    NetTerm::Const(SymPoint::Chain { k, .. }) => {
                        bound = Some(bound.map_or(k + 1, |b| b.min(k + 1)));
                    }
                    NetTerm::Ramp { .. } => {}
                }
            }
            match bound {
                Some(t) => ChainWindow::Below(t),
                None => ChainWindow::All,
            }
        }
        IdealDescriptor::FiniteGenerated(gens) => {
            // Scan upward; the defect grows with n, so the first failure is
            // the boundary. The cap is chosen so that any ramp slot must
            // have pushed an index beyond the generators by then.
            let max_gen = gens
                .iter()
                .flat_map(|g| g.iter().copied())
                .max()
                .unwrap_or(0);
            let plen = net.prefix.len() as u64;
            let len = net.block.len().max(1) as u64;
            let max_div_offset = net
                .block
                .iter()
                .filter_map(|t| match t {
                    NetTerm::Ramp { offset, .. } => Some(*offset + 2),
                    _ => None,
                })
                .max()
                .unwrap_or(0);
            let max_prefix_chain = net
                .prefix
                .iter()
                .filter_map(|p| match p {
                    SymPoint::Chain { k, .. } => Some(*k),
                    _ => None,
                })
                .max()
                .unwrap_or(0);
            let cap = max_gen + plen + 2 * len + max_div_offset + max_prefix_chain + 8;
            for n in 0..=cap {
                let s = UpSetSym {
                    fin: fin_of_up,
                    tail: Some(n),
                };
                if !defect_of(net, &s).in_ideal(ideal) {
                    return ChainWindow::Below(n);
                }
            }
            ChainWindow::All
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alternating() -> NetDescriptor {
        // x_{2n} = n, x_{2n+1} = a(=Fin 0)
        NetDescriptor {
            prefix: vec![],
            block: vec![
                NetTerm::Ramp {
                    chain: 0,
                    div: 2,
                    offset: 0,
                },
                NetTerm::Const(SymPoint::Fin(0)),
            ],
        }
    }

    #[test]
    fn defect_of_up_pair_is_finite() {
        // ↑{n, a} with a = Fin0, ∞ = Fin1: fin = {a, ∞}, tail from n.
        let net = alternating();
        let s = UpSetSym {
            fin: 0b11,
            tail: Some(3),
        };
        match defect_of(&net, &s) {
            IndexSetSym::Finite(set) => {
                // Even slots with value < 3: j ∈ {0, 2, 4}.
                assert_eq!(set.into_iter().collect::<Vec<_>>(), vec![0, 2, 4]);
            }
            IndexSetSym::Infinite => panic!("expected a finite defect"),
        }
    }

    #[test]
    fn defect_of_chain_up_is_infinite_because_of_the_constant_slot() {
        // ↑n = {∞} ∪ tail(n): the constant-a slot defects everywhere.
        let net = alternating();
        let s = UpSetSym {
            fin: 0b10,
            tail: Some(0),
        };
        assert_eq!(defect_of(&net, &s), IndexSetSym::Infinite);
    }

    #[test]
    fn forall_tails_matches_slotwise_analysis() {
        let net = alternating();
        // fin = {a, ∞}: the a-slot is absorbed, ramps are fine per tail.
        assert!(forall_tails_defect_in_ideal(&net, 0b11, &IdealDescriptor::I0));
        // fin = {∞} only: the a-slot floods some member.
        assert!(!forall_tails_defect_in_ideal(&net, 0b10, &IdealDescriptor::I0));
        assert!(forall_tails_defect_in_ideal(
            &net,
            0b10,
            &IdealDescriptor::PowerSet
        ));
        // Generated ideals cannot absorb the growing ramp contributions.
        assert!(!forall_tails_defect_in_ideal(
            &net,
            0b11,
            &IdealDescriptor::FiniteGenerated(vec![[0u64, 2].into_iter().collect()])
        ));
    }

    #[test]
    fn chain_window_of_the_alternating_net_is_empty_for_i0() {
        // ↑n has fin part {∞}: the constant-a slot defects at every n.
        let net = alternating();
        assert_eq!(
            chain_window_with_small_defect(&net, 0b10, &IdealDescriptor::I0),
            ChainWindow::Below(0)
        );
    }

    #[test]
    fn chain_window_of_a_pure_ramp_is_all() {
        let net = NetDescriptor {
            prefix: vec![],
            block: vec![NetTerm::Ramp {
                chain: 0,
                div: 1,
                offset: 0,
            }],
        };
        assert_eq!(
            chain_window_with_small_defect(&net, 0b10, &IdealDescriptor::I0),
            ChainWindow::All
        );
        // Under a generated ideal the growing chunks overflow the generators.
        match chain_window_with_small_defect(
            &net,
            0b10,
            &IdealDescriptor::FiniteGenerated(vec![[0u64].into_iter().collect()]),
        ) {
            ChainWindow::Below(t) => assert!(t <= 2),
            ChainWindow::All => panic!("generated ideal cannot hold every chunk"),
        }
    }

    #[test]
    fn hits_of_tail_from_ramp_is_infinite() {
        let net = alternating();
        let s = UpSetSym {
            fin: 0,
            tail: Some(5),
        };
        assert_eq!(hits_of(&net, &s), IndexSetSym::Infinite);
        let fin_only = UpSetSym {
            fin: 0b01,
            tail: None,
        };
        // Constant-a slot hits everywhere.
        assert_eq!(hits_of(&net, &fin_only), IndexSetSym::Infinite);
    }
}
