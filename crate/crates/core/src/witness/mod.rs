//! Catalogued countable witness spaces: finitely-presented carriers (a
//! finite part plus labelled ω-chains) with bespoke decision procedures for
//! order, convergence, d-way-below, and the ideal convergence modes over
//! descriptor classes. These cover the distinctions no finite space can
//! exhibit, since every finite T0 space is a c-space.

mod defects;
mod example63;
mod omega_chain;

pub use example63::Example63;
pub use omega_chain::OmegaChain;

use crate::ideal::ModeKind;
use crate::report::Report;
use crate::space::FiniteSpace;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("unknown witness `{0}`")]
    UnknownWitness(String),
    #[error("point `{0}` is not in the carrier")]
    BadPoint(String),
    #[error("descriptor does not denote a nonempty directed subset: {0}")]
    NotDirected(String),
    #[error("malformed descriptor: {0}")]
    Malformed(String),
    #[error("truncation depth must be at least 1")]
    BadTruncation,
    #[error("mode {0} is not supported on witness spaces")]
    UnsupportedMode(String),
}

/// A point of a witness carrier: a named finite-part point or the k-th
/// element of a labelled chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymPoint {
    Fin(usize),
    Chain { chain: usize, k: u64 },
}

impl SymPoint {
    pub fn nat(k: u64) -> Self {
        SymPoint::Chain { chain: 0, k }
    }
}

/// A nonempty directed subset of the carrier, in one of the catalogued
/// shapes. Completeness of the catalogue for convergence purposes is a
/// per-witness documented lemma with a bounded sanity check on truncations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectedDescriptor {
    FiniteSet(Vec<SymPoint>),
    ChainTail { chain: usize, from: u64 },
    TailUnion {
        chain: usize,
        from: u64,
        extra: Vec<SymPoint>,
    },
}

/// One term of a net pattern: a constant point or a chain ramp j ↦ ⌊j/div⌋ + offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NetTerm {
    Const(SymPoint),
    Ramp { chain: usize, div: u64, offset: u64 },
}

/// A net over the index set N: finite prefix then a repeating block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetDescriptor {
    pub prefix: Vec<SymPoint>,
    pub block: Vec<NetTerm>,
}

impl NetDescriptor {
    pub fn value_at(&self, j: u64) -> SymPoint {
        let plen = self.prefix.len() as u64;
        if j < plen {
            return self.prefix[j as usize];
        }
        let slot = ((j - plen) % self.block.len() as u64) as usize;
        match self.block[slot] {
            NetTerm::Const(p) => p,
            NetTerm::Ramp { chain, div, offset } => SymPoint::Chain {
                chain,
                k: j / div + offset,
            },
        }
    }

    /// The alternating pattern x_{2n} = chain point n, x_{2n+1} = p.
    pub fn alternating_with(p: SymPoint) -> Self {
        NetDescriptor {
            prefix: vec![],
            block: vec![
                NetTerm::Ramp {
                    chain: 0,
                    div: 2,
                    offset: 0,
                },
                NetTerm::Const(p),
            ],
        }
    }

    pub fn constant(p: SymPoint) -> Self {
        NetDescriptor {
            prefix: vec![],
            block: vec![NetTerm::Const(p)],
        }
    }

    pub fn identity_ramp() -> Self {
        NetDescriptor {
            prefix: vec![],
            block: vec![NetTerm::Ramp {
                chain: 0,
                div: 1,
                offset: 0,
            }],
        }
    }
}

/// An ideal over the index set N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealDescriptor {
    /// All finite subsets of N (the canonical admissible ideal of the chain).
    I0,
    /// Down+union closure of finitely many finite sets; the empty list gives
    /// the trivial ideal {∅}.
    FiniteGenerated(Vec<BTreeSet<u64>>),
    PowerSet,
}

impl IdealDescriptor {
    pub fn trivial() -> Self {
        IdealDescriptor::FiniteGenerated(Vec::new())
    }
}

/// Description of ⟱_d y on a witness carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DownSetDesc {
    Empty,
    /// Chain points 0..=k.
    ChainUpTo { chain: usize, k: u64 },
    WholeChain { chain: usize },
}

impl DownSetDesc {
    pub fn is_empty(&self) -> bool {
        matches!(self, DownSetDesc::Empty)
    }
}

/// Fixed operation contract: new witnesses can be added without touching the
/// deciders built on top (CLI, suites).
pub trait WitnessSpace {
    fn name(&self) -> &'static str;
    fn finite_point_names(&self) -> &'static [&'static str];
    fn chain_count(&self) -> usize;

    fn contains(&self, p: &SymPoint) -> bool;
    fn le(&self, x: &SymPoint, y: &SymPoint) -> bool;
    /// Supremum of the denoted directed set, when it exists in the carrier.
    fn sup_of(&self, d: &DirectedDescriptor) -> Option<SymPoint>;

    fn validate_descriptor(&self, d: &DirectedDescriptor) -> Result<(), WitnessError>;
    fn validate_net(&self, net: &NetDescriptor) -> Result<(), WitnessError>;

    /// Scott convergence of the denoted directed set to x.
    fn converges(&self, d: &DirectedDescriptor, x: &SymPoint) -> Result<bool, WitnessError>;
    fn way_below(&self, x: &SymPoint, y: &SymPoint) -> Result<bool, WitnessError>;
    fn set_way_below(&self, g: &[SymPoint], y: &SymPoint) -> Result<bool, WitnessError>;
    fn down_way_below(&self, y: &SymPoint) -> Result<DownSetDesc, WitnessError>;

    /// Flags: monotone_determined, c_space, locally_hypercompact,
    /// d_meet_continuous, with counterexample payloads on the false ones.
    fn classify(&self) -> Report;

    fn converges_mode(
        &self,
        net: &NetDescriptor,
        ideal: &IdealDescriptor,
        mode: ModeKind,
        x: &SymPoint,
    ) -> Result<bool, WitnessError>;

    /// Finite subspace on the finite part plus the first k chain elements,
    /// as an Alexandroff space, with the carrier labels. Truncations are
    /// c-spaces regardless of the witness (finite collapse), so they
    /// validate order-level facts only.
    fn truncate(&self, k: u64) -> Result<(FiniteSpace, Vec<SymPoint>), WitnessError>;

    /// Structural self-check: order axioms, open-family closure, convergence
    /// tables against the open characterization, descriptor completeness on
    /// truncations, truncation order agreement.
    fn self_check(&self) -> Report;

    fn parse_point(&self, s: &str) -> Result<SymPoint, WitnessError>;
    fn format_point(&self, p: &SymPoint) -> String;
}

pub fn witness_catalog() -> Vec<Box<dyn WitnessSpace>> {
    vec![Box::new(OmegaChain), Box::new(Example63)]
}

pub fn find_witness(name: &str) -> Result<Box<dyn WitnessSpace>, WitnessError> {
    let needle: String = name
        .chars()
        .filter(|c| c.is_ascii_alphanumeric())
        .collect::<String>()
        .to_ascii_lowercase();
    witness_catalog()
        .into_iter()
        .find(|w| {
            w.name()
                .chars()
                .filter(|c| c.is_ascii_alphanumeric())
                .collect::<String>()
                .to_ascii_lowercase()
                == needle
        })
        .ok_or_else(|| WitnessError::UnknownWitness(name.to_string()))
}

/// Shared truncation: chain points 0..k map to indices 0..k, then the finite
/// part in declared order.
pub(crate) fn truncate_single_chain(
    w: &dyn WitnessSpace,
    k: u64,
) -> Result<(FiniteSpace, Vec<SymPoint>), WitnessError> {
    if k < 1 {
        return Err(WitnessError::BadTruncation);
    }
    let mut labels: Vec<SymPoint> = (0..k).map(SymPoint::nat).collect();
    labels.extend((0..w.finite_point_names().len()).map(SymPoint::Fin));
    if labels.len() > crate::point_set::MAX_POINTS {
        return Err(WitnessError::BadTruncation);
    }
    let poset = crate::poset::FinitePoset::from_relation(labels.len(), |a, b| {
        w.le(&labels[a], &labels[b])
    })
    .expect("witness order restricts to a finite partial order");
    Ok((FiniteSpace::alexandroff(poset), labels))
}

/// Net pattern grammar: `alt:<p>`, `const:<p>`, `chain`, or
/// `pre:<p>,..;blk:<t>,..` with terms `c/<div>[+<offset>]` or a point.
pub fn parse_net_descriptor(
    w: &dyn WitnessSpace,
    text: &str,
) -> Result<NetDescriptor, WitnessError> {
    if let Some(p) = text.strip_prefix("alt:") {
        return Ok(NetDescriptor::alternating_with(w.parse_point(p)?));
    }
    if let Some(p) = text.strip_prefix("const:") {
        return Ok(NetDescriptor::constant(w.parse_point(p)?));
    }
    if text == "chain" {
        return Ok(NetDescriptor::identity_ramp());
    }
    let mut prefix = Vec::new();
    let mut block = Vec::new();
    for part in text.split(';') {
        if let Some(list) = part.strip_prefix("pre:") {
            for tok in list.split(',').filter(|t| !t.is_empty()) {
                prefix.push(w.parse_point(tok)?);
            }
        } else if let Some(list) = part.strip_prefix("blk:") {
            for tok in list.split(',').filter(|t| !t.is_empty()) {
                block.push(parse_term(w, tok)?);
            }
        } else {
            return Err(WitnessError::Malformed(format!(
                "unknown net pattern `{part}`"
            )));
        }
    }
    if block.is_empty() {
        return Err(WitnessError::Malformed("net needs a nonempty block".into()));
    }
    let net = NetDescriptor { prefix, block };
    w.validate_net(&net)?;
    Ok(net)
}

fn parse_term(w: &dyn WitnessSpace, tok: &str) -> Result<NetTerm, WitnessError> {
    if let Some(rest) = tok.strip_prefix("c/") {
        let (div_str, offset) = match rest.split_once('+') {
            Some((d, o)) => (
                d,
                o.parse::<u64>()
                    .map_err(|_| WitnessError::Malformed(format!("bad offset in `{tok}`")))?,
            ),
            None => (rest, 0),
        };
        let div: u64 = div_str
            .parse()
            .map_err(|_| WitnessError::Malformed(format!("bad divisor in `{tok}`")))?;
        if div == 0 {
            return Err(WitnessError::Malformed("ramp divisor must be positive".into()));
        }
        Ok(NetTerm::Ramp {
            chain: 0,
            div,
            offset,
        })
    } else {
        Ok(NetTerm::Const(w.parse_point(tok)?))
    }
}

/// Ideal grammar: `i0`, `powerset`, `trivial`, or `gen:{1,2};{5}`.
pub fn parse_ideal_descriptor(text: &str) -> Result<IdealDescriptor, WitnessError> {
    match text {
        "i0" => Ok(IdealDescriptor::I0),
        "powerset" => Ok(IdealDescriptor::PowerSet),
        "trivial" => Ok(IdealDescriptor::trivial()),
        other => {
            let body = other
                .strip_prefix("gen:")
                .ok_or_else(|| WitnessError::Malformed(format!("unknown ideal `{other}`")))?;
            let mut gens = Vec::new();
            for group in body.split(';') {
                let inner = group
                    .trim()
                    .trim_start_matches(['{', '['])
                    .trim_end_matches(['}', ']']);
                let mut set = BTreeSet::new();
                for tok in inner.split(',').filter(|t| !t.trim().is_empty()) {
                    let v: u64 = tok.trim().parse().map_err(|_| {
                        WitnessError::Malformed(format!("bad index `{tok}` in ideal"))
                    })?;
                    set.insert(v);
                }
                gens.push(set);
            }
            Ok(IdealDescriptor::FiniteGenerated(gens))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_contains_both_witnesses() {
        let names: Vec<&str> = witness_catalog().iter().map(|w| w.name()).collect();
        assert!(names.contains(&"OmegaChain"));
        assert!(names.contains(&"Example63"));
        assert!(find_witness("example63").is_ok());
        assert!(find_witness("omega-chain").is_ok());
        assert!(find_witness("nope").is_err());
    }

    #[test]
    fn every_catalog_entry_passes_its_self_check() {
        for w in witness_catalog() {
            let report = w.self_check();
            assert!(report.all_true(), "{}: {report:?}", w.name());
        }
    }

    #[test]
    fn net_pattern_values() {
        let net = NetDescriptor::alternating_with(SymPoint::Fin(0));
        assert_eq!(net.value_at(0), SymPoint::nat(0));
        assert_eq!(net.value_at(1), SymPoint::Fin(0));
        assert_eq!(net.value_at(4), SymPoint::nat(2));
        let pre = NetDescriptor {
            prefix: vec![SymPoint::nat(7)],
            block: vec![NetTerm::Const(SymPoint::nat(1))],
        };
        assert_eq!(pre.value_at(0), SymPoint::nat(7));
        assert_eq!(pre.value_at(3), SymPoint::nat(1));
    }

    #[test]
    fn ideal_grammar() {
        assert_eq!(parse_ideal_descriptor("i0").unwrap(), IdealDescriptor::I0);
        assert_eq!(
            parse_ideal_descriptor("trivial").unwrap(),
            IdealDescriptor::FiniteGenerated(vec![])
        );
        match parse_ideal_descriptor("gen:{0,2};{5}").unwrap() {
            IdealDescriptor::FiniteGenerated(gens) => {
                assert_eq!(gens.len(), 2);
                assert!(gens[0].contains(&2));
                assert!(gens[1].contains(&5));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_ideal_descriptor("bogus").is_err());
    }
}
