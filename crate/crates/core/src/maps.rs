//! Maps between finite spaces: monotonicity, topological continuity, and
//! monotone determined continuity computed independently; retract search.

use crate::point_set::PointSet;
use crate::report::{Counterexample, Report};
use crate::space::FiniteSpace;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("table length {0} does not match domain size {1}")]
    TableSize(usize, usize),
    #[error("table value {0} out of range for codomain of size {1}")]
    ValueOutOfRange(usize, usize),
    #[error("retract search space {0} exceeds the cap of 10^7 function pairs")]
    SearchSpaceTooLarge(u128),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMap {
    pub domain: FiniteSpace,
    pub codomain: FiniteSpace,
    pub table: Vec<usize>,
}

impl FiniteMap {
    pub fn new(
        domain: FiniteSpace,
        codomain: FiniteSpace,
        table: Vec<usize>,
    ) -> Result<Self, MapError> {
        if table.len() != domain.n() {
            return Err(MapError::TableSize(table.len(), domain.n()));
        }
        if let Some(&v) = table.iter().find(|&&v| v >= codomain.n()) {
            return Err(MapError::ValueOutOfRange(v, codomain.n()));
        }
        Ok(FiniteMap {
            domain,
            codomain,
            table,
        })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn image(&self, a: PointSet) -> PointSet {
        PointSet::from_points(a.iter().map(|x| self.table[x]))
    }

    pub fn preimage(&self, b: PointSet) -> PointSet {
        PointSet::from_points((0..self.domain.n()).filter(|&x| b.contains(self.table[x])))
    }
}

#[derive(Debug, Clone)]
pub struct MapReport {
    pub monotone: bool,
    pub continuous: bool,
    pub md_continuous: bool,
    pub counterexample: Option<Counterexample>,
}

impl MapReport {
    pub fn to_report(&self) -> Report {
        let mut r = Report::new();
        let cex = self.counterexample.clone();
        r.flag("monotone", self.monotone, || cex.clone().unwrap_or_default());
        let cex2 = self.counterexample.clone();
        r.flag("continuous", self.continuous, || {
            cex2.clone().unwrap_or_default()
        });
        let cex3 = self.counterexample.clone();
        r.flag("monotone_determined_continuous", self.md_continuous, || {
            cex3.clone().unwrap_or_default()
        });
        r
    }
}

/// Monotone / topologically continuous / monotone determined continuous,
/// each computed from its own definition.
pub fn map_check(f: &FiniteMap) -> MapReport {
    let x_space = &f.domain;
    let y_space = &f.codomain;
    let mut counterexample = None;

    let mut monotone = true;
    'mono: for a in 0..x_space.n() {
        for b in 0..x_space.n() {
            if x_space.poset().le(a, b) && !y_space.poset().le(f.apply(a), f.apply(b)) {
                monotone = false;
                counterexample = Some(
                    Counterexample::new("order-reversing pair")
                        .with("pair", format!("{a} <= {b}"))
                        .with(
                            "images",
                            format!("f({a})={}, f({b})={}", f.apply(a), f.apply(b)),
                        ),
                );
                break 'mono;
            }
        }
    }

    let mut continuous = true;
    for &v in y_space.opens() {
        if !x_space.is_open(f.preimage(v)) {
            continuous = false;
            if counterexample.is_none() {
                counterexample = Some(
                    Counterexample::new("preimage of an open is not open")
                        .with("open", v)
                        .with("preimage", f.preimage(v)),
                );
            }
            break;
        }
    }

    // Monotone and preserves directed limits: (D, x) convergent in X forces
    // (f(D), f(x)) convergent in Y, with f(D) directed.
    let mut md_continuous = monotone;
    if md_continuous {
        'md: for d in x_space.poset().directed_subsets() {
            let image = f.image(d);
            let conv = x_space.convergence_points(d);
            for x in conv.iter() {
                if !y_space.poset().is_directed(image)
                    || !y_space.converges_directed(image, f.apply(x))
                {
                    md_continuous = false;
                    if counterexample.is_none() {
                        counterexample = Some(
                            Counterexample::new("directed limit not preserved")
                                .with("set", d)
                                .with("point", x),
                        );
                    }
                    break 'md;
                }
            }
        }
    }

    MapReport {
        monotone,
        continuous,
        md_continuous,
        counterexample,
    }
}

fn is_continuous(x_space: &FiniteSpace, y_space: &FiniteSpace, table: &[usize]) -> bool {
    y_space.opens().iter().all(|&v| {
        let pre = PointSet::from_points(
            (0..x_space.n()).filter(|&x| v.contains(table[x])),
        );
        x_space.is_open(pre)
    })
}

/// Searches all function pairs for continuous r: X → Y, s: Y → X with
/// r ∘ s = id_Y. Returns the lexicographically least pair (r table first,
/// then s table) or None. Errors if |Y|^|X| · |X|^|Y| exceeds 10^7.
pub fn find_retract(
    x_space: &FiniteSpace,
    y_space: &FiniteSpace,
) -> Result<Option<(FiniteMap, FiniteMap)>, MapError> {
    let nx = x_space.n() as u128;
    let ny = y_space.n() as u128;
    if nx == 0 || ny == 0 {
        return Ok(None);
    }
    let space_size = ny.pow(x_space.n() as u32) * nx.pow(y_space.n() as u32);
    if space_size > 10_000_000 {
        return Err(MapError::SearchSpaceTooLarge(space_size));
    }
    let r_tables = all_tables(x_space.n(), y_space.n());
    let s_tables = all_tables(y_space.n(), x_space.n());
    let continuous_s: Vec<&Vec<usize>> = s_tables
        .iter()
        .filter(|s| is_continuous(y_space, x_space, s))
        .collect();
    for r in &r_tables {
        if !is_continuous(x_space, y_space, r) {
            continue;
        }
        for s in &continuous_s {
            if (0..y_space.n()).all(|y| r[s[y]] == y) {
                let r_map =
                    FiniteMap::new(x_space.clone(), y_space.clone(), r.clone()).unwrap();
                let s_map =
                    FiniteMap::new(y_space.clone(), x_space.clone(), (*s).clone()).unwrap();
                return Ok(Some((r_map, s_map)));
            }
        }
    }
    Ok(None)
}

/// All functions dom → cod as tables, in lexicographic order.
fn all_tables(dom: usize, cod: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut table = vec![0usize; dom];
    loop {
        out.push(table.clone());
        // Odometer increment with the leftmost slot most significant.
        let mut i = dom;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if table[i] + 1 < cod {
                table[i] += 1;
                for t in table.iter_mut().skip(i + 1) {
                    *t = 0;
                }
                break;
            }
        }
    }
}
