//! Bounded verification of the convergence-theoretic propositions on one
//! finite space: every (index chain, ideal, net, point) context within the
//! bounds is enumerated and each proposition is asserted on all of them.
//!
//! All mode decisions flow through a `ConvergenceOracle`, so a deliberately
//! corrupted oracle lets the harness demonstrate that disagreements are
//! detected and reported, not absorbed.

use super::modes::{ConvergenceOracle, ExactOracle, Mode, ModeKind, Topology};
use super::topology::{enumeration_ideals, EnumBounds};
use super::{Ideal, IdealError, IndexSet, Net};
use crate::classify::classify;
use crate::point_set::PointSet;
use crate::poset::FinitePoset;
use crate::report::{Counterexample, PropResult};
use crate::space::FiniteSpace;
use crate::waybelow::down_way_below;

/// Per-context decisions for the seven mode queries.
struct Context {
    net: Net,
    ideal: Ideal,
    x: usize,
    i_tau: bool,
    i_lawson: bool,
    liminf: bool,
    is_: bool,
    isl: bool,
    igs: bool,
    igsl: bool,
}

impl Context {
    fn cex(&self, detail: impl Into<String>) -> Counterexample {
        Counterexample::new(detail)
            .with("net", self.net.describe())
            .with("ideal", self.ideal.describe())
            .with("point", self.x)
    }
}

fn build_contexts(
    space: &FiniteSpace,
    bounds: EnumBounds,
    oracle: &dyn ConvergenceOracle,
) -> Result<Vec<Context>, IdealError> {
    if bounds.max_index == 0 {
        return Err(IdealError::BadBounds);
    }
    let mut out = Vec::new();
    for jk in 1..=bounds.max_index {
        let j = IndexSet::chain(jk);
        for ideal in enumeration_ideals(&j) {
            for net in Net::all(&j, space) {
                for x in 0..space.n() {
                    let q = |mode: Mode| oracle.converges(space, &net, &ideal, &mode, x);
                    out.push(Context {
                        i_tau: q(Mode::new(ModeKind::I))?,
                        i_lawson: q(Mode::wrt_lawson(ModeKind::I))?,
                        liminf: q(Mode::new(ModeKind::LimInf))?,
                        is_: q(Mode::new(ModeKind::Is))?,
                        isl: q(Mode::new(ModeKind::Isl))?,
                        igs: q(Mode::new(ModeKind::Igs))?,
                        igsl: q(Mode::new(ModeKind::Igsl))?,
                        net: net.clone(),
                        ideal: ideal.clone(),
                        x,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// First-failure scan over contexts, reported with a counterexample.
fn scan(
    id: &str,
    contexts: &[Context],
    mut pred: impl FnMut(&Context) -> bool,
    detail: &str,
) -> PropResult {
    for ctx in contexts {
        if !pred(ctx) {
            return PropResult::fail(id, contexts.len() as u64, ctx.cex(detail));
        }
    }
    PropResult::pass(id, contexts.len() as u64)
}

/// The family of sets U such that every converging context with target in U
/// has an ideal-small defect for U.
fn induced_family(space: &FiniteSpace, contexts: &[Context], mode_of: impl Fn(&Context) -> bool) -> Vec<PointSet> {
    PointSet::all_subsets(space.n())
        .filter(|&u| {
            contexts.iter().all(|c| {
                !(mode_of(c) && u.contains(c.x)) || c.ideal.contains(c.net.defect(u))
            })
        })
        .collect()
}

pub fn check_section(
    space: &FiniteSpace,
    section: u8,
    bounds: EnumBounds,
) -> Result<Vec<PropResult>, IdealError> {
    check_section_with(space, section, bounds, &ExactOracle)
}

pub fn check_section_with(
    space: &FiniteSpace,
    section: u8,
    bounds: EnumBounds,
    oracle: &dyn ConvergenceOracle,
) -> Result<Vec<PropResult>, IdealError> {
    let contexts = build_contexts(space, bounds, oracle)?;
    match section {
        5 => Ok(check_section5(space, &contexts, bounds, oracle)),
        6 => Ok(check_section6(space, &contexts, oracle)),
        _ => Err(IdealError::BadBounds),
    }
}

fn check_section5(
    space: &FiniteSpace,
    contexts: &[Context],
    bounds: EnumBounds,
    oracle: &dyn ConvergenceOracle,
) -> Vec<PropResult> {
    let n = space.n();
    let mut results = Vec::new();

    results.push(scan(
        "Lemma5.4",
        contexts,
        |c| !c.is_ || c.i_tau,
        "IS-convergent but not I-convergent w.r.t. the topology",
    ));

    // Directed subsets as nets over themselves with I0: IS iff plain
    // topological convergence of the directed set.
    {
        let mut cases = 0u64;
        let mut cex = None;
        'outer: for d in space.poset().directed_subsets() {
            let points = d.points();
            if points.len() > bounds.max_index {
                continue;
            }
            let sub = FinitePoset::from_relation(points.len(), |a, b| {
                space.poset().le(points[a], points[b])
            })
            .expect("induced order of a subset is a poset");
            let j = IndexSet::new(sub).expect("a directed subset indexes itself");
            let i0 = Ideal::i0(&j);
            let net = Net {
                index: j,
                values: points.clone(),
            };
            for x in 0..n {
                cases += 1;
                let is_ = oracle
                    .converges(space, &net, &i0, &Mode::new(ModeKind::Is), x)
                    .expect("validated inputs");
                if is_ != space.converges_directed(d, x) {
                    cex = Some(
                        Counterexample::new("directed-set net with I0 disagrees with τ-convergence")
                            .with("set", d)
                            .with("point", x),
                    );
                    break 'outer;
                }
            }
        }
        results.push(match cex {
            None => PropResult::pass("Lemma5.4-directed-nets", cases),
            Some(c) => PropResult::fail("Lemma5.4-directed-nets", cases, c),
        });
    }

    // x ≪_d y iff every IS-convergence to y under a proper ideal puts the
    // defect of ↑x in the ideal.
    {
        let mut cases = 0u64;
        let mut cex = None;
        'wb: for x in 0..n {
            let up_x = space.poset().up(x);
            for y in 0..n {
                cases += 1;
                let lhs = crate::waybelow::way_below_d(space, x, y);
                let mut rhs = true;
                for c in contexts {
                    if c.ideal.is_proper() && c.x == y && c.is_ {
                        if !c.ideal.contains(c.net.defect(up_x)) {
                            rhs = false;
                            break;
                        }
                    }
                }
                if lhs != rhs {
                    cex = Some(
                        Counterexample::new("way-below disagrees with the IS defect criterion")
                            .with("pair", format!("{x} vs {y}"))
                            .with("way_below", lhs),
                    );
                    break 'wb;
                }
            }
        }
        results.push(match cex {
            None => PropResult::pass("Prop5.5", cases),
            Some(c) => PropResult::fail("Prop5.5", cases, c),
        });
    }

    // On a c-space (every finite space), IS-convergence to y under a proper
    // ideal is equivalent to all of ⟱_d y having ideal-small defects.
    {
        let dwb: Vec<PointSet> = (0..n).map(|y| down_way_below(space, y)).collect();
        results.push(scan(
            "Prop5.6",
            contexts,
            |c| {
                if !c.ideal.is_proper() {
                    return true;
                }
                let rhs = dwb[c.x]
                    .iter()
                    .all(|x| c.ideal.contains(c.net.defect(space.poset().up(x))));
                c.is_ == rhs
            },
            "IS disagrees with the ⟱_d-defect criterion",
        ));
    }

    let is_family = induced_family(space, contexts, |c| c.is_);
    let isl_family = induced_family(space, contexts, |c| c.isl);

    // The IS family is a topology.
    {
        let mut ok = is_family.contains(&PointSet::EMPTY)
            && is_family.contains(&PointSet::full(n));
        let mut bad = None;
        for &a in &is_family {
            for &b in &is_family {
                if !is_family.contains(&a.union(b)) || !is_family.contains(&a.intersect(b)) {
                    ok = false;
                    bad = Some((a, b));
                }
            }
        }
        results.push(if ok {
            PropResult::pass("Prop5.7", (is_family.len() * is_family.len()) as u64)
        } else {
            let detail = match bad {
                Some((a, b)) => format!("family not closed at {a}, {b}"),
                None => "missing ∅ or the carrier".into(),
            };
            PropResult::fail(
                "Prop5.7",
                (is_family.len() * is_family.len()) as u64,
                Counterexample::new(detail),
            )
        });
    }

    // IS family equals the monotone determined family.
    {
        let md = space.md_opens();
        results.push(if is_family == md {
            PropResult::pass("Lemma5.8", (1usize << n) as u64)
        } else {
            PropResult::fail(
                "Lemma5.8",
                (1usize << n) as u64,
                Counterexample::new(format!(
                    "IS family {is_family:?} differs from D(X) {md:?}"
                )),
            )
        });
    }

    // Proper-only and all-ideal quantifications of the IS family coincide.
    {
        let proper_family = PointSet::all_subsets(n)
            .filter(|&u| {
                contexts.iter().all(|c| {
                    !(c.ideal.is_proper() && c.is_ && u.contains(c.x))
                        || c.ideal.contains(c.net.defect(u))
                })
            })
            .collect::<Vec<_>>();
        results.push(if proper_family == is_family {
            PropResult::pass("IS-family-proper-vs-all", (1usize << n) as u64)
        } else {
            PropResult::fail(
                "IS-family-proper-vs-all",
                (1usize << n) as u64,
                Counterexample::new(format!(
                    "proper-only family {proper_family:?} differs from {is_family:?}"
                )),
            )
        });
    }

    results.push(family_inclusion("Prop5.14", &is_family, &isl_family));
    results.push(family_inclusion("Prop5.15", &space.lawson(), &isl_family));

    results.push(scan(
        "Thm5.11",
        contexts,
        |c| c.is_ == c.i_tau,
        "IS and I w.r.t. τ disagree",
    ));

    results.push(scan(
        "Thm5.16",
        contexts,
        |c| !c.ideal.is_proper() || (c.isl == c.i_lawson),
        "ISL and I w.r.t. the Lawson topology disagree under a proper ideal",
    ));

    // The trivial-ideal remark, {∅} reading: constant net at y IS-converges
    // exactly to the points below y.
    results.push(scan(
        "Rem5.3-trivial",
        contexts,
        |c| {
            let constant = c.net.values.iter().all(|&v| v == c.net.values[0]);
            if !constant || c.ideal.top() != PointSet::EMPTY {
                return true;
            }
            c.is_ == space.poset().le(c.x, c.net.values[0])
        },
        "constant net with the {∅} ideal disagrees with the order",
    ));

    // The power-set reading of "trivial ideal" must be refuted somewhere:
    // some constant net converges to a point not below its value.
    {
        let refuted = contexts.iter().any(|c| {
            let constant = c.net.values.iter().all(|&v| v == c.net.values[0]);
            constant && !c.ideal.is_proper() && c.is_ && !space.poset().le(c.x, c.net.values[0])
        });
        // Spaces with a greatest element genuinely satisfy the power-set
        // reading; only report a refutation failure where a counterexample
        // must exist (some point pair x ≰ y).
        let refutable = (0..n).any(|x| (0..n).any(|y| !space.poset().le(x, y)));
        results.push(if refuted == refutable {
            PropResult::pass("Rem5.3-powerset-reading-refuted", contexts.len() as u64)
        } else {
            PropResult::fail(
                "Rem5.3-powerset-reading-refuted",
                contexts.len() as u64,
                Counterexample::new(
                    "power-set reading of the trivial-ideal remark was not refuted as expected",
                ),
            )
        });
    }

    results.push(scan(
        "Def5.13",
        contexts,
        |c| !c.isl || c.is_,
        "ISL without IS",
    ));

    // Improper-ideal saturation: every mode converges to every point.
    results.push(scan(
        "Saturation",
        contexts,
        |c| {
            c.ideal.is_proper()
                || (c.i_tau && c.liminf && c.is_ && c.igs && c.isl && c.igsl)
        },
        "improper-ideal saturation violated",
    ));

    // Order-only lim-inf agrees with IS on Alexandroff spaces.
    results.push(scan(
        "LimInf-IS",
        contexts,
        |c| c.liminf == c.is_,
        "LIMINF and IS disagree on an Alexandroff space",
    ));

    results
}

/// Whether some context on this space witnesses that the defect-premise
/// reading of the ISL side condition breaks the Lawson characterization:
/// literal ISL holds under a proper ideal while I-convergence w.r.t. the
/// Lawson topology fails. Aggregated across spaces by the suite runner.
pub(crate) fn literal_isl_refutation(space: &FiniteSpace, contexts_bounds: EnumBounds) -> bool {
    refutation_scan(space, contexts_bounds, super::modes::isl_literal)
}

pub(crate) fn literal_igsl_refutation(space: &FiniteSpace, contexts_bounds: EnumBounds) -> bool {
    refutation_scan(space, contexts_bounds, super::modes::igsl_literal)
}

fn refutation_scan(
    space: &FiniteSpace,
    bounds: EnumBounds,
    literal: impl Fn(&FiniteSpace, &Net, &Ideal, usize) -> bool,
) -> bool {
    let lawson = space.lawson();
    for jk in 1..=bounds.max_index {
        let j = IndexSet::chain(jk);
        for ideal in enumeration_ideals(&j) {
            if !ideal.is_proper() {
                continue;
            }
            for net in Net::all(&j, space) {
                for x in 0..space.n() {
                    if literal(space, &net, &ideal, x)
                        && !super::modes::i_converges(&lawson, &net, &ideal, x)
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn check_section6(
    space: &FiniteSpace,
    contexts: &[Context],
    _oracle: &dyn ConvergenceOracle,
) -> Vec<PropResult> {
    let n = space.n();
    let mut results = Vec::new();

    results.push(scan(
        "Prop6.2",
        contexts,
        |c| !c.is_ || c.igs,
        "IS without IGS",
    ));

    // If every IGS-convergence to y under a proper ideal keeps the defect of
    // ↑G small, then G d-approximates {y}.
    {
        let mut cases = 0u64;
        let mut cex = None;
        'g: for g in PointSet::all_subsets(n) {
            if g.is_empty() {
                continue;
            }
            let up_g = space.poset().up_set(g);
            for y in 0..n {
                cases += 1;
                let premise = contexts.iter().all(|c| {
                    !(c.ideal.is_proper() && c.x == y && c.igs)
                        || c.ideal.contains(c.net.defect(up_g))
                });
                if premise
                    && !crate::waybelow::set_way_below_unchecked(space, g, PointSet::singleton(y))
                {
                    cex = Some(
                        Counterexample::new("IGS defect criterion without set-way-below")
                            .with("set", g)
                            .with("point", y),
                    );
                    break 'g;
                }
            }
        }
        results.push(match cex {
            None => PropResult::pass("Prop6.4", cases),
            Some(c) => PropResult::fail("Prop6.4", cases, c),
        });
    }

    // On a locally hypercompact space (every finite space), small defects on
    // every G ≪_d y force IGS-convergence.
    {
        let fins: Vec<Vec<PointSet>> = (0..n)
            .map(|y| crate::waybelow::fin_d(space, y))
            .collect();
        results.push(scan(
            "Prop6.5",
            contexts,
            |c| {
                if !c.ideal.is_proper() {
                    return true;
                }
                let premise = fins[c.x].iter().all(|&g| {
                    c.ideal.contains(c.net.defect(space.poset().up_set(g)))
                });
                !premise || c.igs
            },
            "fin_d defect criterion did not force IGS",
        ));
    }

    let is_family = induced_family(space, contexts, |c| c.is_);
    let igs_family = induced_family(space, contexts, |c| c.igs);
    let igsl_family = induced_family(space, contexts, |c| c.igsl);

    {
        let md = space.md_opens();
        results.push(if igs_family == is_family && is_family == md {
            PropResult::pass("Lemma6.6", (1usize << n) as u64)
        } else {
            PropResult::fail(
                "Lemma6.6",
                (1usize << n) as u64,
                Counterexample::new(format!(
                    "IGS family {igs_family:?}, IS family {is_family:?}, D(X) {md:?} differ"
                )),
            )
        });
    }

    results.push(family_inclusion("Prop6.12", &space.lawson(), &igsl_family));

    results.push(scan(
        "Prop6.13",
        contexts,
        |c| !c.isl || c.igsl,
        "ISL without IGSL",
    ));

    results.push(scan(
        "Thm6.9",
        contexts,
        |c| c.igs == c.i_tau,
        "IGS and I w.r.t. τ disagree",
    ));

    results.push(scan(
        "Thm6.14",
        contexts,
        |c| !c.ideal.is_proper() || (c.igsl == c.i_lawson),
        "IGSL and I w.r.t. the Lawson topology disagree under a proper ideal",
    ));

    results.push(scan(
        "Def6.11",
        contexts,
        |c| !c.igsl || c.igs,
        "IGSL without IGS",
    ));

    // Classification-level equivalence and the three-way convergence theorem.
    {
        let c = classify(space);
        results.push(if c.c_space == (c.d_quasicontinuous && c.d_meet_continuous) {
            PropResult::pass("Thm6.15", 1)
        } else {
            PropResult::fail(
                "Thm6.15",
                1,
                Counterexample::new(format!(
                    "c_space={} vs d_quasicontinuous={} ∧ d_meet={}",
                    c.c_space, c.d_quasicontinuous, c.d_meet_continuous
                )),
            )
        });

        let b2 = contexts
            .iter()
            .all(|ctx| !ctx.ideal.is_proper() || (ctx.isl == ctx.i_lawson));
        let b3 = contexts
            .iter()
            .all(|ctx| !ctx.ideal.is_proper() || (ctx.igsl == ctx.i_lawson));
        let pass = c.d_meet_continuous && (c.c_space == b2) && (b2 == b3);
        results.push(if pass {
            PropResult::pass("Thm6.16", contexts.len() as u64)
        } else {
            PropResult::fail(
                "Thm6.16",
                contexts.len() as u64,
                Counterexample::new(format!(
                    "c_space={}, ISL⇔I(λ)={}, IGSL⇔I(λ)={} under d_meet={}",
                    c.c_space, b2, b3, c.d_meet_continuous
                )),
            )
        });
    }

    results
}

fn family_inclusion(id: &str, smaller: &[PointSet], larger: &[PointSet]) -> PropResult {
    for u in smaller {
        if !larger.contains(u) {
            return PropResult::fail(
                id,
                smaller.len() as u64,
                Counterexample::new("family inclusion violated").with("set", *u),
            );
        }
    }
    PropResult::pass(id, smaller.len() as u64)
}

/// A deliberately wrong oracle for harness self-tests: flips the answer of
/// one mode everywhere.
#[derive(Debug, Clone, Copy)]
pub enum Mutation {
    FlipIs,
    FlipIgs,
    FlipILawson,
}

pub struct MutatedOracle {
    pub mutation: Mutation,
}

impl ConvergenceOracle for MutatedOracle {
    fn converges(
        &self,
        space: &FiniteSpace,
        net: &Net,
        ideal: &Ideal,
        mode: &Mode,
        x: usize,
    ) -> Result<bool, IdealError> {
        let exact = ExactOracle.converges(space, net, ideal, mode, x)?;
        let flip = match self.mutation {
            Mutation::FlipIs => mode.kind == ModeKind::Is && matches!(mode.wrt, Topology::Tau),
            Mutation::FlipIgs => mode.kind == ModeKind::Igs,
            Mutation::FlipILawson => {
                mode.kind == ModeKind::I && matches!(mode.wrt, Topology::Lawson)
            }
        };
        Ok(if flip { !exact } else { exact })
    }
}
