//! Named verification suites: exhaustive sweeps over enumerated spaces that
//! assert every catalogued proposition, each reported with a stable id, a
//! case count, and the first counterexample in canonical enumeration order.

use crate::classify::{classify, Classification};
use crate::closure::tilde;
use crate::ctx::SpaceCtx;
use crate::enumerate::{labeled_posets, random_poset, LABELED_POSET_COUNTS};
use crate::ideal::{check_section, converges_mode, EnumBounds, Ideal, IndexSet, Mode, ModeKind, Net};
use crate::maps::{find_retract, map_check, FiniteMap};
use crate::point_set::PointSet;
use crate::poset::FinitePoset;
use crate::report::{BoundsEcho, Counterexample, PropResult, SuiteReport};
use crate::rudin::rudin_transversal;
use crate::space::FiniteSpace;
use crate::witness::{
    find_witness, witness_catalog, DownSetDesc, IdealDescriptor,
    NetDescriptor, SymPoint, WitnessSpace,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    Collapse,
    Section3,
    Section4,
    Section5,
    Section6,
    Rudin,
    Maps,
    Witness63,
    All,
}

impl SuiteName {
    pub const ALL: [SuiteName; 9] = [
        SuiteName::Collapse,
        SuiteName::Section3,
        SuiteName::Section4,
        SuiteName::Section5,
        SuiteName::Section6,
        SuiteName::Rudin,
        SuiteName::Maps,
        SuiteName::Witness63,
        SuiteName::All,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteName::Collapse => "collapse",
            SuiteName::Section3 => "section3",
            SuiteName::Section4 => "section4",
            SuiteName::Section5 => "section5",
            SuiteName::Section6 => "section6",
            SuiteName::Rudin => "rudin",
            SuiteName::Maps => "maps",
            SuiteName::Witness63 => "witness63",
            SuiteName::All => "all",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        SuiteName::ALL
            .into_iter()
            .find(|name| name.as_str() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunMode {
    Exhaustive,
    Random { count: u64 },
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteSpec {
    pub suite: SuiteName,
    pub max_n: usize,
    pub max_index: usize,
    pub seed: u64,
    pub mode: RunMode,
}

impl SuiteSpec {
    pub fn new(suite: SuiteName) -> Self {
        SuiteSpec {
            suite,
            max_n: 5,
            max_index: 3,
            seed: 0,
            mode: RunMode::Exhaustive,
        }
    }
}

/// Incremental first-failure scan for one proposition.
struct PropScan {
    id: &'static str,
    cases: u64,
    first: Option<Counterexample>,
}

impl PropScan {
    fn new(id: &'static str) -> Self {
        PropScan {
            id,
            cases: 0,
            first: None,
        }
    }

    fn check(&mut self, ok: bool, cex: impl FnOnce() -> Counterexample) {
        self.cases += 1;
        if !ok && self.first.is_none() {
            self.first = Some(cex());
        }
    }

    fn finish(self) -> PropResult {
        match self.first {
            None => PropResult::pass(self.id, self.cases),
            Some(cex) => PropResult::fail(self.id, self.cases, cex),
        }
    }
}

fn space_cex(space: &FiniteSpace, detail: impl Into<String>) -> Counterexample {
    Counterexample::new(detail).with("space", crate::dsl::emit_poset_inline(space.poset()))
}

/// Every Alexandroff space on up to max_n points, in canonical order:
/// n ascending, then enumeration order.
fn spaces_up_to(max_n: usize) -> Vec<FiniteSpace> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for p in labeled_posets(n).expect("bounded enumeration") {
            out.push(FiniteSpace::alexandroff(p));
        }
    }
    out
}

pub fn run_suite(spec: &SuiteSpec) -> SuiteReport {
    let results = match spec.suite {
        SuiteName::Collapse => suite_collapse(spec),
        SuiteName::Section3 => suite_section3(spec),
        SuiteName::Section4 => suite_section4(spec),
        SuiteName::Section5 => suite_section_ideal(spec, 5),
        SuiteName::Section6 => suite_section_ideal(spec, 6),
        SuiteName::Rudin => suite_rudin(spec),
        SuiteName::Maps => suite_maps(spec),
        SuiteName::Witness63 => suite_witness63(),
        SuiteName::All => {
            let mut all = Vec::new();
            for sub in [
                SuiteName::Collapse,
                SuiteName::Section3,
                SuiteName::Section4,
                SuiteName::Section5,
                SuiteName::Section6,
                SuiteName::Rudin,
                SuiteName::Maps,
                SuiteName::Witness63,
            ] {
                let sub_spec = SuiteSpec { suite: sub, ..*spec };
                all.extend(run_suite(&sub_spec).results);
            }
            all
        }
    };
    SuiteReport::new(
        spec.suite.as_str(),
        BoundsEcho {
            max_n: spec.max_n,
            max_index: spec.max_index,
            mode: match spec.mode {
                RunMode::Exhaustive => "exhaustive".into(),
                RunMode::Random { count } => format!("sampled({count})"),
            },
            seed: spec.seed,
        },
        results,
    )
}

// ---------------------------------------------------------------------------
// collapse

fn collapse_checks_on(space: &FiniteSpace, scans: &mut [PropScan], subsets_too: bool) {
    let ctx = SpaceCtx::new(space);
    let poset = space.poset();
    let n = space.n();
    let [dx, wb, swb, cl4, classify_scan, up_basis, set_basis] = scans else {
        unreachable!("seven collapse scans")
    };

    let md = space.md_opens();
    let upper = poset.all_upper_sets();
    dx.check(
        md == *space.opens() && md == upper,
        || space_cex(space, "D(X), τ, and the upper-set family differ"),
    );

    for x in 0..n {
        for y in 0..n {
            wb.check(ctx.way_below(x, y) == poset.le(x, y), || {
                space_cex(space, "d-way-below differs from the order")
                    .with("pair", format!("{x} vs {y}"))
            });
        }
    }

    if subsets_too {
        for g in PointSet::all_subsets(n) {
            if g.is_empty() {
                continue;
            }
            for h in PointSet::all_subsets(n) {
                if h.is_empty() {
                    continue;
                }
                swb.check(
                    ctx.set_way_below(g, h) == h.is_subset_of(poset.up_set(g)),
                    || {
                        space_cex(space, "set d-approximation differs from H ⊆ ↑G")
                            .with("set", format!("G={g}, H={h}"))
                    },
                );
            }
        }
        for a in PointSet::all_subsets(n) {
            let down = poset.down_set(a);
            let closure = space.cl(a);
            cl4.check(
                ctx.tilde(a) == closure && ctx.hat(a) == closure && down == closure,
                || space_cex(space, "Ã, Â, cl, ↓ differ").with("set", a),
            );
        }
    }

    let c = classify(space);
    classify_scan.check(c.all_true(), || {
        space_cex(space, format!("classification not all-true: {c:?}"))
    });

    // {↟_d x : x} is an open basis of τ.
    let up_wb: Vec<PointSet> = (0..n)
        .map(|x| PointSet::from_points((0..n).filter(|&y| ctx.way_below(x, y))))
        .collect();
    let opens_ok = up_wb.iter().all(|&u| space.is_open(u));
    let covers = space.opens().iter().all(|&u| {
        u.iter().all(|y| {
            (0..n).any(|x| up_wb[x].contains(y) && up_wb[x].is_subset_of(u))
        })
    });
    up_basis.check(opens_ok && covers, || {
        space_cex(space, "{↟_d x} is not an open basis")
    });

    // ⇑_d F = int(↑F) and {⇑_d F} is an open basis.
    let mut all_ok = true;
    let mut basis_sets: Vec<PointSet> = Vec::new();
    for f in PointSet::all_subsets(n) {
        if f.is_empty() {
            continue;
        }
        let upp: PointSet = PointSet::from_points(
            (0..n).filter(|&x| ctx.set_way_below(f, PointSet::singleton(x))),
        );
        if upp != space.int(poset.up_set(f)) {
            all_ok = false;
            break;
        }
        basis_sets.push(upp);
    }
    let covers2 = all_ok
        && space.opens().iter().all(|&u| {
            u.iter().all(|y| {
                basis_sets
                    .iter()
                    .any(|b| b.contains(y) && b.is_subset_of(u))
            })
        });
    set_basis.check(all_ok && covers2, || {
        space_cex(space, "⇑_d F differs from int(↑F) or fails to form a basis")
    });
}

fn suite_collapse(spec: &SuiteSpec) -> Vec<PropResult> {
    let mut counts = PropScan::new("PosetCounts");
    for n in 1..=spec.max_n.min(6) {
        let got = labeled_posets(n).expect("bounded enumeration").len() as u64;
        counts.check(got == LABELED_POSET_COUNTS[n], || {
            Counterexample::new(format!(
                "labeled poset count at n={n} is {got}, expected {}",
                LABELED_POSET_COUNTS[n]
            ))
        });
    }

    let mut scans = [
        PropScan::new("DX-equals-tau"),
        PropScan::new("WayBelowCollapse"),
        PropScan::new("SetWayBelowCollapse"),
        PropScan::new("ClosureCollapse"),
        PropScan::new("ClassifyAllTrue"),
        PropScan::new("UpWayBelowBasis"),
        PropScan::new("UpSetApproxBasis"),
    ];
    match spec.mode {
        RunMode::Exhaustive => {
            for space in spaces_up_to(spec.max_n) {
                // The subset-quantified identities are capped at 4 points.
                let subsets_too = space.n() <= 4.min(spec.max_n);
                collapse_checks_on(&space, &mut scans, subsets_too);
            }
        }
        RunMode::Random { count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            let lo = (spec.max_n + 1).min(7);
            for _ in 0..count {
                let n = rng.gen_range(lo..=7);
                let space = FiniteSpace::alexandroff(random_poset(&mut rng, n));
                collapse_checks_on(&space, &mut scans, n <= 5);
            }
        }
    }
    let mut results = vec![counts.finish()];
    results.extend(scans.into_iter().map(PropScan::finish));
    results
}

// ---------------------------------------------------------------------------
// section 3

fn suite_section3(spec: &SuiteSpec) -> Vec<PropResult> {
    let subset_cap = spec.max_n.min(5);
    let mut p32 = PropScan::new("Prop3.2");
    let mut p33 = PropScan::new("Prop3.3");
    let mut c34 = PropScan::new("Cor3.4");
    let mut p35 = PropScan::new("Prop3.5");
    let mut p39 = PropScan::new("Prop3.9");
    let mut p37 = PropScan::new("Prop3.7");
    let mut p38 = PropScan::new("Prop3.8");

    for space in spaces_up_to(spec.max_n) {
        let n = space.n();
        let ctx = SpaceCtx::new(&space);
        let poset = space.poset();
        let c = classify(&space);

        p37.check(!c.c_space || c.one_step_closure, || {
            space_cex(&space, "c-space without one-step closure")
        });
        p38.check(!c.one_step_closure || c.d_meet_continuous, || {
            space_cex(&space, "one-step closure without d-meet continuity")
        });

        if n <= subset_cap {
            let dwb: Vec<PointSet> = (0..n).map(|x| ctx.down_wb(x)).collect();
            let md = space.md_opens();
            for a in PointSet::all_subsets(n) {
                let lower_approx = PointSet::from_points(
                    a.iter().filter(|&x| dwb[x].meets(a)),
                );
                let upper_approx = PointSet::from_points(
                    (0..n).filter(|&x| dwb[x].is_subset_of(poset.down_set(a))),
                );
                if poset.is_upper(a) {
                    p32.check(lower_approx != a || md.contains(&a), || {
                        space_cex(&space, "fixed point of the lower approximation is not monotone determined open")
                            .with("set", a)
                    });
                    p33.check(space.int(a) == lower_approx, || {
                        space_cex(&space, "interior differs from the lower approximation")
                            .with("set", a)
                    });
                }
                if poset.is_lower(a) {
                    p33.check(space.cl(a) == upper_approx, || {
                        space_cex(&space, "closure differs from the upper approximation")
                            .with("set", a)
                    });
                }
                let closure = space.cl(a);
                for x in 0..n {
                    c34.check(
                        closure.contains(x) == dwb[x].is_subset_of(poset.down_set(a)),
                        || {
                            space_cex(&space, "closure membership differs from ⟱_d x ⊆ ↓A")
                                .with("set", a)
                                .with("point", x)
                        },
                    );
                }
                let t = ctx.tilde(a);
                let down = poset.down_set(a);
                p35.check(
                    a.is_subset_of(down)
                        && down.is_subset_of(t)
                        && t.is_subset_of(closure)
                        && t.is_subset_of(upper_approx),
                    || space_cex(&space, "approximation chain broken").with("set", a),
                );
            }
            for x in 0..n {
                let up_wb = PointSet::from_points((0..n).filter(|&y| ctx.way_below(x, y)));
                p39.check(
                    !c.one_step_closure || space.int(poset.up(x)) == up_wb,
                    || {
                        space_cex(&space, "int(↑x) differs from ↟_d x")
                            .with("point", x)
                    },
                );
            }
        }
    }
    vec![
        p32.finish(),
        p33.finish(),
        c34.finish(),
        p35.finish(),
        p39.finish(),
        p37.finish(),
        p38.finish(),
    ]
}

// ---------------------------------------------------------------------------
// section 4

fn suite_section4(spec: &SuiteSpec) -> Vec<PropResult> {
    let subset_cap = spec.max_n.min(4);
    let mut p43 = PropScan::new("Prop4.3");
    let mut p44 = PropScan::new("Prop4.4");
    let mut p45 = PropScan::new("Prop4.5");
    let mut p46 = PropScan::new("Prop4.6");
    let mut t47f = PropScan::new("Thm4.7-fwd");
    let mut t47b = PropScan::new("Thm4.7-bwd");
    let mut t615 = PropScan::new("Thm6.15");

    for space in spaces_up_to(spec.max_n) {
        let c = classify(&space);
        p43.check(!c.locally_hypercompact || c.weak_one_step_closure, || {
            space_cex(&space, "locally hypercompact without weak one-step closure")
        });
        p44.check(!c.one_step_closure || c.weak_one_step_closure, || {
            space_cex(&space, "one-step without weak one-step closure")
        });
        p46.check(
            !(c.d_meet_continuous && c.weak_one_step_closure) || c.one_step_closure,
            || space_cex(&space, "d-meet + weak one-step without one-step"),
        );
        t47f.check(
            !c.one_step_closure || (c.d_meet_continuous && c.weak_one_step_closure),
            || space_cex(&space, "one-step without d-meet + weak one-step"),
        );
        t47b.check(
            !(c.d_meet_continuous && c.weak_one_step_closure) || c.one_step_closure,
            || space_cex(&space, "d-meet + weak one-step without one-step"),
        );
        t615.check(
            c.c_space == (c.d_quasicontinuous && c.d_meet_continuous),
            || space_cex(&space, "c-space vs d-quasicontinuous ∧ d-meet mismatch"),
        );

        if space.n() <= subset_cap {
            let lhs = PointSet::all_subsets(space.n())
                .all(|a| space.poset().is_lower(tilde(&space, a)));
            let rhs = space
                .poset()
                .directed_subsets()
                .into_iter()
                .all(|d| space.poset().is_lower(tilde(&space, d)));
            p45.check(lhs == rhs, || {
                space_cex(&space, "lower-set property of Ã differs between all sets and directed sets")
            });
        }
    }
    vec![
        p43.finish(),
        p44.finish(),
        p45.finish(),
        p46.finish(),
        t47f.finish(),
        t47b.finish(),
        t615.finish(),
    ]
}

// ---------------------------------------------------------------------------
// sections 5 and 6 (ideal convergence, bounded)

fn suite_section_ideal(spec: &SuiteSpec, section: u8) -> Vec<PropResult> {
    let bounds = EnumBounds {
        max_index: spec.max_index,
    };
    let space_cap = spec.max_n.min(3);
    let mut merged: Vec<(String, u64, Option<Counterexample>)> = Vec::new();
    for space in spaces_up_to(space_cap) {
        let results = check_section(&space, section, bounds).expect("validated bounds");
        for r in results {
            match merged.iter_mut().find(|(id, _, _)| *id == r.id) {
                Some((_, cases, first)) => {
                    *cases += r.cases;
                    if first.is_none() {
                        if let Some(cex) = r.counterexample {
                            *first = Some(cex.with(
                                "space",
                                crate::dsl::emit_poset_inline(space.poset()),
                            ));
                        }
                    }
                }
                None => {
                    let cex = r.counterexample.map(|c| {
                        c.with("space", crate::dsl::emit_poset_inline(space.poset()))
                    });
                    merged.push((r.id, r.cases, cex));
                }
            }
        }
    }
    let mut results: Vec<PropResult> = merged
        .into_iter()
        .map(|(id, cases, first)| match first {
            None => PropResult::pass(&id, cases),
            Some(cex) => PropResult::fail(&id, cases, cex),
        })
        .collect();

    // The induced-topology operation itself: predicted family contained in
    // the enumeration, non-upper sets rejected by constant-net witnesses.
    let mode_pair = if section == 5 {
        [ModeKind::Is, ModeKind::Isl]
    } else {
        [ModeKind::Igs, ModeKind::Igsl]
    };
    for kind in mode_pair {
        let mut scan = PropScan::new(match kind {
            ModeKind::Is => "InducedTopology-IS",
            ModeKind::Isl => "InducedTopology-ISL",
            ModeKind::Igs => "InducedTopology-IGS",
            _ => "InducedTopology-IGSL",
        });
        for space in spaces_up_to(space_cap) {
            let t = crate::ideal::induced_topology(&space, kind, bounds)
                .expect("validated bounds");
            scan.check(t.consistent, || {
                space_cex(&space, "induced topology inconsistent with the predicted family")
            });
        }
        results.push(scan.finish());
    }

    // The defect-premise reading of the Lawson side condition must be
    // refuted by some enumerated context; the corrected reading is the one
    // the Thm5.16/6.14 checks above verified.
    let refuted = spaces_up_to(space_cap).iter().any(|space| {
        if section == 5 {
            crate::ideal::sections_literal_isl_refuted(space, bounds)
        } else {
            crate::ideal::sections_literal_igsl_refuted(space, bounds)
        }
    });
    let id = if section == 5 {
        "Def5.13-literal-reading-refuted"
    } else {
        "Def6.11-literal-reading-refuted"
    };
    results.push(if refuted {
        PropResult::pass(id, 1)
    } else {
        PropResult::fail(
            id,
            1,
            Counterexample::new(
                "no context separated the defect-premise reading from the Lawson characterization",
            ),
        )
    });

    if let RunMode::Random { count } = spec.mode {
        results.push(sampled_mode_lattice(spec, count));
    }
    results
}

/// Sampled smoke check beyond the exhaustive caps: the mode implication
/// lattice on random (poset, net, ideal, point) tuples.
fn sampled_mode_lattice(spec: &SuiteSpec, count: u64) -> PropResult {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut scan = PropScan::new("ModeLattice-sampled");
    for _ in 0..count {
        let n = rng.gen_range(4..=6);
        let space = FiniteSpace::alexandroff(random_poset(&mut rng, n));
        let jk = rng.gen_range(1..=spec.max_index.max(1));
        let j = IndexSet::chain(jk);
        let values: Vec<usize> = (0..jk).map(|_| rng.gen_range(0..n)).collect();
        let net = Net::new(j.clone(), values, &space).expect("sampled net is valid");
        let ideal = Ideal::generated(
            jk,
            &[PointSet::from_points(
                (0..jk).filter(|_| rng.gen_bool(0.4)),
            )],
        );
        let x = rng.gen_range(0..n);
        let decide = |kind: ModeKind| {
            converges_mode(&space, &net, &ideal, &Mode::new(kind), x)
                .expect("validated inputs")
        };
        let is_ = decide(ModeKind::Is);
        let isl = decide(ModeKind::Isl);
        let igs = decide(ModeKind::Igs);
        let igsl = decide(ModeKind::Igsl);
        scan.check(
            (!isl || is_) && (!igsl || igs) && (!is_ || igs) && (!isl || igsl),
            || {
                space_cex(&space, "mode implication lattice violated on a sampled tuple")
                    .with("net", net.describe())
                    .with("ideal", ideal.describe())
                    .with("point", x)
            },
        );
    }
    scan.finish()
}

// ---------------------------------------------------------------------------
// rudin

fn suite_rudin(spec: &SuiteSpec) -> Vec<PropResult> {
    let cap = spec.max_n.min(4);
    let mut scan = PropScan::new("RudinTransversal");
    for n in 1..=cap {
        for poset in labeled_posets(n).expect("bounded enumeration") {
            let nonempty: Vec<PointSet> = PointSet::all_subsets(n)
                .filter(|s| !s.is_empty())
                .collect();
            // All families of nonempty subsets with at most 4 members.
            let m = nonempty.len();
            let mut stack: Vec<(usize, Vec<PointSet>)> = vec![(0, Vec::new())];
            while let Some((start, family)) = stack.pop() {
                if !family.is_empty() && poset.is_smyth_directed(&family) {
                    check_rudin_family(&poset, &family, &mut scan);
                }
                if family.len() == 4 {
                    continue;
                }
                for k in start..m {
                    let mut next = family.clone();
                    next.push(nonempty[k]);
                    stack.push((k + 1, next));
                }
            }
        }
    }
    vec![scan.finish()]
}

fn check_rudin_family(poset: &FinitePoset, family: &[PointSet], scan: &mut PropScan) {
    let result = rudin_transversal(poset, family).expect("validated Smyth-directed family");
    // Independent validity oracle: greatest-element directedness, member
    // hits, and minimality/lexicographic-least among all valid candidates.
    let union = family.iter().fold(PointSet::EMPTY, |acc, &f| acc.union(f));
    let mut best: Option<PointSet> = None;
    for d in PointSet::subsets_of(union) {
        if d.is_empty() || poset.greatest_of(d).is_none() {
            continue;
        }
        if !family.iter().all(|&f| d.meets(f)) {
            continue;
        }
        best = Some(match best {
            None => d,
            Some(b) => {
                if d.len().cmp(&b.len()).then(d.lex_cmp(b)).is_lt() {
                    d
                } else {
                    b
                }
            }
        });
    }
    scan.check(best == Some(result), || {
        Counterexample::new("transversal differs from the oracle's canonical choice")
            .with("family", format!("{family:?}"))
            .with("set", result)
    });
}

// ---------------------------------------------------------------------------
// maps

fn suite_maps(spec: &SuiteSpec) -> Vec<PropResult> {
    let mut p218 = PropScan::new("Prop2.18");
    let small = spaces_up_to(spec.max_n.min(3));
    for x_space in &small {
        for y_space in &small {
            for table in all_tables(x_space.n(), y_space.n()) {
                let f = FiniteMap::new(x_space.clone(), y_space.clone(), table).unwrap();
                let rep = map_check(&f);
                p218.check(rep.continuous == rep.md_continuous, || {
                    Counterexample::new("continuity and monotone determined continuity disagree")
                        .with("map", format!("{:?}", f.table))
                        .with(
                            "space",
                            format!(
                                "{} -> {}",
                                crate::dsl::emit_poset_inline(f.domain.poset()),
                                crate::dsl::emit_poset_inline(f.codomain.poset())
                            ),
                        )
                });
            }
        }
    }

    let mut p310 = PropScan::new("Prop3.10");
    let xs = spaces_up_to(spec.max_n.min(4));
    let ys = spaces_up_to(spec.max_n.min(3));
    let x_class: Vec<Classification> = xs.iter().map(classify).collect();
    let y_class: Vec<Classification> = ys.iter().map(classify).collect();
    for (xi, x_space) in xs.iter().enumerate() {
        for (yi, y_space) in ys.iter().enumerate() {
            let found = find_retract(x_space, y_space).expect("within the search cap");
            if let Some((r, s)) = found {
                let ok = !x_class[xi].one_step_closure || y_class[yi].one_step_closure;
                p310.check(ok, || {
                    Counterexample::new("retract of a one-step-closure space lost the property")
                        .with(
                            "space",
                            format!(
                                "{} -> {}",
                                crate::dsl::emit_poset_inline(x_space.poset()),
                                crate::dsl::emit_poset_inline(y_space.poset())
                            ),
                        )
                        .with("map", format!("r={:?}, s={:?}", r.table, s.table))
                });
            } else {
                p310.check(true, || unreachable!());
            }
        }
    }
    vec![p218.finish(), p310.finish()]
}

fn all_tables(dom: usize, cod: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if dom == 0 || cod == 0 {
        return out;
    }
    let mut table = vec![0usize; dom];
    loop {
        out.push(table.clone());
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

// ---------------------------------------------------------------------------
// witness63

fn suite_witness63() -> Vec<PropResult> {
    let mut results = Vec::new();

    let mut catalog_scan = PropScan::new("WitnessCatalog");
    let names: Vec<&str> = witness_catalog().iter().map(|w| w.name()).collect();
    catalog_scan.check(
        names.contains(&"Example63") && names.contains(&"OmegaChain"),
        || Counterexample::new(format!("catalogue misses an expected witness: {names:?}")),
    );
    for w in witness_catalog() {
        let report = w.self_check();
        catalog_scan.check(report.all_true(), || {
            Counterexample::new(format!("{} self-check failed", w.name()))
        });
    }
    results.push(catalog_scan.finish());

    let w = find_witness("example63").expect("catalogued");
    let a = w.parse_point("a").unwrap();
    let inf = w.parse_point("inf").unwrap();

    let mut class_scan = PropScan::new("Classify63");
    let report = w.classify();
    class_scan.check(
        report.get("monotone_determined") == Some(true)
            && report.get("c_space") == Some(false)
            && report.get("locally_hypercompact") == Some(true)
            && report.get("d_meet_continuous") == Some(false),
        || Counterexample::new(format!("unexpected classification: {report:?}")),
    );
    results.push(class_scan.finish());

    let mut wb_scan = PropScan::new("PairsApproximateA");
    for n in 0..=100u64 {
        wb_scan.check(
            w.set_way_below(&[SymPoint::nat(n), a], &a).unwrap(),
            || Counterexample::new("a pair {n, a} failed to d-approximate {a}").with("point", n),
        );
    }
    wb_scan.check(!w.set_way_below(&[SymPoint::nat(3)], &a).unwrap(), || {
        Counterexample::new("{3} alone should not d-approximate {a}")
    });
    results.push(wb_scan.finish());

    let mut dwb_scan = PropScan::new("DownWayBelowAEmpty");
    dwb_scan.check(
        w.down_way_below(&a).unwrap() == DownSetDesc::Empty,
        || Counterexample::new("⟱_d a is not empty"),
    );
    for x in (0..=20u64)
        .map(SymPoint::nat)
        .chain([a, inf])
    {
        dwb_scan.check(!w.way_below(&x, &a).unwrap(), || {
            Counterexample::new("a point is d-way-below a").with("point", format!("{x:?}"))
        });
    }
    results.push(dwb_scan.finish());

    let mut net_scan = PropScan::new("AlternatingNet63");
    let net = NetDescriptor::alternating_with(a);
    let igs = w
        .converges_mode(&net, &IdealDescriptor::I0, ModeKind::Igs, &a)
        .unwrap();
    let is_ = w
        .converges_mode(&net, &IdealDescriptor::I0, ModeKind::Is, &a)
        .unwrap();
    net_scan.check(igs, || {
        Counterexample::new("the alternating net fails IGS-convergence to a")
    });
    net_scan.check(!is_, || {
        Counterexample::new("the alternating net unexpectedly IS-converges to a")
    });
    results.push(net_scan.finish());

    let mut nontop = PropScan::new("NonTopologicalIS");
    let i_sigma = w
        .converges_mode(&net, &IdealDescriptor::I0, ModeKind::I, &a)
        .unwrap();
    nontop.check(i_sigma && !is_, || {
        Counterexample::new(
            "the net should I-converge to a w.r.t. the topology while missing IS",
        )
    });
    results.push(nontop.finish());

    results.push(witness_thm69_battery(w.as_ref()));

    let mut omega_scan = PropScan::new("OmegaChainFacts");
    let om = find_witness("omega-chain").expect("catalogued");
    for x in 0..=10u64 {
        for y in 0..=10u64 {
            omega_scan.check(
                om.way_below(&SymPoint::nat(x), &SymPoint::nat(y)).unwrap() == (x <= y),
                || Counterexample::new("ω-chain way-below differs from the order"),
            );
        }
    }
    omega_scan.check(om.classify().all_true(), || {
        Counterexample::new("ω-chain classification is not all-true")
    });
    results.push(omega_scan.finish());

    let mut trunc_scan = PropScan::new("Truncations");
    let (space, labels) = w.truncate(3).unwrap();
    trunc_scan.check(space.n() == 5, || {
        Counterexample::new("truncation at 3 should have 5 points")
    });
    trunc_scan.check(classify(&space).all_true(), || {
        Counterexample::new("finite truncation must classify all-true (finite collapse)")
    });
    trunc_scan.check(
        labels.len() == 5 && labels[3] == a && labels[4] == inf,
        || Counterexample::new("unexpected truncation labels"),
    );
    for k in 1..=14u64 {
        let (tspace, tlabels) = w.truncate(k).unwrap();
        let agree = (0..tspace.n()).all(|p| {
            (0..tspace.n())
                .all(|q| tspace.poset().le(p, q) == w.le(&tlabels[p], &tlabels[q]))
        });
        trunc_scan.check(agree, || {
            Counterexample::new("truncated order disagrees with the witness order")
                .with("point", k)
        });
    }
    let (om_space, _) = om.truncate(4).unwrap();
    trunc_scan.check(om_space.poset() == &FinitePoset::chain(4), || {
        Counterexample::new("ω-chain truncation is not a chain")
    });
    results.push(trunc_scan.finish());

    results
}

/// IGS-convergence coincides with I-convergence w.r.t. the topology on the
/// locally hypercompact witness, over the catalogued net battery.
fn witness_thm69_battery(w: &dyn WitnessSpace) -> PropResult {
    let a = w.parse_point("a").unwrap();
    let inf = w.parse_point("inf").unwrap();
    let mut scan = PropScan::new("Thm6.9-witness");
    let nets = [
        NetDescriptor::alternating_with(a),
        NetDescriptor::alternating_with(inf),
        NetDescriptor::constant(a),
        NetDescriptor::constant(inf),
        NetDescriptor::constant(SymPoint::nat(0)),
        NetDescriptor::constant(SymPoint::nat(5)),
        NetDescriptor::identity_ramp(),
        NetDescriptor {
            prefix: vec![a, SymPoint::nat(9)],
            block: vec![
                crate::witness::NetTerm::Ramp {
                    chain: 0,
                    div: 3,
                    offset: 1,
                },
                crate::witness::NetTerm::Const(inf),
            ],
        },
    ];
    let ideals = [
        IdealDescriptor::I0,
        IdealDescriptor::PowerSet,
        IdealDescriptor::trivial(),
        IdealDescriptor::FiniteGenerated(vec![[0u64, 1].into_iter().collect()]),
        IdealDescriptor::FiniteGenerated(vec![
            [0u64, 2, 4].into_iter().collect(),
            [1u64].into_iter().collect(),
        ]),
    ];
    let points = [a, inf, SymPoint::nat(0), SymPoint::nat(1), SymPoint::nat(7)];
    for net in &nets {
        for ideal in &ideals {
            for x in &points {
                let igs = w.converges_mode(net, ideal, ModeKind::Igs, x).unwrap();
                let i_tau = w.converges_mode(net, ideal, ModeKind::I, x).unwrap();
                scan.check(igs == i_tau, || {
                    Counterexample::new("IGS and I w.r.t. the topology disagree on the witness")
                        .with("point", format!("{x:?}"))
                        .with("ideal", format!("{ideal:?}"))
                });
            }
        }
    }
    scan.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(suite: SuiteName, max_n: usize, max_index: usize) -> SuiteSpec {
        SuiteSpec {
            suite,
            max_n,
            max_index,
            seed: 0,
            mode: RunMode::Exhaustive,
        }
    }

    #[test]
    fn small_collapse_passes() {
        let report = run_suite(&spec(SuiteName::Collapse, 3, 2));
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn small_sections_pass() {
        for suite in [SuiteName::Section3, SuiteName::Section4] {
            let report = run_suite(&spec(suite, 3, 2));
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn small_ideal_sections_pass() {
        for suite in [SuiteName::Section5, SuiteName::Section6] {
            let report = run_suite(&spec(suite, 2, 2));
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn rudin_and_maps_pass_small() {
        let report = run_suite(&spec(SuiteName::Rudin, 3, 2));
        assert!(report.passed(), "{report:?}");
        let report = run_suite(&spec(SuiteName::Maps, 2, 2));
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn witness_suite_passes() {
        let report = run_suite(&spec(SuiteName::Witness63, 3, 2));
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn random_mode_is_deterministic() {
        let s = SuiteSpec {
            suite: SuiteName::Collapse,
            max_n: 3,
            max_index: 2,
            seed: 7,
            mode: RunMode::Random { count: 5 },
        };
        let a = serde_json::to_string(&run_suite(&s)).unwrap();
        let b = serde_json::to_string(&run_suite(&s)).unwrap();
        assert_eq!(a, b);
        assert!(run_suite(&s).passed());
    }

    #[test]
    fn suite_names_round_trip() {
        for name in SuiteName::ALL {
            assert_eq!(name.as_str().parse::<SuiteName>().unwrap(), name);
        }
        assert!("bogus".parse::<SuiteName>().is_err());
    }
}
