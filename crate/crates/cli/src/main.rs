//! Command-line front end: DSL loading, classification, closure reports,
//! convergence queries, witness queries, poset enumeration, and the
//! proposition-suite runner.
//!
//! Exit codes: 0 all checks pass / query answered; 1 a verification suite
//! found a violation; 2 input or usage error.

use clap::{Args, Parser, Subcommand};
use mdspace::closure::closure_suite;
use mdspace::dsl;
use mdspace::ideal::{converges_mode, Ideal, IndexSet, Mode, ModeKind, Net, Topology};
use mdspace::maps::find_retract;
use mdspace::point_set::PointSet;
use mdspace::report::{emit_report, emit_suite_report, Format, Report};
use mdspace::rudin::rudin_transversal;
use mdspace::suites::{run_suite, RunMode, SuiteName, SuiteSpec};
use mdspace::waybelow::neighborhoods;
use mdspace::witness::{
    find_witness, parse_ideal_descriptor, parse_net_descriptor, witness_catalog,
};
use mdspace::{classify, FiniteSpace};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mdspace", about = "verification workbench for order-theoretic topology on finite spaces and catalogued countable witnesses", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load a space and report every classification flag
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Closure-style operators evaluated on a subset
    Closures {
        file: PathBuf,
        /// Subset as a comma-separated point list, e.g. 0,2
        #[arg(long, value_name = "POINTS")]
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Neighborhood data of one point
    Neighborhoods {
        file: PathBuf,
        #[arg(long)]
        point: usize,
        #[arg(long)]
        json: bool,
    },
    /// Directed transversal of a Smyth-directed family
    Rudin {
        file: PathBuf,
        /// Family as bracketed point lists, e.g. "[0];[0,1]"
        #[arg(long, value_name = "FAMILY")]
        family: String,
        #[arg(long)]
        json: bool,
    },
    /// Ideal convergence query on a finite space
    Convergence(ConvergenceArgs),
    /// Search for a continuous retraction between two spaces
    Retract {
        domain: PathBuf,
        codomain: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Witness-space queries (catalogued countable spaces)
    Witness {
        name: String,
        #[command(subcommand)]
        command: WitnessCommand,
    },
    /// Run a verification suite
    Check {
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_index: usize,
        /// Sample this many random tuples instead of exhausting the bounds
        #[arg(long)]
        random: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all labeled posets on n points
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Emit each poset in the DSL instead of a summary
        #[arg(long)]
        emit_dsl: bool,
    },
}

#[derive(Args)]
struct ConvergenceArgs {
    file: PathBuf,
    /// Net as index:point pairs, e.g. "0:1,1:0"
    #[arg(long)]
    net: String,
    /// Index set: chain:<k> or file:<path>
    #[arg(long, default_value = "chain:2")]
    index: String,
    /// Ideal: i0 | trivial | powerset | gen:[0,1];[2]
    #[arg(long, default_value = "i0")]
    ideal: String,
    /// Mode: I | LIMINF | IS | ISL | IGS | IGSL
    #[arg(long, default_value = "IS")]
    mode: String,
    /// Topology for mode I: tau | lawson
    #[arg(long, default_value = "tau")]
    wrt: String,
    #[arg(long)]
    point: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum WitnessCommand {
    /// Run the witness fact suite (classification, approximations, nets)
    Facts {
        #[arg(long)]
        json: bool,
    },
    /// One-off queries against the witness
    Query {
        /// Order query: two points
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        order: Option<Vec<String>>,
        /// Way-below query: two points
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        way_below: Option<Vec<String>>,
        /// Convergence-mode query (with --net, --ideal, --point)
        #[arg(long)]
        mode: Option<String>,
        /// Net pattern: alt:<p> | const:<p> | chain | pre:..;blk:..
        #[arg(long)]
        net: Option<String>,
        /// Ideal: i0 | trivial | powerset | gen:{..};{..}
        #[arg(long, default_value = "i0")]
        ideal: String,
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Finite subspace on the first k chain points plus the finite part
    Truncate {
        k: u64,
        /// Emit the DSL text of the truncated poset
        #[arg(long)]
        emit_dsl: bool,
    },
    /// Structural self-check of the witness
    SelfCheck {
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_space(path: &PathBuf) -> Result<FiniteSpace, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    dsl::parse_space(&text).map_err(|e| e.to_string())
}

fn fmt_of(json: bool) -> Format {
    if json {
        Format::Json
    } else {
        Format::Text
    }
}

fn points_json(set: PointSet) -> serde_json::Value {
    json!(set.points())
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify { file, json } => {
            let space = load_space(&file)?;
            let report = classify(&space).to_report();
            print!("{}", emit_report(&report, fmt_of(json)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Closures { file, set, json } => {
            let space = load_space(&file)?;
            let a = dsl::parse_point_list(&set).map_err(|e| e.to_string())?;
            if !a.is_subset_of(PointSet::full(space.n())) {
                return Err(format!("set {a} is not inside the carrier"));
            }
            let suite = closure_suite(&space, a);
            let mut report = Report::new();
            report.set("input", points_json(a));
            report.set("up", points_json(suite.up));
            report.set("down", points_json(suite.down));
            report.set("closure", points_json(suite.closure));
            report.set("interior", points_json(suite.interior));
            report.set("lower_approx", points_json(suite.lower_approx));
            report.set("upper_approx", points_json(suite.upper_approx));
            report.set("one_step", points_json(suite.one_step));
            report.set("weak_one_step", points_json(suite.weak_one_step));
            print!("{}", emit_report(&report, fmt_of(json)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Neighborhoods { file, point, json } => {
            let space = load_space(&file)?;
            let nb = neighborhoods(&space, point).map_err(|e| e.to_string())?;
            let mut report = Report::new();
            report.flag_true("valid");
            report.flags.insert("d_compact".into(), nb.d_compact);
            report.set("down_way_below", points_json(nb.down_d));
            report.set("up_way_below", points_json(nb.up_d));
            report.set("interior_of_up_set", points_json(nb.int_up));
            report.set(
                "fin_d",
                json!(nb.fin_d.iter().map(|f| f.points()).collect::<Vec<_>>()),
            );
            print!("{}", emit_report(&report, fmt_of(json)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Rudin { file, family, json } => {
            let space = load_space(&file)?;
            let fam = dsl::parse_family(&family).map_err(|e| e.to_string())?;
            let d = rudin_transversal(space.poset(), &fam).map_err(|e| e.to_string())?;
            let mut report = Report::new();
            report.flag_true("directed");
            report.flag_true("hits_every_member");
            report.set("transversal", points_json(d));
            print!("{}", emit_report(&report, fmt_of(json)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Convergence(args) => {
            let space = load_space(&args.file)?;
            let index = parse_index(&args.index)?;
            let values = dsl::parse_net(&args.net, index.size()).map_err(|e| e.to_string())?;
            let net = Net::new(index.clone(), values, &space).map_err(|e| e.to_string())?;
            let ideal = parse_finite_ideal(&args.ideal, &index)?;
            let kind = ModeKind::parse(&args.mode)
                .ok_or_else(|| format!("unknown mode `{}`", args.mode))?;
            let wrt = match args.wrt.as_str() {
                "tau" => Topology::Tau,
                "lawson" => Topology::Lawson,
                other => return Err(format!("unknown topology `{other}`")),
            };
            if matches!(wrt, Topology::Lawson) && kind != ModeKind::I {
                return Err("--wrt lawson applies to mode I only".into());
            }
            let mode = Mode { kind, wrt };
            let answer = converges_mode(&space, &net, &ideal, &mode, args.point)
                .map_err(|e| e.to_string())?;
            let mut report = Report::new();
            report.flags.insert("converges".into(), answer);
            report.set("mode", json!(kind.name()));
            report.set("point", json!(args.point));
            report.set("net", json!(net.describe()));
            report.set("ideal", json!(ideal.describe()));
            print!("{}", emit_report(&report, fmt_of(args.json)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Retract {
            domain,
            codomain,
            json,
        } => {
            let x = load_space(&domain)?;
            let y = load_space(&codomain)?;
            let found = find_retract(&x, &y).map_err(|e| e.to_string())?;
            let mut report = Report::new();
            match found {
                Some((r, s)) => {
                    report.flags.insert("retract_found".into(), true);
                    report.set("r", json!(r.table));
                    report.set("s", json!(s.table));
                }
                None => {
                    report.flags.insert("retract_found".into(), false);
                }
            }
            print!("{}", emit_report(&report, fmt_of(json)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Witness { name, command } => run_witness(&name, command),
        Command::Check {
            suite,
            max_n,
            max_index,
            random,
            seed,
            json,
        } => {
            let suite: SuiteName = suite.parse()?;
            if max_n == 0 || max_index == 0 {
                return Err("bounds must be positive".into());
            }
            let mode = match random {
                Some(count) => RunMode::Random { count },
                None => RunMode::Exhaustive,
            };
            let spec = SuiteSpec {
                suite,
                max_n,
                max_index,
                seed,
                mode,
            };
            let report = run_suite(&spec);
            print!("{}", emit_suite_report(&report, fmt_of(json)));
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Enumerate { n, emit_dsl } => {
            let posets = mdspace::enumerate::labeled_posets(n).map_err(|e| e.to_string())?;
            if emit_dsl {
                for (k, p) in posets.iter().enumerate() {
                    println!("# poset {k}");
                    print!("{}", dsl::emit_poset(p));
                }
            } else {
                println!("{} labeled posets on {n} points", posets.len());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_index(text: &str) -> Result<IndexSet, String> {
    if let Some(k) = text.strip_prefix("chain:") {
        let k: usize = k.parse().map_err(|_| format!("bad chain size `{k}`"))?;
        if k == 0 {
            return Err("index chain must be nonempty".into());
        }
        return Ok(IndexSet::chain(k));
    }
    if let Some(path) = text.strip_prefix("file:") {
        let space = load_space(&PathBuf::from(path))?;
        return IndexSet::new(space.poset().clone()).map_err(|e| e.to_string());
    }
    Err(format!(
        "unknown index `{text}` (expected chain:<k> or file:<path>)"
    ))
}

fn parse_finite_ideal(text: &str, index: &IndexSet) -> Result<Ideal, String> {
    match text {
        "i0" => Ok(Ideal::i0(index)),
        "trivial" => Ok(Ideal::trivial(index.size())),
        "powerset" => Ok(Ideal::power_set(index.size())),
        other => {
            let body = other
                .strip_prefix("gen:")
                .ok_or_else(|| format!("unknown ideal `{other}`"))?;
            let gens = dsl::parse_family(body).map_err(|e| e.to_string())?;
            for g in &gens {
                if !g.is_subset_of(PointSet::full(index.size())) {
                    return Err(format!("generator {g} is outside the index set"));
                }
            }
            Ok(Ideal::generated(index.size(), &gens))
        }
    }
}

fn run_witness(name: &str, command: WitnessCommand) -> Result<ExitCode, String> {
    let w = find_witness(name).map_err(|e| {
        let names: Vec<&str> = witness_catalog().iter().map(|w| w.name()).collect();
        format!("{e}; catalogued witnesses: {names:?}")
    })?;
    match command {
        WitnessCommand::Facts { json } => {
            let spec = SuiteSpec::new(SuiteName::Witness63);
            let report = run_suite(&spec);
            print!("{}", emit_suite_report(&report, fmt_of(json)));
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        WitnessCommand::SelfCheck { json } => {
            let report = w.self_check();
            print!("{}", emit_report(&report, fmt_of(json)));
            Ok(if report.all_true() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        WitnessCommand::Query {
            order,
            way_below,
            mode,
            net,
            ideal,
            point,
            json,
        } => {
            let mut report = Report::new();
            if let Some(pair) = order {
                let x = w.parse_point(&pair[0]).map_err(|e| e.to_string())?;
                let y = w.parse_point(&pair[1]).map_err(|e| e.to_string())?;
                report.flags.insert("le".into(), w.le(&x, &y));
            }
            if let Some(pair) = way_below {
                let x = w.parse_point(&pair[0]).map_err(|e| e.to_string())?;
                let y = w.parse_point(&pair[1]).map_err(|e| e.to_string())?;
                report.flags.insert(
                    "way_below".into(),
                    w.way_below(&x, &y).map_err(|e| e.to_string())?,
                );
            }
            if let Some(mode_name) = mode {
                let kind = ModeKind::parse(&mode_name)
                    .ok_or_else(|| format!("unknown mode `{mode_name}`"))?;
                let net_text = net.ok_or("--mode needs --net")?;
                let point_text = point.ok_or("--mode needs --point")?;
                let net = parse_net_descriptor(w.as_ref(), &net_text)
                    .map_err(|e| e.to_string())?;
                let ideal = parse_ideal_descriptor(&ideal).map_err(|e| e.to_string())?;
                let x = w.parse_point(&point_text).map_err(|e| e.to_string())?;
                let answer = w
                    .converges_mode(&net, &ideal, kind, &x)
                    .map_err(|e| e.to_string())?;
                report.flags.insert("converges".into(), answer);
                report.set("mode", json!(kind.name()));
                report.set("point", json!(w.format_point(&x)));
            }
            if report.flags.is_empty() {
                return Err("query needs --order, --way-below, or --mode".into());
            }
            print!("{}", emit_report(&report, fmt_of(json)));
            Ok(ExitCode::SUCCESS)
        }
        WitnessCommand::Truncate { k, emit_dsl } => {
            let (space, labels) = w.truncate(k).map_err(|e| e.to_string())?;
            if emit_dsl {
                print!("{}", dsl::emit_poset(space.poset()));
            } else {
                let names: Vec<String> =
                    labels.iter().map(|p| w.format_point(p)).collect();
                println!(
                    "{} points: {}",
                    space.n(),
                    names.join(", ")
                );
                print!("{}", dsl::emit_poset(space.poset()));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
