//! Command-line front end: graph invariants, theorem verification runs,
//! family generation, and hamiltonicity/hole witnesses over graph6 input.
//!
//! Exit codes: 0 success, 1 verification found a counterexample, 2 bad
//! configuration, unreadable input, or (in strict mode) a bad input line.

use std::collections::BTreeSet;
use std::error::Error;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bhnlab::bhn::hole_profile;
use bhnlab::families::{build_exc_a, build_exc_b, build_trace_a, build_trace_b};
use bhnlab::g6::{emit_graph6, stream_graph6, Graph6Record, Graph6StreamError};
use bhnlab::graph::Graph;
use bhnlab::hamilton::{hamilton_cycle, hamilton_path, MAX_DP_ORDER};
use bhnlab::verify::{
    enumerate_all_graphs, equality_census, run_verification, CatalogSource, Invariants,
    TheoremId, ALL_THEOREMS,
};

/// Orders above this make the full hole-profile scan unreasonably slow for a
/// command-line call, even though the library itself does not cap it.
const MAX_BHN_CLI_ORDER: usize = 32;

#[derive(Parser)]
#[command(
    name = "bhnlab",
    version,
    about = "bipartite-hole-number and hamiltonicity toolkit for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Per-graph invariants (order, size, degrees, hole number, cycles)
    Invariants(InvariantsArgs),
    /// Check the hamiltonicity theorems over a graph catalog
    Verify(VerifyArgs),
    /// Emit members of the named graph families as graph6
    Gen(GenArgs),
    /// Hamilton cycle and spanning path existence, with witnesses
    Ham(HamArgs),
    /// Bipartite-hole-number, certifying split, and hole witnesses
    Bhn(BhnArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    G6,
}

#[derive(Args)]
struct InputArgs {
    /// graph6 input file, or "-" for stdin
    #[arg(short, long, default_value = "-")]
    input: String,
    /// fail on the first bad input line (the default)
    #[arg(long, conflicts_with = "lenient")]
    strict: bool,
    /// skip bad input lines and report the count on stderr
    #[arg(long)]
    lenient: bool,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// comma-separated theorem ids (e.g. my_thm,ore_stab), or "all"
    #[arg(long, default_value = "all")]
    theorems: String,
    /// graph6 catalog file, or "-" for stdin
    #[arg(short, long)]
    input: Option<String>,
    /// built-in enumeration over an order range, e.g. 3..7 or 5
    #[arg(long, value_name = "LO..HI")]
    builtin: Option<String>,
    /// restrict the built-in enumeration to connected graphs
    #[arg(long)]
    connected_only: bool,
    /// worker threads (default: BHNLAB_JOBS, then all cores)
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, conflicts_with = "lenient")]
    strict: bool,
    #[arg(long)]
    lenient: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// also list each theorem's boundary graphs (requires --builtin, json)
    #[arg(long)]
    census: bool,
    /// write every counterexample to this file as raw graph6 lines
    #[arg(long, value_name = "PATH")]
    counterexamples_out: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "exc_a")]
    ExcA,
    #[value(name = "exc_b")]
    ExcB,
    #[value(name = "trace_a")]
    TraceA,
    #[value(name = "trace_b")]
    TraceB,
    #[value(name = "complete")]
    Complete,
    #[value(name = "edgeless")]
    Edgeless,
    #[value(name = "complete_bipartite")]
    CompleteBipartite,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// total order, for exc_a (odd) and trace_a (even); one line per
    /// isomorphism class of the inner graph
    #[arg(long)]
    order: Option<usize>,
    /// clique size, for exc_b and trace_b
    #[arg(long)]
    m: Option<usize>,
    /// order, for complete and edgeless
    #[arg(long)]
    n: Option<usize>,
    /// first side, for complete_bipartite
    #[arg(long)]
    a: Option<usize>,
    /// second side, for complete_bipartite
    #[arg(long)]
    b: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::G6)]
    format: Format,
}

#[derive(Args)]
struct HamArgs {
    #[command(flatten)]
    input: InputArgs,
    /// include the witness cycle and path vertex sequences
    #[arg(long)]
    witness: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct BhnArgs {
    #[command(flatten)]
    input: InputArgs,
    /// include maximal hole witnesses per left-side size
    #[arg(long)]
    witness: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Box<dyn Error>> {
    let jobs_flag = match &cli.cmd {
        Cmd::Verify(v) => v.jobs,
        _ => None,
    };
    configure_pool(jobs_flag)?;
    match cli.cmd {
        Cmd::Invariants(args) => cmd_invariants(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Gen(args) => cmd_gen(args),
        Cmd::Ham(args) => cmd_ham(args),
        Cmd::Bhn(args) => cmd_bhn(args),
    }
}

/// --jobs beats BHNLAB_JOBS beats the rayon default. Zero is rejected.
fn configure_pool(flag: Option<usize>) -> Result<(), Box<dyn Error>> {
    let jobs = match flag {
        Some(j) => Some(j),
        None => match std::env::var("BHNLAB_JOBS") {
            Ok(v) => Some(
                v.parse::<usize>()
                    .map_err(|_| format!("BHNLAB_JOBS must be a positive integer, got {v:?}"))?,
            ),
            Err(_) => None,
        },
    };
    if let Some(j) = jobs {
        if j == 0 {
            return Err("worker count must be at least 1".into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| format!("thread pool setup failed: {e}"))?;
    }
    Ok(())
}

fn open_input(path: &str) -> Result<Box<dyn BufRead>, Box<dyn Error>> {
    if path == "-" {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        let file = File::open(path).map_err(|e| format!("cannot open {path}: {e}"))?;
        Ok(Box::new(BufReader::new(file)))
    }
}

/// Drive `f` over every record of a graph6 stream. Per-record errors from
/// `f` follow the same strict/lenient policy as parse errors. Returns the
/// number of skipped lines.
fn for_each_record(
    input: &InputArgs,
    mut f: impl FnMut(&Graph6Record) -> Result<(), String>,
) -> Result<u64, Box<dyn Error>> {
    let reader = open_input(&input.input)?;
    let mut skipped = 0u64;
    for item in stream_graph6(reader) {
        match item {
            Ok(rec) => {
                if let Err(msg) = f(&rec) {
                    if input.lenient {
                        skipped += 1;
                    } else {
                        return Err(format!("line {}: {msg}", rec.line_no).into());
                    }
                }
            }
            Err(Graph6StreamError::Parse { .. }) if input.lenient => skipped += 1,
            Err(e) => return Err(e.into()),
        }
    }
    if skipped > 0 {
        eprintln!("skipped {skipped} bad input lines");
    }
    Ok(skipped)
}

fn cmd_invariants(args: InvariantsArgs) -> Result<u8, Box<dyn Error>> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match args.format {
        Format::G6 => return Err("invariants output is json or csv".into()),
        Format::Csv => writeln!(
            out,
            "n,e,min_degree,sigma2,alpha_tilde,connected,two_connected,hamiltonian,traceable"
        )?,
        Format::Json => {}
    }
    for_each_record(&args.input, |rec| {
        let g = &rec.graph;
        if g.n() > MAX_DP_ORDER {
            return Err(format!(
                "order {} exceeds the order-{MAX_DP_ORDER} hamiltonicity envelope",
                g.n()
            ));
        }
        let inv = Invariants::compute(g);
        let res = match args.format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&inv).unwrap()),
            Format::Csv => writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                inv.n,
                inv.e,
                inv.min_degree,
                inv.sigma2,
                inv.alpha_tilde,
                inv.connected,
                inv.two_connected,
                inv.hamiltonian,
                inv.traceable
            ),
            Format::G6 => unreachable!(),
        };
        res.map_err(|e| e.to_string())
    })?;
    Ok(0)
}

#[derive(Serialize)]
struct CensusLine {
    theorem: String,
    equality_census: Vec<String>,
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Box<dyn Error>> {
    let ids = parse_theorems(&args.theorems)?;
    if args.format == Format::G6 {
        return Err("verify output is json or csv".into());
    }
    if args.census && (args.builtin.is_none() || args.format != Format::Json) {
        return Err("--census needs --builtin and json output".into());
    }

    let builtin_range = match (&args.builtin, &args.input) {
        (Some(_), Some(_)) => {
            return Err("choose one input source: --builtin or --input".into())
        }
        (Some(spec), None) => Some(parse_order_range(spec)?),
        (None, _) => {
            if args.connected_only {
                return Err("--connected-only applies to --builtin sources only".into());
            }
            None
        }
    };

    let verification = match builtin_range {
        Some((lo, hi)) => run_verification(
            &ids,
            CatalogSource::builtin(lo, hi, args.connected_only),
        )?,
        None => {
            let path = args.input.as_deref().unwrap_or("-");
            let reader = open_input(path)?;
            run_verification(&ids, CatalogSource::graph6(reader, args.lenient))?
        }
    };

    let stdout = io::stdout();
    let mut out = stdout.lock();
    match args.format {
        Format::Json => {
            for report in &verification.reports {
                writeln!(out, "{}", serde_json::to_string(report).unwrap())?;
            }
        }
        Format::Csv => {
            writeln!(
                out,
                "theorem,graphs_checked,hypothesis_hits,counterexamples,equality_cases,exceptions_found"
            )?;
            for r in &verification.reports {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.theorem,
                    r.graphs_checked,
                    r.hypothesis_hits,
                    r.counterexamples.len(),
                    r.equality_cases,
                    r.exceptions_found
                )?;
            }
        }
        Format::G6 => unreachable!(),
    }

    if args.census {
        let (lo, hi) = builtin_range.expect("checked above");
        for &id in &ids {
            let census =
                equality_census(id, CatalogSource::builtin(lo, hi, args.connected_only))?;
            let line = CensusLine {
                theorem: id.name().to_string(),
                equality_census: census,
            };
            writeln!(out, "{}", serde_json::to_string(&line).unwrap())?;
        }
    }

    if let Some(path) = &args.counterexamples_out {
        let all: BTreeSet<&String> = verification
            .reports
            .iter()
            .flat_map(|r| r.counterexamples.iter())
            .collect();
        let mut file =
            File::create(path).map_err(|e| format!("cannot write {path}: {e}"))?;
        for g6 in all {
            writeln!(file, "{g6}")?;
        }
    }

    if verification.skipped_lines > 0 {
        eprintln!("skipped {} bad input lines", verification.skipped_lines);
    }
    let bad = verification
        .reports
        .iter()
        .any(|r| !r.counterexamples.is_empty());
    Ok(if bad { 1 } else { 0 })
}

fn parse_theorems(spec: &str) -> Result<Vec<TheoremId>, Box<dyn Error>> {
    if spec.eq_ignore_ascii_case("all") {
        return Ok(ALL_THEOREMS.to_vec());
    }
    let mut ids = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        let id = TheoremId::parse(part).ok_or_else(|| {
            format!(
                "unknown theorem id {part:?}; valid ids: {} (or \"all\")",
                ALL_THEOREMS.map(|t| t.name().to_ascii_lowercase()).join(", ")
            )
        })?;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    Ok(ids)
}

/// "LO..HI" or a single order; both ends inclusive, within 1..=8.
fn parse_order_range(spec: &str) -> Result<(usize, usize), Box<dyn Error>> {
    let (lo, hi) = match spec.split_once("..") {
        Some((a, b)) => (a.parse::<usize>(), b.parse::<usize>()),
        None => (spec.parse::<usize>(), spec.parse::<usize>()),
    };
    let (lo, hi) = (
        lo.map_err(|_| format!("bad --builtin range {spec:?}"))?,
        hi.map_err(|_| format!("bad --builtin range {spec:?}"))?,
    );
    if !(1 <= lo && lo <= hi && hi <= 8) {
        return Err(format!(
            "--builtin range must satisfy 1 <= LO <= HI <= 8, got {spec:?}; \
             stream larger catalogs with --input"
        )
        .into());
    }
    Ok((lo, hi))
}

fn cmd_gen(args: GenArgs) -> Result<u8, Box<dyn Error>> {
    if args.format != Format::G6 {
        return Err("gen emits graph6 only".into());
    }
    let reject_unused = |names: &[(&str, bool)]| -> Result<(), Box<dyn Error>> {
        for (name, given) in names {
            if *given {
                return Err(format!("--{name} does not apply to this family").into());
            }
        }
        Ok(())
    };

    let graphs: Vec<Graph> = match args.family {
        Family::ExcA | Family::TraceA => {
            reject_unused(&[
                ("m", args.m.is_some()),
                ("n", args.n.is_some()),
                ("a", args.a.is_some()),
                ("b", args.b.is_some()),
            ])?;
            let order = args.order.ok_or("this family needs --order")?;
            let even = matches!(args.family, Family::TraceA);
            if order % 2 == usize::from(even) {
                return Err(format!(
                    "--order must be {} for this family, got {order}",
                    if even { "even" } else { "odd" }
                )
                .into());
            }
            let pad = if even { 2 } else { 1 };
            if order < pad + 2 {
                return Err(format!("--order {order} leaves no room for an inner graph").into());
            }
            let inner_order = (order - pad) / 2;
            if inner_order > 8 {
                return Err(format!(
                    "inner order {inner_order} exceeds the built-in enumeration cap of 8"
                )
                .into());
            }
            enumerate_all_graphs(inner_order, false)
                .iter()
                .map(|h| {
                    if even {
                        build_trace_a(h)
                    } else {
                        build_exc_a(h)
                    }
                })
                .collect::<Result<_, _>>()?
        }
        Family::ExcB | Family::TraceB => {
            reject_unused(&[
                ("order", args.order.is_some()),
                ("n", args.n.is_some()),
                ("a", args.a.is_some()),
                ("b", args.b.is_some()),
            ])?;
            let m = args.m.ok_or("this family needs --m")?;
            if m == 0 {
                return Err("--m must be at least 1".into());
            }
            let g = if matches!(args.family, Family::ExcB) {
                build_exc_b(m)
            } else {
                build_trace_b(m)
            }
            .map_err(|e| format!("{e}"))?;
            vec![g]
        }
        Family::Complete | Family::Edgeless => {
            reject_unused(&[
                ("order", args.order.is_some()),
                ("m", args.m.is_some()),
                ("a", args.a.is_some()),
                ("b", args.b.is_some()),
            ])?;
            let n = args.n.ok_or("this family needs --n")?;
            if !(1..=62).contains(&n) {
                return Err("--n must be within 1..=62 for graph6 output".into());
            }
            vec![if matches!(args.family, Family::Complete) {
                Graph::complete(n)
            } else {
                Graph::edgeless(n)
            }]
        }
        Family::CompleteBipartite => {
            reject_unused(&[
                ("order", args.order.is_some()),
                ("m", args.m.is_some()),
                ("n", args.n.is_some()),
            ])?;
            let a = args.a.ok_or("this family needs --a and --b")?;
            let b = args.b.ok_or("this family needs --a and --b")?;
            if a == 0 || b == 0 {
                return Err("both sides must be nonempty".into());
            }
            if a + b > 62 {
                return Err("total order above 62 cannot be emitted as graph6".into());
            }
            vec![Graph::complete_bipartite(a, b)]
        }
    };

    let stdout = io::stdout();
    let mut out = stdout.lock();
    for g in &graphs {
        writeln!(out, "{}", emit_graph6(g)?)?;
    }
    Ok(0)
}

#[derive(Serialize)]
struct HamLine<'a> {
    graph6: &'a str,
    hamiltonian: bool,
    traceable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle: Option<Option<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<Option<Vec<usize>>>,
}

fn cmd_ham(args: HamArgs) -> Result<u8, Box<dyn Error>> {
    if args.format == Format::G6 {
        return Err("ham output is json or csv".into());
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if args.format == Format::Csv {
        writeln!(out, "graph6,hamiltonian,traceable,cycle,path")?;
    }
    for_each_record(&args.input, |rec| {
        let g = &rec.graph;
        if g.n() > MAX_DP_ORDER {
            return Err(format!(
                "order {} exceeds the order-{MAX_DP_ORDER} hamiltonicity envelope",
                g.n()
            ));
        }
        let cycle = if g.n() >= 3 {
            hamilton_cycle(g).map(|c| c.vertices().to_vec())
        } else {
            None
        };
        let path = hamilton_path(g).map(|p| p.vertices().to_vec());
        let res = match args.format {
            Format::Json => {
                let line = HamLine {
                    graph6: &rec.text,
                    hamiltonian: cycle.is_some(),
                    traceable: path.is_some(),
                    cycle: args.witness.then_some(cycle),
                    path: args.witness.then_some(path),
                };
                writeln!(out, "{}", serde_json::to_string(&line).unwrap())
            }
            Format::Csv => {
                let join = |w: &Option<Vec<usize>>| {
                    w.as_ref().map_or(String::new(), |v| {
                        v.iter()
                            .map(usize::to_string)
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                };
                let (cw, pw) = if args.witness {
                    (join(&cycle), join(&path))
                } else {
                    (String::new(), String::new())
                };
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    rec.text,
                    cycle.is_some(),
                    path.is_some(),
                    cw,
                    pw
                )
            }
            Format::G6 => unreachable!(),
        };
        res.map_err(|e| e.to_string())
    })?;
    Ok(0)
}

#[derive(Serialize)]
struct HoleLine {
    s: usize,
    t: usize,
    s_side: Vec<usize>,
    t_side: Vec<usize>,
}

#[derive(Serialize)]
struct BhnLine<'a> {
    graph6: &'a str,
    alpha_tilde: usize,
    certifying_split: (usize, usize),
    #[serde(skip_serializing_if = "Option::is_none")]
    holes: Option<Vec<HoleLine>>,
}

fn cmd_bhn(args: BhnArgs) -> Result<u8, Box<dyn Error>> {
    if args.format == Format::G6 {
        return Err("bhn output is json or csv".into());
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if args.format == Format::Csv {
        writeln!(out, "graph6,alpha_tilde,split_s,split_t")?;
    }
    for_each_record(&args.input, |rec| {
        let g = &rec.graph;
        if g.n() > MAX_BHN_CLI_ORDER {
            return Err(format!(
                "order {} exceeds the order-{MAX_BHN_CLI_ORDER} hole-scan envelope",
                g.n()
            ));
        }
        let profile = hole_profile(g);
        let (s, t) = profile.certifying_split();
        let res = match args.format {
            Format::Json => {
                let holes = args.witness.then(|| {
                    (1..=g.n())
                        .filter(|&s| profile.max_t(s) > 0)
                        .map(|s| {
                            let s_side = profile.witness(s);
                            let covered = g.neighbors_of_set(s_side) | s_side;
                            let t = profile.max_t(s);
                            let t_side = (g.vertices() - covered).take_lowest(t);
                            HoleLine {
                                s,
                                t,
                                s_side: s_side.to_vec(),
                                t_side: t_side.to_vec(),
                            }
                        })
                        .collect()
                });
                let line = BhnLine {
                    graph6: &rec.text,
                    alpha_tilde: profile.bipartite_hole_number(),
                    certifying_split: (s, t),
                    holes,
                };
                writeln!(out, "{}", serde_json::to_string(&line).unwrap())
            }
            Format::Csv => writeln!(
                out,
                "{},{},{},{}",
                rec.text,
                profile.bipartite_hole_number(),
                s,
                t
            ),
            Format::G6 => unreachable!(),
        };
        res.map_err(|e| e.to_string())
    })?;
    Ok(0)
}
