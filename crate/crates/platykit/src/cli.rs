//! Command-line front end.
//!
//! Exit codes: 0 success, 1 runtime IO failure, 2 usage, 3 malformed input,
//! 4 resource guard.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use platykit_core::constructions::{
    complete, complete_bipartite, cycle, d_operation, dotted_prism, fixture, generalized_petersen, path,
    petersen_prism, star, t_chain, FixtureId,
};
use platykit_core::generation::{
    audit_stream, guard_violation, AuditFlags, AuditReport, GenError, GenSpec, Prunes, Target,
};
use platykit_core::hamiltonicity::{
    is_homogeneously_traceable, is_hypohamiltonian, is_hypotraceable, is_maximally_non_hamiltonian, is_platypus,
    mnh_degree_audit,
};
use platykit_core::invariants::{is_snark, summarize};
use platykit_core::isomorphism::{are_isomorphic, canonical_form};
use platykit_core::{graph6, Graph};
use serde::Serialize;

use crate::census::{default_jobs, run_census};
use crate::filter::{filter_stream, Predicates, CHUNK};
use crate::io::{open_input, par_map_stream, sha256_hex, Graph6Reader, InputError};
use crate::manifest::{write_json, CensusManifest, InputDigest, RunManifest, VERSION};

/// Environment variable that lifts the generation resource guards.
pub const GUARD_OVERRIDE_ENV: &str = "PLATYKIT_GUARD_OVERRIDE";

pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const GUARD: i32 = 4;
}

#[derive(Parser, Debug)]
#[command(name = "platykit", version, about = "Construct, check, filter and enumerate platypus graphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct StreamOpts {
    /// graph6 input file, `-` for standard input
    #[arg(default_value = "-")]
    input: String,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    jobs: Option<usize>,
    /// Write a JSON run manifest here
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Abort at the first malformed input line
    #[arg(long)]
    strict: bool,
}

#[derive(Args, Debug)]
struct PredicateArgs {
    #[arg(long)]
    platypus: bool,
    #[arg(long)]
    hypohamiltonian: bool,
    #[arg(long)]
    snark: bool,
    #[arg(long)]
    planar: bool,
    #[arg(long)]
    cubic: bool,
    /// Minimum vertex connectivity
    #[arg(long, value_name = "K")]
    connectivity: Option<usize>,
    /// Minimum girth
    #[arg(long, value_name = "G")]
    girth_min: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a constructed graph as graph6. Families: complete N, cycle N,
    /// path N, star N, bipartite A B, gp N K, pp N K, dotted-cycle N,
    /// d-dotted-cycle N, t-chain K, fixture NAME
    Construct { family: String, params: Vec<String> },
    /// Keep the graphs that satisfy every given predicate
    Filter {
        #[command(flatten)]
        stream: StreamOpts,
        #[command(flatten)]
        preds: PredicateArgs,
    },
    /// Enumerate the platypuses (or all graphs) of one order and girth bound
    Census {
        order: usize,
        /// Lower bound on the girth
        #[arg(long, visible_alias = "girth-min", default_value_t = 3)]
        girth: usize,
        /// Enumerate all graphs instead of platypuses
        #[arg(long)]
        all_graphs: bool,
        #[arg(long)]
        jobs: Option<usize>,
        /// Directory for the graph6 list and the default manifest
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Run the structural audits over the result
        #[arg(long)]
        audit: bool,
        #[arg(long)]
        no_hamiltonian_prune: bool,
        #[arg(long)]
        no_girth_prune: bool,
        #[arg(long)]
        no_degree_prune: bool,
    },
    /// Detailed JSON report per graph
    Check {
        #[command(flatten)]
        stream: StreamOpts,
    },
    /// Canonical graph6 per graph
    Canon {
        #[command(flatten)]
        stream: StreamOpts,
    },
    /// Whether two graphs are isomorphic; each argument is a file (first
    /// graph used) or a graph6 string
    Isomorphic { a: String, b: String },
    /// Structural audits over the platypuses in a stream
    Audit {
        #[command(flatten)]
        stream: StreamOpts,
        /// Skip the maximally non-hamiltonian degree audit
        #[arg(long)]
        skip_mnh: bool,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Guard(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Parse(_) => exit::PARSE,
            CliError::Guard(_) => exit::GUARD,
            CliError::Io(_) => exit::IO,
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::USAGE } else { exit::OK };
        }
    };
    let command_line: Vec<String> = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    match dispatch(cli.command, command_line) {
        Ok(()) => exit::OK,
        Err(e) => {
            eprintln!("platykit: {e}");
            e.code()
        }
    }
}

fn dispatch(command: Command, command_line: Vec<String>) -> Result<(), CliError> {
    match command {
        Command::Construct { family, params } => construct(&family, &params),
        Command::Filter { stream, preds } => filter(stream, preds, command_line),
        Command::Census {
            order,
            girth,
            all_graphs,
            jobs,
            out,
            manifest,
            audit,
            no_hamiltonian_prune,
            no_girth_prune,
            no_degree_prune,
        } => {
            let spec = GenSpec {
                order,
                min_girth: girth,
                target: if all_graphs { Target::AllGraphs } else { Target::Platypuses },
                prunes: Prunes { hamiltonian: !no_hamiltonian_prune, girth: !no_girth_prune, degree: !no_degree_prune },
                audits: audit.then_some(AuditFlags::ALL),
                override_guard: guard_overridden(),
            };
            census(spec, jobs, &out, manifest, command_line)
        }
        Command::Check { stream } => check(stream, command_line),
        Command::Canon { stream } => canon(stream, command_line),
        Command::Isomorphic { a, b } => {
            let (ga, gb) = (load_one(&a)?, load_one(&b)?);
            println!("{}", are_isomorphic(&ga, &gb));
            Ok(())
        }
        Command::Audit { stream, skip_mnh } => audit(stream, skip_mnh, command_line),
    }
}

fn guard_overridden() -> bool {
    std::env::var(GUARD_OVERRIDE_ENV).is_ok_and(|v| v == "1")
}

fn usize_params<const K: usize>(family: &str, params: &[String]) -> Result<[usize; K], CliError> {
    if params.len() != K {
        return Err(CliError::Usage(format!("{family} takes {K} integer parameter(s), got {}", params.len())));
    }
    let mut out = [0; K];
    for (o, p) in out.iter_mut().zip(params) {
        *o = p.parse().map_err(|_| CliError::Usage(format!("{family}: `{p}` is not a non-negative integer")))?;
    }
    Ok(out)
}

fn construct_graph(family: &str, params: &[String]) -> Result<Graph, CliError> {
    let bad = |e: &dyn std::fmt::Display| CliError::Usage(format!("{family}: {e}"));
    let g = match family {
        "complete" => complete(usize_params::<1>(family, params)?[0]),
        "cycle" => cycle(usize_params::<1>(family, params)?[0]),
        "path" => path(usize_params::<1>(family, params)?[0]),
        "star" => star(usize_params::<1>(family, params)?[0]),
        "bipartite" => {
            let [a, b] = usize_params(family, params)?;
            complete_bipartite(a, b)
        }
        "gp" => {
            let [n, k] = usize_params(family, params)?;
            generalized_petersen(n, k)
        }
        "pp" => {
            let [n, k] = usize_params(family, params)?;
            petersen_prism(n, k)
        }
        "dotted-cycle" => cycle(usize_params::<1>(family, params)?[0]).map(|c| dotted_prism(&c)),
        "d-dotted-cycle" => cycle(usize_params::<1>(family, params)?[0]).and_then(|c| d_operation(&dotted_prism(&c))),
        "t-chain" => {
            let [k] = usize_params(family, params)?;
            fixture(FixtureId::Tietze).and_then(|t| t_chain(&t, k))
        }
        "fixture" => {
            let [name] = params else {
                return Err(CliError::Usage("fixture takes one name".into()));
            };
            let id: FixtureId = name.parse().map_err(|e| bad(&e))?;
            fixture(id)
        }
        other => return Err(CliError::Usage(format!("unknown family `{other}`"))),
    };
    g.map_err(|e| bad(&e))
}

fn construct(family: &str, params: &[String]) -> Result<(), CliError> {
    let g = construct_graph(family, params)?;
    println!("{}", graph6::encode(&g));
    Ok(())
}

/// A graph from a file (first graph) or from a graph6 string.
fn load_one(arg: &str) -> Result<Graph, CliError> {
    if Path::new(arg).is_file() {
        let mut reader = Graph6Reader::new(open_input(arg)?);
        return match reader.next() {
            Some(Ok(r)) => Ok(r.graph),
            Some(Err(InputError::Io(e))) => Err(e.into()),
            Some(Err(e)) => Err(CliError::Parse(format!("{arg}: {e}"))),
            None => Err(CliError::Parse(format!("{arg}: no graph"))),
        };
    }
    graph6::decode(arg).map_err(|e| CliError::Parse(format!("`{arg}`: {e}")))
}

/// Shared plumbing of the stream commands.
struct Stream {
    opts: StreamOpts,
    reader: Graph6Reader<Box<dyn io::BufRead>>,
    start: Instant,
    jobs: usize,
}

impl Stream {
    fn open(opts: StreamOpts) -> Result<Stream, CliError> {
        let input = open_input(&opts.input).map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", opts.input)))?;
        let jobs = opts.jobs.unwrap_or_else(default_jobs).max(1);
        Ok(Stream { opts, reader: Graph6Reader::new(input), start: Instant::now(), jobs })
    }

    fn pool(&self) -> Result<rayon::ThreadPool, CliError> {
        Ok(rayon::ThreadPoolBuilder::new().num_threads(self.jobs).build().map_err(io::Error::other)?)
    }

    fn on_error(strict: bool) -> impl FnMut(&InputError) -> bool {
        move |e| {
            eprintln!("platykit: {e}");
            !strict
        }
    }

    fn digest(&self) -> InputDigest {
        InputDigest {
            path: self.opts.input.clone(),
            sha256: self.reader.digest(),
            bytes: self.reader.bytes_read(),
            lines: self.reader.lines_read(),
        }
    }

    /// Writes the manifest when requested and turns malformed lines into
    /// the parse exit code.
    fn finish<V: Serialize, S: Serialize>(
        self,
        subcommand: &'static str,
        command_line: Vec<String>,
        summary: S,
        verdicts: Vec<V>,
        malformed: &[usize],
    ) -> Result<(), CliError> {
        if let Some(path) = &self.opts.manifest {
            let m = RunManifest {
                version: VERSION,
                command_line,
                subcommand,
                input: self.digest(),
                summary,
                verdicts,
                wall_seconds: self.start.elapsed().as_secs_f64(),
            };
            write_json(path, &m)?;
        }
        match malformed {
            [] => Ok(()),
            [first, ..] => {
                Err(CliError::Parse(format!("{} malformed input line(s), first at line {first}", malformed.len())))
            }
        }
    }
}

fn filter(opts: StreamOpts, args: PredicateArgs, command_line: Vec<String>) -> Result<(), CliError> {
    let preds = Predicates {
        platypus: args.platypus,
        hypohamiltonian: args.hypohamiltonian,
        snark: args.snark,
        planar: args.planar,
        cubic: args.cubic,
        connectivity: args.connectivity,
        girth_min: args.girth_min,
    };
    let mut s = Stream::open(opts)?;
    let keep_verdicts = s.opts.manifest.is_some();
    let strict = s.opts.strict;
    let mut out = BufWriter::new(io::stdout().lock());
    let mut verdicts = Vec::new();
    let pool = s.pool()?;
    let summary = filter_stream(
        &mut s.reader,
        &preds,
        &pool,
        CHUNK,
        |line| writeln!(out, "{line}"),
        |v| {
            if keep_verdicts {
                verdicts.push(v)
            }
        },
        Stream::on_error(strict),
    )?;
    out.flush()?;
    drop(out);
    #[derive(Serialize)]
    struct Summary<'a> {
        predicates: &'a Predicates,
        #[serde(flatten)]
        totals: &'a crate::filter::FilterSummary,
    }
    let malformed = summary.malformed.clone();
    s.finish("filter", command_line, Summary { predicates: &preds, totals: &summary }, verdicts, &malformed)
}

fn canon(opts: StreamOpts, command_line: Vec<String>) -> Result<(), CliError> {
    #[derive(Serialize)]
    struct Verdict {
        line: usize,
        canonical: String,
    }
    let mut s = Stream::open(opts)?;
    let keep = s.opts.manifest.is_some();
    let strict = s.opts.strict;
    let mut out = BufWriter::new(io::stdout().lock());
    let mut verdicts = Vec::new();
    let mut count = 0usize;
    let pool = s.pool()?;
    let malformed = par_map_stream(
        &mut s.reader,
        &pool,
        CHUNK,
        |g| canonical_form(g).graph6,
        |r, c| {
            count += 1;
            writeln!(out, "{c}")?;
            if keep {
                verdicts.push(Verdict { line: r.line, canonical: c });
            }
            Ok(())
        },
        Stream::on_error(strict),
    )?;
    out.flush()?;
    drop(out);
    s.finish("canon", command_line, serde_json::json!({ "graphs": count }), verdicts, &malformed)
}

#[derive(Serialize)]
struct CheckReport {
    line: usize,
    graph6: String,
    canonical: String,
    order: usize,
    size: usize,
    automorphism_group_order: String,
    invariants: platykit_core::invariants::InvariantSummary,
    reports: Vec<platykit_core::PropertyReport>,
}

fn check_one(line: usize, g: &Graph) -> CheckReport {
    let c = canonical_form(g);
    let mut reports = vec![
        is_platypus(g),
        is_hypohamiltonian(g),
        is_hypotraceable(g),
        is_homogeneously_traceable(g),
        is_maximally_non_hamiltonian(g),
        mnh_degree_audit(g),
    ];
    if g.is_cubic() {
        reports.push(is_snark(g));
    }
    CheckReport {
        line,
        graph6: graph6::encode(g),
        canonical: c.graph6,
        order: g.order(),
        size: g.size(),
        automorphism_group_order: c.aut_order.to_string(),
        invariants: summarize(g),
        reports,
    }
}

fn check(opts: StreamOpts, command_line: Vec<String>) -> Result<(), CliError> {
    #[derive(Serialize)]
    struct Verdict {
        line: usize,
        canonical: String,
        platypus: bool,
    }
    let mut s = Stream::open(opts)?;
    let keep = s.opts.manifest.is_some();
    let strict = s.opts.strict;
    let mut out = BufWriter::new(io::stdout().lock());
    let mut verdicts = Vec::new();
    let mut count = 0usize;
    let pool = s.pool()?;
    let malformed = par_map_stream(
        &mut s.reader,
        &pool,
        64,
        |g| check_one(0, g),
        |r, mut report| {
            count += 1;
            report.line = r.line;
            serde_json::to_writer(&mut out, &report).map_err(io::Error::other)?;
            writeln!(out)?;
            if keep {
                let platypus = report.reports[0].verdict;
                verdicts.push(Verdict { line: r.line, canonical: report.canonical, platypus });
            }
            Ok(())
        },
        Stream::on_error(strict),
    )?;
    out.flush()?;
    drop(out);
    s.finish("check", command_line, serde_json::json!({ "graphs": count }), verdicts, &malformed)
}

fn audit(opts: StreamOpts, skip_mnh: bool, command_line: Vec<String>) -> Result<(), CliError> {
    let flags = AuditFlags { mnh_degree: !skip_mnh, ..AuditFlags::ALL };
    let mut s = Stream::open(opts)?;
    let strict = s.opts.strict;
    let mut report = AuditReport::default();
    let pool = s.pool()?;
    let malformed = par_map_stream(
        &mut s.reader,
        &pool,
        256,
        |g| audit_stream([g.clone()], flags),
        |r, one| {
            // re-index the single-graph report by input line
            report.graphs += one.graphs;
            report.platypuses += one.platypuses;
            report.planar += one.planar;
            report.mnh += one.mnh;
            report.skipped.extend(one.skipped.into_iter().map(|mut k| {
                k.index = r.line;
                k
            }));
            report.violations.extend(one.violations.into_iter().map(|mut v| {
                v.index = r.line;
                v
            }));
            Ok(())
        },
        Stream::on_error(strict),
    )?;
    println!("{}", serde_json::to_string_pretty(&report).map_err(io::Error::other)?);
    let verdicts: Vec<()> = Vec::new();
    s.finish("audit", command_line, &report, verdicts, &malformed)
}

fn census(
    spec: GenSpec,
    jobs: Option<usize>,
    out_dir: &Path,
    manifest: Option<PathBuf>,
    command_line: Vec<String>,
) -> Result<(), CliError> {
    if spec.override_guard {
        if let Some(reason) = guard_violation(spec.target, spec.order, spec.min_girth) {
            eprintln!("platykit: warning: {GUARD_OVERRIDE_ENV}=1 lifts the resource guard ({reason})");
        }
    }
    let jobs = jobs.unwrap_or_else(default_jobs);
    let run = run_census(&spec, jobs).map_err(|e| match e {
        GenError::Guard { .. } => CliError::Guard(format!("{e}; set {GUARD_OVERRIDE_ENV}=1 to run it anyway")),
        GenError::InvalidSpec(_) => CliError::Usage(e.to_string()),
    })?;
    let stem = match spec.target {
        Target::Platypuses => format!("platypuses_n{}_g{}", spec.order, spec.min_girth),
        Target::AllGraphs => format!("graphs_n{}_g{}", spec.order, spec.min_girth),
    };
    std::fs::create_dir_all(out_dir)?;
    let list_path = out_dir.join(format!("{stem}.g6"));
    let mut body = String::with_capacity(run.result.canonical_list.iter().map(|s| s.len() + 1).sum());
    for s in &run.result.canonical_list {
        body.push_str(s);
        body.push('\n');
    }
    {
        let mut f = BufWriter::new(File::create(&list_path)?);
        f.write_all(body.as_bytes())?;
        f.flush()?;
    }
    let m = CensusManifest {
        version: VERSION,
        command_line,
        order: spec.order,
        min_girth: spec.min_girth,
        target: match spec.target {
            Target::Platypuses => "platypuses",
            Target::AllGraphs => "all_graphs",
        },
        count: run.result.count,
        prune_stats: run.result.stats.prunes.clone(),
        stats: run.result.stats.clone(),
        jobs: run.jobs,
        wall_seconds: run.wall_seconds,
        graph6_file: list_path.to_string_lossy().into_owned(),
        graph6_sha256: sha256_hex(body.as_bytes()),
        guard_overridden: spec.override_guard,
        audit: run.result.audit.clone(),
    };
    let manifest_path = manifest.unwrap_or_else(|| out_dir.join(format!("{stem}.json")));
    write_json(&manifest_path, &m)?;
    if let Some(a) = &run.result.audit {
        if !a.is_clean() {
            eprintln!("platykit: {} audit violation(s); see {}", a.violations.len(), manifest_path.display());
        }
    }
    println!("{}", run.result.count);
    Ok(())
}
