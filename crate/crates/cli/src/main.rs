//! `hopforce`: forcing numbers, throttling, bounds, atlases and the
//! acceptance suite from the command line.

mod input;
mod output;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopforce::bounds::{bound_report, verify_bounds, BoundsError};
use hopforce::extremal::{forbidden_family, generate_th_eq, generate_th_le, ExtremalError};
use hopforce::forcing::{round_decompose, Certificate, ForceSet, Quantity};
use hopforce::graph::{write_graph6, Graph};
use hopforce::solvers::{ProductVariant, SolveError, Solver};
use hopforce::verify::{find_criterion, run_criterion, SuiteOptions, CRITERIA};
use hopforce::{Extended, Rule};
use serde_json::{json, Value};

use input::{InputArgs, Item};
use output::{Format, Kind, Row, Table};

#[derive(Parser)]
#[command(name = "hopforce", version, about = "Exact hopping zero forcing on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Forcing number with a minimum forcing set
    Number(Job),
    /// Throttling number, or a product variant, with a certificate
    Throttle {
        #[command(flatten)]
        job: Job,
        #[arg(long, value_enum)]
        product: Option<Product>,
    },
    /// Connectivity and independence bounds on th_H
    Bounds {
        #[command(flatten)]
        job: Job,
        /// Skip the exact throttling number
        #[arg(long)]
        no_exact: bool,
    },
    /// Graphs with th_H = t, or the forbidden family for n - k
    Atlas(AtlasArgs),
    /// Run the acceptance table
    Verify(VerifyArgs),
    /// Re-validate certificates read from JSON
    Check(CheckArgs),
}

#[derive(Args)]
struct Job {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value = "H", value_parser = parse_rule)]
    rule: Rule,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    #[arg(long, value_parser = parse_seconds)]
    limit_seconds: Option<Duration>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    limit_states: Option<u64>,
    /// Re-validate every certificate before printing it
    #[arg(long)]
    check: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Product {
    /// min k (1 + pt(G, k))
    X,
    /// min k pt(G, k) over k < n
    Star,
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "mode")]
struct AtlasMode {
    /// Graphs with th_H = t
    #[arg(long)]
    th: Option<usize>,
    /// Minimal graphs forcing th_H < n - k
    #[arg(long)]
    forbidden: Option<usize>,
}

#[derive(Args)]
struct AtlasArgs {
    #[command(flatten)]
    mode: AtlasMode,
    /// With --th, every graph with th_H <= t
    #[arg(long, requires = "th")]
    cumulative: bool,
    /// Write graph6 lines here and the summary to stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Paper,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "paper")]
    suite: Suite,
    /// Criterion ids or names, repeatable or comma separated
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Negate one assertion per criterion
    #[arg(long)]
    inject_failure: bool,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct CheckArgs {
    /// JSON certificates or output rows; stdin when absent
    #[arg(long)]
    file: Option<PathBuf>,
    /// Graph for certificates that carry none
    #[arg(long)]
    g6: Option<String>,
}

fn parse_rule(s: &str) -> Result<Rule, String> {
    s.parse()
}

fn parse_seconds(s: &str) -> Result<Duration, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(Duration::from_secs_f64(x)),
        _ => Err(format!("expected a positive number of seconds, got {s:?}")),
    }
}

/// Exit statuses.
const MISMATCH: u8 = 1;
const USAGE: u8 = 2;
const PARSE: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    let code = match cli.command {
        Command::Number(job) => run_job(&job, Format::Plain, number),
        Command::Throttle { job, product } => run_job(&job, Format::Plain, |g, cx| throttle(g, cx, product)),
        Command::Bounds { job, no_exact } => run_job(&job, Format::Csv, |g, cx| bounds(g, cx, no_exact)),
        Command::Atlas(args) => atlas(&args),
        Command::Verify(args) => verify(&args),
        Command::Check(args) => check(&args),
    };
    ExitCode::from(code)
}

fn pool(jobs: Option<u64>) -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        b = b.num_threads(j as usize);
    }
    b.build().expect("thread pool")
}

/// Per-row context.
struct Cx<'a> {
    job: &'a Job,
    solver: Solver,
}

fn run_job(job: &Job, default: Format, f: impl Fn(&Graph, &Cx) -> Row + Sync) -> u8 {
    let items = match input::load(&job.input) {
        Ok(items) => items,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            return code;
        }
    };
    let rows: Vec<Row> = pool(job.jobs).install(|| {
        use rayon::prelude::*;
        items
            .par_iter()
            .map(|item| match item {
                Item::Graph(g) => {
                    let cx = Cx { job, solver: Solver::with_limits(job.limit_states, job.limit_seconds) };
                    f(g, &cx).labeled(write_graph6(g))
                }
                Item::Bad { text, kind, message } => Row::error(*kind, message.clone()).labeled(text.clone()),
            })
            .collect()
    });
    let table = Table::new(job.format.unwrap_or(default));
    table.print(&rows);
    rows.iter().map(|r| r.kind.code()).max().unwrap_or(0)
}

fn solve_error(e: SolveError) -> Row {
    match e {
        SolveError::LimitExceeded { explored, best } => {
            let mut r = Row::error(Kind::Limit, format!("search limit reached after {explored} states"));
            if let Some(b) = best {
                r = r.field("best", json!(b));
            }
            r
        }
        e => Row::error(Kind::Usage, e.to_string()),
    }
}

fn emit(row: Row, cert: Certificate, g: &Graph, cx: &Cx) -> Row {
    let cert = cert.with_graph(g);
    if cx.job.check {
        if let Err(e) = cert.validate(None) {
            return Row::error(Kind::Mismatch, format!("certificate does not validate: {e}"));
        }
    }
    row.field("certificate", serde_json::to_value(&cert).expect("certificate serializes"))
}

fn number(g: &Graph, cx: &Cx) -> Row {
    let rule = cx.job.rule;
    let f = match cx.solver.forcing_number(g, rule) {
        Ok(f) => f,
        Err(e) => return solve_error(e),
    };
    let schedule = round_decompose(g, &ForceSet::new(f.witness, f.list), rule).expect("solver lists are valid");
    let cert = Certificate::from_schedule(&schedule, rule).with_claim(Quantity::Number, Extended::Finite(f.value as u64));
    let row = Row::value(json!(f.value)).field("rule", json!(rule)).field("witness", json!(f.witness));
    emit(row, cert, g, cx)
}

fn throttle(g: &Graph, cx: &Cx, product: Option<Product>) -> Row {
    let rule = cx.job.rule;
    let (quantity, name, value, cert) = match product {
        None => match cx.solver.throttling_number(g, rule) {
            Ok(c) => (Quantity::Throttle, "th", c.th, c),
            Err(e) => return solve_error(e),
        },
        Some(p) => {
            let (variant, q, name) = match p {
                Product::X => (ProductVariant::InitialCost, Quantity::ProductX, "th_x"),
                Product::Star => (ProductVariant::NoCost, Quantity::ProductStar, "th_star"),
            };
            match cx.solver.product_throttling(g, rule, variant) {
                Ok(pc) => match pc.witness {
                    Some(w) => (q, name, pc.value, w),
                    None => {
                        let row = Row::value(json!(pc.value)).field("rule", json!(rule)).field("quantity", json!(name));
                        return row.field("size", Value::Null).field("pt", json!(pc.pt_k));
                    }
                },
                Err(e) => return solve_error(e),
            }
        }
    };
    let row = Row::value(json!(value))
        .field("rule", json!(rule))
        .field("quantity", json!(name))
        .field("size", json!(cert.size))
        .field("pt", json!(cert.pt))
        .field("base", json!(cert.base));
    let c = cert.certificate(rule, quantity, value);
    emit(row, c, g, cx)
}

fn bounds(g: &Graph, cx: &Cx, no_exact: bool) -> Row {
    let report = if no_exact {
        Ok(bound_report(g))
    } else {
        verify_bounds(g, None, &cx.solver)
    };
    match report {
        Ok(r) => Row::fields()
            .field("n", json!(r.n))
            .field("kappa", json!(r.kappa))
            .field("alpha", json!(r.alpha))
            .field("delta", json!(r.delta))
            .field("lower", json!(r.lower))
            .field("exact", json!(r.exact))
            .field("upper", json!(r.upper))
            .field("tight_lower", json!(r.tight_lower))
            .field("tight_upper", json!(r.tight_upper)),
        Err(BoundsError::Solve(e)) => solve_error(e),
        Err(e @ BoundsError::SandwichViolation { .. }) => Row::error(Kind::Mismatch, e.to_string()),
        Err(e) => Row::error(Kind::Usage, e.to_string()),
    }
}

fn atlas(args: &AtlasArgs) -> u8 {
    let result: Result<(Value, Vec<String>), ExtremalError> = pool(args.jobs).install(|| {
        if let Some(t) = args.mode.th {
            let (set, mode) = if args.cumulative { (generate_th_le(t)?, "th_le") } else { (generate_th_eq(t)?, "th") };
            Ok((json!({"mode": mode, "t": t, "count": set.len()}), set.iter().map(|k| k.graph6()).collect()))
        } else {
            let k = args.mode.forbidden.expect("clap enforces one mode");
            let set = forbidden_family(k)?;
            Ok((json!({"mode": "forbidden", "k": k, "count": set.len()}), set.iter().map(|k| k.graph6()).collect()))
        }
    });
    let (summary, lines) = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return USAGE;
        }
    };
    let mut body = lines.join("\n");
    if !lines.is_empty() {
        body.push('\n');
    }
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: {}: {e}", path.display());
                return USAGE;
            }
            println!("{summary}");
        }
        None => {
            print!("{body}");
            eprintln!("{summary}");
        }
    }
    0
}

fn verify(args: &VerifyArgs) -> u8 {
    let Suite::Paper = args.suite;
    let mut ids = Vec::new();
    for key in &args.only {
        match find_criterion(key) {
            Some(c) => ids.push(c.id),
            None => {
                eprintln!("error: unknown criterion {key:?}");
                return USAGE;
            }
        }
    }
    if ids.is_empty() {
        ids = CRITERIA.iter().map(|c| c.id).collect();
    } else if ids.contains(&5) {
        eprintln!("note: the strict-gap criterion runs exhaustive layer searches on 37- and 82-vertex spiders");
    }
    let opts = SuiteOptions { inject_failure: args.inject_failure };
    let json = matches!(args.format, Some(Format::Json));
    let mut failed = 0;
    for id in ids {
        let o = run_criterion(id, &opts);
        if json {
            println!("{}", serde_json::to_string(&o).expect("outcome serializes"));
        } else {
            println!("{}", o.line());
        }
        failed += usize::from(!o.passed);
    }
    if !json {
        if failed == 0 {
            println!("all criteria passed");
        } else {
            println!("{failed} criteria failed");
        }
    }
    if failed == 0 {
        0
    } else {
        MISMATCH
    }
}

fn check(args: &CheckArgs) -> u8 {
    let mut text = String::new();
    let read = match &args.file {
        Some(p) => std::fs::read_to_string(p).map(|t| text = t),
        None => std::io::stdin().read_to_string(&mut text).map(|_| ()),
    };
    if let Err(e) = read {
        eprintln!("error: {e}");
        return USAGE;
    }
    let graph = match args.g6.as_deref().map(hopforce::graph::parse_graph6).transpose() {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return PARSE;
        }
    };
    let mut code = 0;
    let mut seen = 0;
    for value in serde_json::Deserializer::from_str(&text).into_iter::<Value>() {
        let value = match value {
            Ok(v) => v,
            Err(e) => {
                eprintln!("error: bad JSON: {e}");
                return PARSE;
            }
        };
        let items = match value {
            Value::Array(vs) => vs,
            v => vec![v],
        };
        for v in items {
            seen += 1;
            let raw = match v.get("certificate") {
                Some(c) => c.clone(),
                None if v.get("status").is_some() => {
                    println!("skip  row without certificate: {}", v.get("graph6").unwrap_or(&Value::Null));
                    continue;
                }
                None => v,
            };
            match serde_json::from_value::<Certificate>(raw) {
                Ok(cert) => match cert.validate(graph.as_ref()) {
                    Ok(_) => println!("ok    {}", summary(&cert)),
                    Err(e) => {
                        println!("FAIL  {}: {e}", summary(&cert));
                        code = code.max(MISMATCH);
                    }
                },
                Err(e) => {
                    println!("FAIL  not a certificate: {e}");
                    code = code.max(PARSE);
                }
            }
        }
    }
    if seen == 0 {
        eprintln!("error: no certificates on input");
        return PARSE;
    }
    code
}

fn summary(c: &Certificate) -> String {
    let mut s = format!("rule={} pt={}", c.rule, c.pt);
    if let (Some(q), Some(v)) = (c.quantity, c.value) {
        s.push_str(&format!(" {}={v}", serde_json::to_value(q).expect("quantity serializes").as_str().unwrap_or("?")));
    }
    if let Some(g) = &c.graph {
        s.push_str(&format!(" graph6={g}"));
    }
    s
}
