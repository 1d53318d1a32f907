use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use edgereg::betti::{betti_table, regularity, BettiJson, BettiTable};
use edgereg::graph::{is_chordal, parse_edge_list, parse_graph6, Chordality, DEFAULT_SEPARATOR_CAP};
use edgereg::ideal::{complement_edge_ideal, parse_ideal};
use edgereg::reduction::{regularity_via_reduction, ReductionOptions};
use edgereg::suites::{run_suite, Suite, SuiteConfig};
use edgereg::{FieldSpec, Graph, SquarefreeIdeal};

const EXIT_USAGE: u8 = 2;
const EXIT_INCONSISTENT: u8 = 3;

/// Castelnuovo–Mumford regularity of edge ideals of complement graphs, by
/// graph reductions and by Hochster's formula.
#[derive(Parser, Debug)]
#[command(name = "edgereg", version)]
struct Cli {
    #[command(flatten)]
    config: Config,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Config {
    /// Coefficient field: `q` or `gf:<p>`.
    #[arg(long, global = true, default_value = "q")]
    field: FieldSpec,

    /// Input format; detected from the content when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[arg(long, global = true, value_enum, default_value_t = Output::Table)]
    output: Output,

    /// Re-check every reduction step and the final value against the oracle.
    #[arg(long, global = true)]
    verify: bool,

    /// Largest graph size for verification suites (exhaustive up to 6).
    #[arg(long, global = true, default_value_t = 6)]
    max_n: usize,

    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Largest clique separator tried when splitting.
    #[arg(long, global = true, default_value_t = DEFAULT_SEPARATOR_CAP)]
    separator_cap: usize,

    /// Print the reduction trace.
    #[arg(long, global = true)]
    trace: bool,

    /// Random instances per sampled size in verification suites.
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,

    /// File of graph6 records (one per line) replacing random graphs above n = 6.
    #[arg(long, global = true)]
    graphs: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
    Ideal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Regularity of I(Ḡ) by reduction.
    Reg {
        /// Path, `-` for stdin, or the graph itself.
        input: String,
    },
    /// Graded Betti numbers of I(Ḡ), or of an ideal given with --ideal.
    Betti {
        #[arg(required_unless_present = "ideal")]
        input: Option<String>,
        #[arg(long, conflicts_with = "input")]
        ideal: Option<String>,
    },
    /// Alexander dual of a squarefree monomial ideal.
    Dual {
        #[arg(long)]
        ideal: String,
    },
    /// Chordality with a certificate.
    Chordal { input: String },
    /// Run a property suite.
    Verify { suite: String },
}

enum Failure {
    Usage(String),
    Inconsistent(String),
}

impl From<edgereg::Error> for Failure {
    fn from(e: edgereg::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Inconsistent(msg)) => {
            eprintln!("inconsistency: {msg}");
            ExitCode::from(EXIT_INCONSISTENT)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let cfg = &cli.config;
    match &cli.command {
        Command::Reg { input } => cmd_reg(&read_source(input)?, cfg),
        Command::Betti { input, ideal } => {
            let ideal = match (input, ideal) {
                (_, Some(src)) => parse_ideal(&read_source(src)?, None)?,
                (Some(src), None) if cfg.format == Some(Format::Ideal) => parse_ideal(&read_source(src)?, None)?,
                (Some(src), None) => complement_edge_ideal(&parse_graph(&read_source(src)?, cfg.format)?),
                (None, None) => unreachable!("clap requires one input"),
            };
            cmd_betti(&ideal, cfg)
        }
        Command::Dual { ideal } => cmd_dual(&parse_ideal(&read_source(ideal)?, None)?, cfg),
        Command::Chordal { input } => cmd_chordal(&parse_graph(&read_source(input)?, cfg.format)?, cfg),
        Command::Verify { suite } => cmd_verify(suite, cfg),
    }
}

/// `-` reads stdin, an existing path is read from disk, anything else is the text itself.
fn read_source(src: &str) -> std::result::Result<String, Failure> {
    if src == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        return Ok(buf);
    }
    let path = Path::new(src);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{src}: {e}")));
    }
    Ok(src.to_string())
}

fn looks_like_graph6(text: &str) -> bool {
    let t = text.trim();
    !t.is_empty() && t.bytes().all(|b| (63..=126).contains(&b))
}

fn parse_graph(text: &str, format: Option<Format>) -> std::result::Result<Graph, Failure> {
    let graph6 = match format {
        Some(Format::Graph6) => true,
        Some(Format::Edgelist) => false,
        Some(Format::Ideal) => return Err(Failure::Usage("this command expects a graph, not an ideal".into())),
        None => looks_like_graph6(text),
    };
    Ok(if graph6 { parse_graph6(text)? } else { parse_edge_list(text)? })
}

fn emit(cfg: &Config, value: Value, table: String) {
    match cfg.output {
        Output::Json => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
        Output::Table => print!("{table}"),
    }
}

fn cmd_reg(text: &str, cfg: &Config) -> Outcome {
    if cfg.format == Some(Format::Ideal) {
        return Err(Failure::Usage("reg takes a graph; use `betti --ideal` for ideals".into()));
    }
    let g = parse_graph(text, cfg.format)?;
    let opts = ReductionOptions { field: cfg.field, separator_cap: cfg.separator_cap, verify: cfg.verify };
    let (reg, trace) = regularity_via_reduction(&g, &opts)?;
    let oracle = match (cfg.verify, reg) {
        (true, Some(_)) => Some(regularity(&complement_edge_ideal(&g), cfg.field)?),
        _ => None,
    };
    let consistent = oracle.is_none_or(|o| reg == Some(o)) && (!cfg.verify || trace.all_verified());

    let mut value = json!({
        "graph": g.to_graph6(),
        "n": g.n(),
        "field": cfg.field,
        "reg": reg,
        "zero_ideal": reg.is_none(),
        "oracle": oracle,
        "consistent": consistent,
    });
    if cfg.trace {
        value["trace"] = serde_json::to_value(trace.to_json()).expect("serializable");
    }

    let mut table = format!("graph: {} (n = {}, {} edges)\n", g.to_graph6(), g.n(), g.edge_count());
    match reg {
        Some(r) => writeln!(table, "reg: {r}").unwrap(),
        None => writeln!(table, "reg: null (zero ideal, the graph is complete)").unwrap(),
    }
    if let Some(o) = oracle {
        writeln!(table, "oracle: {o}").unwrap();
    }
    if cfg.trace && !trace.steps.is_empty() {
        table.push_str("trace:\n");
        for line in trace.render().lines() {
            writeln!(table, "  {line}").unwrap();
        }
    }
    for flag in &trace.flags {
        writeln!(table, "flag: {flag}").unwrap();
    }
    emit(cfg, value, table);

    if consistent {
        Ok(())
    } else {
        Err(Failure::Inconsistent(format!("reduction gives {reg:?}, oracle gives {oracle:?}")))
    }
}

fn render_betti(table: &BettiTable) -> String {
    let pd = table.projective_dimension();
    let rows: Vec<usize> = {
        let mut r: Vec<usize> = table.entries().map(|((i, j), _)| j - i).collect();
        r.sort_unstable();
        r.dedup();
        r
    };
    let mut out = String::from("      ");
    for i in 0..=pd {
        write!(out, "{i:>6}").unwrap();
    }
    out.push('\n');
    for r in rows {
        write!(out, "{r:>4}: ").unwrap();
        for i in 0..=pd {
            match table.get(i, i + r) {
                0 => write!(out, "{:>6}", "."),
                b => write!(out, "{b:>6}"),
            }
            .unwrap();
        }
        out.push('\n');
    }
    out
}

fn cmd_betti(ideal: &SquarefreeIdeal, cfg: &Config) -> Outcome {
    let table = betti_table(ideal, cfg.field)?;
    let summary = BettiJson::new(ideal, &table)?;
    let mut text = format!("ideal: {ideal}\nfield: {}\n", cfg.field);
    text.push_str(&render_betti(&table));
    writeln!(
        text,
        "reg {}  pd {}  depth S/I {}  dim S/I {}  linear {}",
        summary.reg, summary.pd, summary.depth, summary.dim, summary.linear
    )
    .unwrap();
    emit(cfg, serde_json::to_value(&summary).expect("serializable"), text);
    Ok(())
}

fn cmd_dual(ideal: &SquarefreeIdeal, cfg: &Config) -> Outcome {
    let dual = ideal.alexander_dual()?;
    emit(cfg, serde_json::to_value(dual.to_json()).expect("serializable"), format!("{dual}\n"));
    Ok(())
}

fn cmd_chordal(g: &Graph, cfg: &Config) -> Outcome {
    let verdict = is_chordal(g);
    let value = json!({
        "graph": g.to_graph6(),
        "chordal": verdict.is_chordal(),
        "certificate": verdict,
    });
    let join = |vs: &[usize]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    let table = match &verdict {
        Chordality::PerfectEliminationOrdering(order) => {
            format!("chordal: yes\nperfect elimination ordering: {}\n", join(order))
        }
        Chordality::ChordlessCycle(cycle) => format!("chordal: no\nchordless cycle: {}\n", join(cycle)),
    };
    emit(cfg, value, table);
    Ok(())
}

fn cmd_verify(name: &str, cfg: &Config) -> Outcome {
    let suite: Suite = name.parse()?;
    let graphs = match &cfg.graphs {
        Some(src) => Some(
            read_source(src)?
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(parse_graph6)
                .collect::<edgereg::Result<Vec<_>>>()?,
        ),
        None => None,
    };
    let config = SuiteConfig {
        field: cfg.field,
        max_n: cfg.max_n,
        seed: cfg.seed,
        samples: cfg.samples,
        separator_cap: cfg.separator_cap,
        graphs,
    };
    let report = run_suite(suite, &config)?;
    emit(cfg, serde_json::to_value(&report).expect("serializable"), report.to_string());
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Inconsistent(format!("suite {suite} had {} failures", report.failures)))
    }
}
