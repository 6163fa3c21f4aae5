//! The `tcl` command line.
//!
//! Exit codes: 0 success, 2 parse error, 3 precondition violation,
//! 4 verification or construction failure, 5 search budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::coloring::{coloring_to_matrix, verify, ColorMatrix, TotalColoring};
use crate::constructions::{
    cayley_extend, mock_threshold_total, odd_graph_total, poc_any_odd, poc_even, unitary_total,
    ConstructionResult,
};
use crate::error::Error;
use crate::families::{
    build_circulant, build_kneser, build_odd_graph, build_power_of_cycle, build_unitary_cayley,
};
use crate::graph::{Graph, GraphJson};
use crate::group::{build_cayley_from_table, GroupTable};
use crate::mock::{build_mock_threshold, MockThresholdScript};
use crate::oracle::{
    chromatic_index_exact, conjecture_sweep, sweep_to_csv, total_chromatic_exact, OracleOutcome,
};
use crate::search::{SearchLimits, DEFAULT_BUDGET};

pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INVALID: i32 = 4;
pub const EXIT_BUDGET: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "tcl", version, about = "Total colorings of regular graph families")]
pub struct Cli {
    /// Stream search statistics as JSON lines on stderr.
    #[arg(long, global = true)]
    pub verbose: bool,
    /// Search node budget; defaults to TCL_BUDGET or 10^8.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph and write it as JSON.
    Build {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a construction and write the coloring.
    Color {
        #[command(flatten)]
        family: FamilyArgs,
        /// Construction to run; defaults by family.
        #[arg(long)]
        method: Option<String>,
        /// Directory for graph.json, coloring.json, matrix.csv and result.json.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Check a coloring against a graph; exit 0 iff valid.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Exact total chromatic number (or chromatic index with --edge).
    Oracle {
        #[command(flatten)]
        family: FamilyArgs,
        /// Read the graph from a JSON file instead of a family.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        edge: bool,
    },
    /// Compare χ″(C_n^k) with the predicted value for all 2k+1 < n ≤ nmax.
    Sweep {
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// CSV path; a JSON twin is written next to it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert between graph and coloring formats.
    Export {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        from: Format,
        #[arg(long, value_enum)]
        to: Format,
        /// Coloring JSON, needed for --to matrix.
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dimacs,
    Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Poc,
    Circulant,
    Unitary,
    Kneser,
    Odd,
    Mock,
    Cayley,
}

#[derive(Debug, Args, Default)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Comma separated circulant distances.
    #[arg(long, value_delimiter = ',')]
    pub distances: Vec<usize>,
    /// Mock threshold script such as `I,D,P1,C0`.
    #[arg(long)]
    pub script: Option<String>,
    /// Random mock threshold script on this many vertices.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Group multiplication table as a JSON array of rows.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Connection set of the Cayley graph.
    #[arg(long, value_delimiter = ',')]
    pub gens: Vec<usize>,
    /// Extra connection set for `--method extend`.
    #[arg(long, value_delimiter = ',')]
    pub extra: Vec<usize>,
}

/// Error carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) | Error::Json(_) | Error::Csv(_) => EXIT_PARSE,
            Error::ConstructionFailed(_) | Error::NoFactorization { .. } => EXIT_INVALID,
            Error::BudgetExhausted { .. } | Error::Cancelled => EXIT_BUDGET,
            _ => EXIT_PRECONDITION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn precondition(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_PRECONDITION,
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

struct Ctx {
    verbose: bool,
    budget: u64,
}

impl Ctx {
    fn log(&self, value: serde_json::Value) {
        if self.verbose {
            eprintln!("{value}");
        }
    }

    fn limits(&self) -> SearchLimits {
        SearchLimits::with_budget(self.budget)
    }
}

/// Parses `args` and runs the command, returning the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { 0 };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn env_budget() -> CliResult<Option<u64>> {
    match std::env::var("TCL_BUDGET") {
        Ok(text) => text.trim().parse().map(Some).map_err(|_| Failure {
            code: EXIT_PARSE,
            message: format!("TCL_BUDGET is not a node count: {text:?}"),
        }),
        Err(_) => Ok(None),
    }
}

pub fn execute(cli: Cli) -> CliResult<i32> {
    let budget = match cli.budget {
        Some(b) => b,
        None => env_budget()?.unwrap_or(DEFAULT_BUDGET),
    };
    let ctx = Ctx {
        verbose: cli.verbose,
        budget,
    };
    match cli.command {
        Command::Build { family, out } => {
            let (g, labels) = build_family(&family)?;
            let text = serde_json::to_string(&GraphJson::from_graph(&g, labels)).map_err(Error::from)?;
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Color {
            family,
            method,
            out_dir,
        } => color(&ctx, &family, method.as_deref(), out_dir.as_deref()),
        Command::Verify { graph, coloring } => {
            let g = read_graph(&graph, Format::Json)?;
            let c = TotalColoring::from_json(&read(&coloring)?)?;
            let report = verify(&g, &c);
            println!("{}", serde_json::to_string_pretty(&report).map_err(Error::from)?);
            Ok(if report.is_valid { 0 } else { EXIT_INVALID })
        }
        Command::Oracle {
            family,
            graph,
            edge,
        } => {
            let g = match graph {
                Some(path) => read_graph(&path, Format::Json)?,
                None => build_family(&family)?.0,
            };
            let outcome: OracleOutcome = if edge {
                chromatic_index_exact(&g, &ctx.limits())
            } else {
                total_chromatic_exact(&g, &ctx.limits())
            };
            ctx.log(json!({
                "event": "oracle",
                "nodes": outcome.nodes,
                "lower": outcome.lower,
                "upper": outcome.upper,
            }));
            println!("{}", serde_json::to_string_pretty(&outcome).map_err(Error::from)?);
            Ok(if outcome.budget_hit { EXIT_BUDGET } else { 0 })
        }
        Command::Sweep { nmax, jobs, out } => {
            let rows = conjecture_sweep(nmax, ctx.budget, jobs.max(1));
            for row in &rows {
                ctx.log(json!({"event": "sweep", "n": row.n, "k": row.k, "nodes": row.nodes}));
            }
            let csv = sweep_to_csv(&rows)?;
            match out {
                Some(path) => {
                    write(&path, &csv)?;
                    let twin = serde_json::to_string_pretty(&rows).map_err(Error::from)?;
                    write(&path.with_extension("json"), &twin)?;
                }
                None => print!("{csv}"),
            }
            Ok(0)
        }
        Command::Export {
            graph,
            from,
            to,
            coloring,
            out,
        } => {
            let g = read_graph(&graph, from)?;
            let text = match to {
                Format::Json => g.to_json(),
                Format::Dimacs => g.to_dimacs(),
                Format::Matrix => {
                    let path = coloring.ok_or_else(|| precondition("--to matrix needs --coloring"))?;
                    let c = TotalColoring::from_json(&read(&path)?)?;
                    coloring_to_matrix(&g, &c)?.to_csv()
                }
            };
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| precondition(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| precondition(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => write(path, text),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn read_graph(path: &Path, format: Format) -> CliResult<Graph> {
    let text = read(path)?;
    Ok(match format {
        Format::Json => Graph::from_json(&text)?,
        Format::Dimacs => Graph::from_dimacs(&text)?,
        Format::Matrix => ColorMatrix::from_csv(&text)?.support_graph(),
    })
}

fn need(value: Option<usize>, flag: &str) -> CliResult<usize> {
    value.ok_or_else(|| precondition(format!("missing --{flag}")))
}

fn script_of(f: &FamilyArgs) -> CliResult<MockThresholdScript> {
    match (&f.script, f.random) {
        (Some(text), _) => Ok(text.parse()?),
        (None, Some(n)) => Ok(MockThresholdScript::random(&mut ChaCha8Rng::seed_from_u64(f.seed), n)),
        (None, None) => Err(precondition("mock family needs --script or --random")),
    }
}

fn table_of(f: &FamilyArgs) -> CliResult<GroupTable> {
    let path = f.table.as_ref().ok_or_else(|| precondition("cayley family needs --table"))?;
    let rows: Vec<Vec<usize>> = serde_json::from_str(&read(path)?).map_err(Error::from)?;
    Ok(GroupTable::new(rows)?)
}

fn build_family(f: &FamilyArgs) -> CliResult<(Graph, Option<Vec<Vec<usize>>>)> {
    let family = f.family.ok_or_else(|| precondition("missing --family"))?;
    Ok(match family {
        Family::Poc => (build_power_of_cycle(need(f.n, "n")?, need(f.k, "k")?)?, None),
        Family::Circulant => (build_circulant(need(f.n, "n")?, &f.distances)?, None),
        Family::Unitary => (build_unitary_cayley(need(f.n, "n")?)?, None),
        Family::Kneser => {
            let l = build_kneser(need(f.n, "n")?, need(f.k, "k")?)?;
            (l.graph, Some(l.labels))
        }
        Family::Odd => {
            let l = build_odd_graph(need(f.m, "m")?)?;
            (l.graph, Some(l.labels))
        }
        Family::Mock => (build_mock_threshold(&script_of(f)?)?, None),
        Family::Cayley => (build_cayley_from_table(&table_of(f)?, &f.gens)?, None),
    })
}

fn default_method(f: &FamilyArgs) -> CliResult<&'static str> {
    let family = f.family.ok_or_else(|| precondition("missing --family"))?;
    Ok(match family {
        Family::Poc => {
            let (n, k) = (need(f.n, "n")?, need(f.k, "k")?);
            if n % 2 == 1 {
                "odd"
            } else if n % 4 == 2 && (n - 2) / 4 == k {
                "base"
            } else if crate::constructions::block_parameters(n, k).is_some() {
                "block"
            } else {
                "augment"
            }
        }
        Family::Unitary => "unitary",
        Family::Odd => "odd-graph",
        Family::Mock => "mock",
        Family::Cayley if !f.extra.is_empty() => "extend",
        Family::Circulant | Family::Kneser | Family::Cayley => "exact",
    })
}

fn construct(ctx: &Ctx, f: &FamilyArgs, method: &str, g: &Graph) -> CliResult<ConstructionResult> {
    let family = f.family.expect("checked by default_method");
    let r = match (family, method) {
        (_, "exact") => {
            let outcome = total_chromatic_exact(g, &ctx.limits());
            ctx.log(json!({"event": "oracle", "nodes": outcome.nodes, "lower": outcome.lower, "upper": outcome.upper}));
            if outcome.budget_hit || outcome.cancelled {
                return Err(Error::BudgetExhausted { budget: ctx.budget }.into());
            }
            let c = outcome.witness.expect("oracle returns a witness");
            ConstructionResult::checked(g, c, outcome.upper, "exact", Vec::new())?
        }
        (Family::Poc, "odd") => poc_any_odd(need(f.n, "n")?, need(f.k, "k")?)?,
        (Family::Poc, "base" | "augment" | "block") => {
            poc_even(g, need(f.n, "n")?, need(f.k, "k")?, method)?
        }
        (Family::Unitary, "unitary") => unitary_total(need(f.n, "n")?)?,
        (Family::Odd, "odd-graph") => odd_graph_total(need(f.m, "m")?)?,
        (Family::Mock, "mock") => mock_threshold_total(g, &script_of(f)?)?,
        (Family::Cayley, "extend") => {
            let table = table_of(f)?;
            let base = build_cayley_from_table(&table, &f.gens)?;
            let outcome = total_chromatic_exact(&base, &ctx.limits());
            if outcome.budget_hit || outcome.cancelled {
                return Err(Error::BudgetExhausted { budget: ctx.budget }.into());
            }
            let c = outcome.witness.expect("oracle returns a witness");
            cayley_extend(&base, &c, &table, &f.gens, &f.extra)?
        }
        (family, other) => {
            return Err(precondition(format!(
                "method {other:?} is not available for family {family:?}"
            )))
        }
    };
    Ok(r)
}

fn color(ctx: &Ctx, f: &FamilyArgs, method: Option<&str>, out_dir: Option<&Path>) -> CliResult<i32> {
    let method = match method {
        Some(m) => m,
        None => default_method(f)?,
    };
    let (mut g, labels) = build_family(f)?;
    if f.family == Some(Family::Cayley) && method == "extend" {
        let union: Vec<usize> = f.gens.iter().chain(&f.extra).copied().collect();
        g = build_cayley_from_table(&table_of(f)?, &union)?;
    }
    let r = construct(ctx, f, method, &g)?;
    ctx.log(json!({
        "event": "construction",
        "method": r.method,
        "colors_used": r.colors_used,
        "budget": r.budget,
        "notes": r.notes,
    }));
    let matrix = coloring_to_matrix(&g, &r.coloring)?;
    match out_dir {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| precondition(format!("{}: {e}", dir.display())))?;
            let graph_json =
                serde_json::to_string(&GraphJson::from_graph(&g, labels)).map_err(Error::from)?;
            write(&dir.join("graph.json"), &graph_json)?;
            write(&dir.join("coloring.json"), &r.coloring.to_json())?;
            write(&dir.join("matrix.csv"), &matrix.to_csv())?;
            write(&dir.join("result.json"), &r.envelope_json())?;
        }
        None => print!("{}", matrix.to_csv()),
    }
    Ok(0)
}
