use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use arbor::closed_forms::{path_p, path_q};
use arbor::verifier::{export_report, ReportFormat, Status, SweepOptions, SweepReport, Verifier};
use arbor::{count_trees, enumerate_trees, monte_carlo, MemoTable, PlayModel, Prob, StoppingDist, Tree};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "arbor", version, about = "Exact values and exhaustive checks for the tree search game")]
struct Cli {
    /// Worker threads; 1 forces the single-threaded path.
    #[arg(long, global = true, env = "ARBOR_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Oo,
    SemirandomFirst,
    SemirandomSecond,
    RandomRandom,
}

impl From<Model> for PlayModel {
    fn from(m: Model) -> Self {
        match m {
            Model::Oo => PlayModel::Oo,
            Model::SemirandomFirst => PlayModel::SemirandomFirst,
            Model::SemirandomSecond => PlayModel::SemirandomSecond,
            Model::RandomRandom => PlayModel::RandomRandom,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Semirandom,
    Allrandom,
    Limbs,
    Alternating,
    FixedTarget,
    Oo,
}

#[derive(Subcommand)]
enum Command {
    /// Exact value of a tree under one play model, with per-vertex values.
    Value {
        /// Tree spec: P:n, S:n, SP:a,b,c, an edge list, or - for stdin.
        #[arg(long)]
        tree: String,
        #[arg(long, value_enum, default_value = "semirandom-first")]
        model: Model,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The path values p_n and q_n for n = 1..max.
    Table {
        #[arg(long, default_value_t = 7)]
        max: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// All trees of order n up to isomorphism, as edge lists.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Print only the number of classes.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exhaustive sweep over every tree of order n.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(long)]
        n: usize,
        /// Half-length of the alternating sum.
        #[arg(long)]
        k: Option<usize>,
        /// Report format; without it a summary is printed.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Seeded Monte Carlo estimate next to the exact value.
    Simulate {
        #[arg(long)]
        tree: String,
        #[arg(long, value_enum, default_value = "semirandom-first")]
        model: Model,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Distribution of the number of guesses under random play.
    Stopping {
        #[arg(long)]
        tree: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the HTTP play service.
    Serve {
        #[arg(long, env = "ARBOR_PORT", default_value_t = 8080)]
        port: u16,
        #[arg(long, env = "ARBOR_ANALYSIS_CAP", default_value_t = arbor_server::config::DEFAULT_ANALYSIS_CAP)]
        analysis_cap: usize,
        /// Directory for session snapshots.
        #[arg(long, env = "ARBOR_PERSIST_DIR")]
        persist_dir: Option<PathBuf>,
        /// Allowed CORS origin; repeat or comma-separate for several.
        #[arg(long = "cors-origin", env = "ARBOR_CORS_ORIGINS", value_delimiter = ',')]
        cors_origins: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn threads(cli_threads: Option<usize>) -> usize {
    cli_threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1)
}

fn read_tree(spec: &str) -> Result<Tree> {
    let text = if spec == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).context("reading tree from stdin")?;
        buf
    } else {
        spec.to_string()
    };
    Tree::parse_spec(&text).with_context(|| format!("invalid tree {spec:?}"))
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn text_only(format: Format, what: &str) -> Result<()> {
    if format == Format::Csv {
        bail!("{what} supports text and json output only");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let threads = threads(cli.threads);
    match cli.command {
        Command::Value { tree, model, format } => {
            text_only(format, "value")?;
            cmd_value(&read_tree(&tree)?, model.into(), format)?;
        }
        Command::Table { max, format } => cmd_table(max, format)?,
        Command::Enumerate { n, count, format } => {
            text_only(format, "enumerate")?;
            cmd_enumerate(n, count, format, threads)?;
        }
        Command::Verify {
            check,
            n,
            k,
            format,
            output,
        } => return cmd_verify(check, n, k, format, output, threads),
        Command::Simulate {
            tree,
            model,
            trials,
            seed,
            format,
        } => {
            text_only(format, "simulate")?;
            cmd_simulate(&read_tree(&tree)?, model.into(), trials, seed, format)?;
        }
        Command::Stopping { tree, format } => {
            text_only(format, "stopping")?;
            cmd_stopping(&read_tree(&tree)?, format)?;
        }
        Command::Serve {
            port,
            analysis_cap,
            persist_dir,
            cors_origins,
        } => {
            tracing_subscriber::fmt().with_writer(io::stderr).init();
            let config = arbor_server::Config {
                port,
                analysis_cap,
                persist_dir,
                cors_origins,
            };
            tokio::runtime::Runtime::new()?.block_on(arbor_server::serve(config))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ValueOutput {
    model: &'static str,
    order: usize,
    value: Prob,
    /// Optimal first guesses, when the model has a strategic first mover.
    #[serde(skip_serializing_if = "Option::is_none")]
    moves: Option<Vec<usize>>,
    by_vertex: Vec<Prob>,
}

fn cmd_value(tree: &Tree, model: PlayModel, format: Format) -> Result<()> {
    let memo = MemoTable::new();
    let b = memo.bundle(tree);
    let (value, moves, by_vertex) = match model {
        PlayModel::Oo => (b.oo_value, Some(b.oo_moves), b.oo_by_vertex),
        PlayModel::SemirandomFirst => (b.p_first, Some(b.p_first_moves), b.p_first_by_vertex),
        PlayModel::SemirandomSecond => (b.q_second, None, b.q_second_by_vertex),
        PlayModel::RandomRandom => (b.rr_value, None, b.rr_by_vertex),
    };
    let out = ValueOutput {
        model: model.name(),
        order: tree.order(),
        value,
        moves,
        by_vertex,
    };
    if format == Format::Json {
        return print_json(&out);
    }
    println!("{} ({:.6})", out.value, out.value.to_f64());
    println!("vertex  value");
    for (v, p) in out.by_vertex.iter().enumerate() {
        let mark = match &out.moves {
            Some(m) if m.contains(&v) => "  *",
            _ => "",
        };
        println!("{v:>6}  {p} ({:.6}){mark}", p.to_f64());
    }
    Ok(())
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    p: Prob,
    q: Prob,
}

fn cmd_table(max: usize, format: Format) -> Result<()> {
    if max == 0 {
        bail!("--max must be at least 1");
    }
    let rows: Vec<TableRow> = (1..=max)
        .map(|n| TableRow {
            n,
            p: path_p(n),
            q: path_q(n),
        })
        .collect();
    match format {
        Format::Json => print_json(&rows)?,
        Format::Csv => {
            println!("n,p_num,p_den,q_num,q_den");
            for r in &rows {
                println!("{},{},{},{},{}", r.n, r.p.numer(), r.p.denom(), r.q.numer(), r.q.denom());
            }
        }
        Format::Text => {
            println!("{:>4}  {:>24}  {:>24}", "n", "p_n", "q_n");
            for r in &rows {
                println!(
                    "{:>4}  {:>24}  {:>24}",
                    r.n,
                    format!("{} ({:.6})", r.p, r.p.to_f64()),
                    format!("{} ({:.6})", r.q, r.q.to_f64())
                );
            }
        }
    }
    Ok(())
}

fn cmd_enumerate(n: usize, count: bool, format: Format, threads: usize) -> Result<()> {
    if count {
        let c = count_trees(n, threads);
        if format == Format::Json {
            return print_json(&serde_json::json!({ "n": n, "count": c }));
        }
        println!("{c}");
        return Ok(());
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    if format == Format::Json {
        let trees: Vec<_> = enumerate_trees(n).map(|t| t.edges().to_vec()).collect();
        serde_json::to_writer(&mut out, &trees)?;
        writeln!(out)?;
    } else {
        for (i, t) in enumerate_trees(n).enumerate() {
            if i > 0 {
                writeln!(out)?;
            }
            write!(out, "{}", t.to_edge_list())?;
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_verify(
    check: Check,
    n: usize,
    k: Option<usize>,
    format: Option<Format>,
    output: Option<PathBuf>,
    threads: usize,
) -> Result<ExitCode> {
    let verifier = Verifier::new(SweepOptions {
        threads,
        record_values: format == Some(Format::Csv),
    });
    let report = match check {
        Check::Semirandom => verifier.semirandom_bounds(n),
        Check::Allrandom => verifier.allrandom_bounds(n),
        Check::Limbs => verifier.limb_lemmas(n),
        Check::Alternating => {
            let Some(k) = k else {
                bail!("alternating needs --k");
            };
            verifier.alternating_inequality(n, k)
        }
        Check::FixedTarget => verifier.fixed_target(n),
        Check::Oo => verifier.oo_closed_form(n),
    }?;
    match format {
        None | Some(Format::Text) => match output {
            Some(path) => {
                export_report(&report, ReportFormat::Json, BufWriter::new(File::create(&path)?))?;
                print_summary(&report);
            }
            None => print_summary(&report),
        },
        Some(f) => {
            let rf = if f == Format::Csv { ReportFormat::Csv } else { ReportFormat::Json };
            match output {
                Some(path) => export_report(&report, rf, BufWriter::new(File::create(&path)?))?,
                None => export_report(&report, rf, io::stdout().lock())?,
            }
        }
    }
    Ok(ExitCode::from(report.verdict().exit_code() as u8))
}

fn print_summary(report: &SweepReport) {
    println!(
        "{} n = {}: {} classes in {:.2}s",
        report.sweep, report.order, report.class_count, report.wall_time_secs
    );
    for c in &report.checks {
        let status = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        let kind = serde_json::to_value(c.kind).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
        let extra = if c.witnesses.is_empty() {
            String::new()
        } else {
            format!(" ({} witnesses)", c.witnesses.len())
        };
        println!("  {status:4}  {kind:11} {}{extra}", c.name);
    }
    for e in &report.extremes {
        println!(
            "  {}: min {} ({} classes), max {} ({} classes)",
            e.model,
            e.min,
            e.min_keys.len(),
            e.max,
            e.max_keys.len()
        );
    }
}

#[derive(Serialize)]
struct SimulateOutput {
    model: &'static str,
    trials: u64,
    seed: u64,
    wins: u64,
    estimate: f64,
    stderr: f64,
    exact: Prob,
}

fn cmd_simulate(tree: &Tree, model: PlayModel, trials: u64, seed: u64, format: Format) -> Result<()> {
    let memo = MemoTable::new();
    let e = monte_carlo(tree, model, trials, seed, &memo)?;
    let out = SimulateOutput {
        model: model.name(),
        trials,
        seed,
        wins: e.wins,
        estimate: e.estimate,
        stderr: e.stderr,
        exact: model.exact(&memo, tree),
    };
    if format == Format::Json {
        return print_json(&out);
    }
    println!("estimate {:.6} +/- {:.6} ({} of {} trials)", out.estimate, out.stderr, out.wins, out.trials);
    println!("exact    {} ({:.6})", out.exact, out.exact.to_f64());
    Ok(())
}

#[derive(Serialize)]
struct StoppingOutput {
    distribution: Vec<Prob>,
    odd_mass: Prob,
    expected: Prob,
}

fn cmd_stopping(tree: &Tree, format: Format) -> Result<()> {
    let memo = MemoTable::new();
    let d = StoppingDist::compute(&memo, tree);
    let out = StoppingOutput {
        odd_mass: d.odd_mass(),
        expected: d.expectation(),
        distribution: d.probs,
    };
    if format == Format::Json {
        return print_json(&out);
    }
    println!("   t  P(tau = t)");
    for (t, p) in out.distribution.iter().enumerate() {
        println!("{:>4}  {p}", t + 1);
    }
    println!("odd mass {} ({:.6})", out.odd_mass, out.odd_mass.to_f64());
    println!("E[tau]   {} ({:.6})", out.expected, out.expected.to_f64());
    Ok(())
}
