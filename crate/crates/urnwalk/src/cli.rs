//! Command-line surface: exact tables, simulations, recurrence diagnostics,
//! and the 2-D path transform, with CSV/JSON output and a run manifest
//! accompanying every result.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::exact::{eulerian_row, series_partial_sums, EvalMode, SeriesKind, SeriesTable};
use crate::montecarlo::{
    empirical_return_frequency, run_replications_with_workers, write_samples_csv, SimConfig,
};
use crate::urn::UrnScheme;
use crate::walk::map_to_simple_2d;

#[derive(Parser)]
#[command(name = "urnwalk", version, about = "Urn-driven random walks: exact tables and Monte Carlo")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact probability tables (return series, hitting pmf, Eulerian rows).
    Exact {
        #[command(subcommand)]
        which: ExactCommand,
    },
    /// Seeded Monte Carlo experiments.
    Simulate {
        #[command(subcommand)]
        which: SimulateCommand,
    },
    /// Recurrence/transience diagnostics from series partial sums.
    Diagnose {
        #[command(subcommand)]
        which: DiagnoseCommand,
    },
    /// Path transforms.
    Transform {
        #[command(subcommand)]
        which: TransformCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Bernoulli,
    Polya,
    Friedman,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Log,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Return,
    ExpectedHitting,
    HittingMass,
}

#[derive(Args)]
struct SchemeOpts {
    /// Urn scheme driving every dimension.
    #[arg(long, value_enum, default_value = "polya")]
    scheme: SchemeArg,
    /// Initial white balls per dimension.
    #[arg(short = 'w', long, default_value_t = 1)]
    white: u64,
    /// Initial blue balls per dimension.
    #[arg(short = 'b', long, default_value_t = 1)]
    blue: u64,
    /// Number of dimensions.
    #[arg(short = 'd', long, default_value_t = 1)]
    dims: u32,
}

impl SchemeOpts {
    fn scheme(&self) -> UrnScheme {
        match self.scheme {
            SchemeArg::Bernoulli => UrnScheme::fair_coin(),
            SchemeArg::Polya => UrnScheme::PolyaEggenberger,
            SchemeArg::Friedman => UrnScheme::Friedman,
        }
    }

    /// Surfaces invalid compositions before any computation starts.
    fn validate(&self) -> Result<(), String> {
        crate::urn::UrnState::new(self.scheme(), self.white, self.blue)
            .map(|_| ())
            .map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct OutputOpts {
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Write output here (manifest goes to PATH.manifest.json); stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Render exact rationals as decimals with this many digits.
    #[arg(long)]
    decimal_digits: Option<usize>,
}

#[derive(Subcommand)]
enum ExactCommand {
    /// Per-n return probabilities P(X_{2n} = 0) with partial sums.
    ReturnProb {
        #[command(flatten)]
        scheme: SchemeOpts,
        #[arg(long, default_value_t = 20)]
        max_n: u64,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// First-return pmf P(H₀ = 2n) with partial mass.
    HittingPmf {
        #[command(flatten)]
        scheme: SchemeOpts,
        #[arg(long, default_value_t = 20)]
        max_n: u64,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Eulerian-number rows A(n, k).
    Eulerian {
        #[arg(long, default_value_t = 10)]
        max_n: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Generic series table selected by --kind.
    Series {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[command(flatten)]
        scheme: SchemeOpts,
        #[arg(long, default_value_t = 20)]
        max_n: u64,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Subcommand)]
enum SimulateCommand {
    /// First-return times over seeded replicas: stats (JSON) or samples (CSV).
    Hitting {
        #[command(flatten)]
        scheme: SchemeOpts,
        #[arg(long, default_value_t = 10_000)]
        replicas: u64,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        /// Required: no implicit entropy.
        #[arg(long)]
        seed: u64,
        /// Worker threads; must not affect any output value.
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Fraction of replicas at the origin at each even time.
    Occupancy {
        #[command(flatten)]
        scheme: SchemeOpts,
        #[arg(long, default_value_t = 10_000)]
        replicas: u64,
        #[arg(long, default_value_t = 100)]
        horizon: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Subcommand)]
enum DiagnoseCommand {
    /// Partial-sum growth of the return series plus the classification.
    Recurrence {
        #[command(flatten)]
        scheme: SchemeOpts,
        #[arg(long, default_value_t = 10_000)]
        max_n: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Subcommand)]
enum TransformCommand {
    /// Map a diagonal-stepping 2-D path onto the axis-stepping simple walk.
    Rotate2d {
        /// Path file: one position per line, space-separated integers.
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
}

/// Resolved configuration emitted beside every output.
#[derive(Serialize)]
struct RunManifest {
    artifact: &'static str,
    version: &'static str,
    command: Vec<String>,
    seed: Option<u64>,
    timestamp_unix: u64,
}

impl RunManifest {
    fn new(argv: &[String], seed: Option<u64>) -> Self {
        RunManifest {
            artifact: "urnwalk",
            version: env!("CARGO_PKG_VERSION"),
            command: argv.to_vec(),
            seed,
            timestamp_unix: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }
}

/// Writes data to --out or stdout; the manifest accompanies it
/// (PATH.manifest.json, or stderr when writing to stdout) so the data stream
/// itself stays byte-reproducible.
fn emit(data: &str, out: Option<&Path>, manifest: &RunManifest) -> std::io::Result<()> {
    let manifest_json = serde_json::to_string_pretty(manifest).expect("manifest");
    match out {
        Some(path) => {
            fs::write(path, data)?;
            let mut mpath = path.as_os_str().to_owned();
            mpath.push(".manifest.json");
            fs::write(PathBuf::from(mpath), manifest_json)?;
        }
        None => {
            let stdout = std::io::stdout();
            stdout.lock().write_all(data.as_bytes())?;
            eprintln!("{manifest_json}");
        }
    }
    Ok(())
}

fn series_to_csv(table: &SeriesTable, digits: Option<usize>) -> String {
    let mut s = String::from("n,term,partial_sum\n");
    for row in &table.rows {
        s.push_str(&format!(
            "{},{},{}\n",
            row.n,
            row.term.render(digits),
            row.partial_sum.render(digits)
        ));
    }
    s
}

fn series_to_json(table: &SeriesTable, digits: Option<usize>) -> String {
    let rows: Vec<_> = table
        .rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "term": r.term.render(digits),
                "partial_sum": r.partial_sum.render(digits),
            })
        })
        .collect();
    let doc = json!({
        "kind": table.kind.name(),
        "scheme": table.scheme,
        "w": table.w,
        "b": table.b,
        "d": table.d,
        "mode": match table.mode { EvalMode::Exact => "exact", EvalMode::LogSpace => "log" },
        "rows": rows,
    });
    serde_json::to_string_pretty(&doc).expect("json") + "\n"
}

fn classification(scheme: &UrnScheme, d: u32) -> &'static str {
    match (scheme, d) {
        (UrnScheme::PolyaEggenberger, 1) => "null recurrent",
        (UrnScheme::PolyaEggenberger, _) => "transient",
        (UrnScheme::Friedman, 1) => "recurrent (conjectured positive recurrent)",
        (UrnScheme::Friedman, 2) => "recurrent (recurrence type undetermined)",
        (UrnScheme::Friedman, _) => "transient",
        (UrnScheme::Bernoulli { .. }, 1 | 2) => "recurrent",
        (UrnScheme::Bernoulli { .. }, _) => "transient",
    }
}

/// Entry point used by the binary; returns the process exit status.
pub fn run<I>(argv: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let argv: Vec<String> = argv.into_iter().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            // help/version exit zero; flag errors exit nonzero
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli, &argv) {
        Ok(()) => 0,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn dispatch(cli: Cli, argv: &[String]) -> Result<(), String> {
    match cli.command {
        Command::Exact { which } => run_exact(which, argv),
        Command::Simulate { which } => run_simulate(which, argv),
        Command::Diagnose { which } => run_diagnose(which, argv),
        Command::Transform { which } => run_transform(which, argv),
    }
}

fn eval_mode(m: ModeArg) -> EvalMode {
    match m {
        ModeArg::Exact => EvalMode::Exact,
        ModeArg::Log => EvalMode::LogSpace,
    }
}

fn run_exact(cmd: ExactCommand, argv: &[String]) -> Result<(), String> {
    let (table, output) = match cmd {
        ExactCommand::ReturnProb {
            scheme,
            max_n,
            mode,
            output,
        } => {
            scheme.validate()?;
            let t = series_partial_sums(
                SeriesKind::ReturnSeries,
                &scheme.scheme(),
                scheme.white,
                scheme.blue,
                scheme.dims,
                max_n,
                eval_mode(mode),
            )
            .map_err(|e| e.to_string())?;
            (t, output)
        }
        ExactCommand::HittingPmf {
            scheme,
            max_n,
            mode,
            output,
        } => {
            scheme.validate()?;
            let t = series_partial_sums(
                SeriesKind::HittingMass,
                &scheme.scheme(),
                scheme.white,
                scheme.blue,
                scheme.dims,
                max_n,
                eval_mode(mode),
            )
            .map_err(|e| e.to_string())?;
            (t, output)
        }
        ExactCommand::Series {
            kind,
            scheme,
            max_n,
            mode,
            output,
        } => {
            scheme.validate()?;
            let kind = match kind {
                KindArg::Return => SeriesKind::ReturnSeries,
                KindArg::ExpectedHitting => SeriesKind::ExpectedHitting,
                KindArg::HittingMass => SeriesKind::HittingMass,
            };
            let t = series_partial_sums(
                kind,
                &scheme.scheme(),
                scheme.white,
                scheme.blue,
                scheme.dims,
                max_n,
                eval_mode(mode),
            )
            .map_err(|e| e.to_string())?;
            (t, output)
        }
        ExactCommand::Eulerian { max_n, output } => {
            let manifest = RunManifest::new(argv, None);
            let data = match output.format {
                FormatArg::Csv => {
                    let mut s = String::from("n,k,value\n");
                    for n in 1..=max_n {
                        for (k, v) in eulerian_row(n).iter().enumerate() {
                            s.push_str(&format!("{n},{k},{v}\n"));
                        }
                    }
                    s
                }
                FormatArg::Json => {
                    let rows: Vec<_> = (1..=max_n)
                        .flat_map(|n| {
                            eulerian_row(n)
                                .into_iter()
                                .enumerate()
                                .map(move |(k, v)| json!({"n": n, "k": k, "value": v.to_string()}))
                                .collect::<Vec<_>>()
                        })
                        .collect();
                    serde_json::to_string_pretty(&json!({ "rows": rows })).expect("json") + "\n"
                }
            };
            return emit(&data, output.out.as_deref(), &manifest).map_err(|e| e.to_string());
        }
    };
    let manifest = RunManifest::new(argv, None);
    let data = match output.format {
        FormatArg::Csv => series_to_csv(&table, output.decimal_digits),
        FormatArg::Json => series_to_json(&table, output.decimal_digits),
    };
    emit(&data, output.out.as_deref(), &manifest).map_err(|e| e.to_string())
}

fn run_simulate(cmd: SimulateCommand, argv: &[String]) -> Result<(), String> {
    match cmd {
        SimulateCommand::Hitting {
            scheme,
            replicas,
            cap,
            seed,
            workers,
            output,
        } => {
            scheme.validate()?;
            let cfg = SimConfig::uniform(
                scheme.scheme(),
                scheme.dims,
                scheme.white,
                scheme.blue,
                replicas,
                cap,
                seed,
            );
            let workers = workers.unwrap_or_else(rayon::current_num_threads);
            let (samples, stats) =
                run_replications_with_workers(&cfg, workers).map_err(|e| e.to_string())?;
            let manifest = RunManifest::new(argv, Some(seed));
            let data = match output.format {
                FormatArg::Json => {
                    serde_json::to_string_pretty(&stats).expect("json") + "\n"
                }
                FormatArg::Csv => {
                    let mut buf = Vec::new();
                    write_samples_csv(&samples, &mut buf).map_err(|e| e.to_string())?;
                    String::from_utf8(buf).expect("utf8 csv")
                }
            };
            emit(&data, output.out.as_deref(), &manifest).map_err(|e| e.to_string())
        }
        SimulateCommand::Occupancy {
            scheme,
            replicas,
            horizon,
            seed,
            workers,
            output,
        } => {
            scheme.validate()?;
            let cfg = SimConfig::uniform(
                scheme.scheme(),
                scheme.dims,
                scheme.white,
                scheme.blue,
                replicas,
                horizon.max(2),
                seed,
            );
            let workers = workers.unwrap_or_else(rayon::current_num_threads);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| e.to_string())?;
            let freq = pool
                .install(|| empirical_return_frequency(&cfg, horizon))
                .map_err(|e| e.to_string())?;
            let manifest = RunManifest::new(argv, Some(seed));
            let data = match output.format {
                FormatArg::Csv => {
                    let mut s = String::from("time,frequency\n");
                    for (t, f) in &freq {
                        s.push_str(&format!("{t},{f}\n"));
                    }
                    s
                }
                FormatArg::Json => {
                    let map: serde_json::Map<String, serde_json::Value> = freq
                        .iter()
                        .map(|(t, f)| (t.to_string(), json!(f)))
                        .collect();
                    serde_json::to_string_pretty(&json!({
                        "seed": seed,
                        "replicas": replicas,
                        "horizon": horizon,
                        "frequency": map,
                    }))
                    .expect("json")
                        + "\n"
                }
            };
            emit(&data, output.out.as_deref(), &manifest).map_err(|e| e.to_string())
        }
    }
}

fn run_diagnose(cmd: DiagnoseCommand, argv: &[String]) -> Result<(), String> {
    let DiagnoseCommand::Recurrence {
        scheme,
        max_n,
        output,
    } = cmd;
    scheme.validate()?;
    let table = series_partial_sums(
        SeriesKind::ReturnSeries,
        &scheme.scheme(),
        scheme.white,
        scheme.blue,
        scheme.dims,
        max_n,
        EvalMode::LogSpace,
    )
    .map_err(|e| e.to_string())?;
    let early = max_n.min(100);
    let s_early = table.partial_sum_at(early);
    let s_full = table.partial_sum_at(max_n);
    let class = classification(&scheme.scheme(), scheme.dims);
    let manifest = RunManifest::new(argv, None);
    let data = match output.format {
        FormatArg::Csv => format!(
            "key,value\nscheme,{}\nw,{}\nb,{}\ndims,{}\npartial_sum_{early},{s_early}\npartial_sum_{max_n},{s_full}\ngrowth,{}\nclassification,{}\n",
            table.scheme,
            scheme.white,
            scheme.blue,
            scheme.dims,
            s_full - s_early,
            class
        ),
        FormatArg::Json => {
            serde_json::to_string_pretty(&json!({
                "scheme": table.scheme,
                "w": scheme.white,
                "b": scheme.blue,
                "dims": scheme.dims,
                "checkpoints": [
                    {"n": early, "partial_sum": s_early},
                    {"n": max_n, "partial_sum": s_full},
                ],
                "growth": s_full - s_early,
                "classification": class,
            }))
            .expect("json")
                + "\n"
        }
    };
    emit(&data, output.out.as_deref(), &manifest).map_err(|e| e.to_string())
}

fn parse_path_file(text: &str) -> Result<Vec<(i64, i64)>, String> {
    let mut path = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(format!(
                "line {}: expected two integers, got {:?}",
                i + 1,
                line
            ));
        }
        let x = parts[0]
            .parse::<i64>()
            .map_err(|e| format!("line {}: {e}", i + 1))?;
        let y = parts[1]
            .parse::<i64>()
            .map_err(|e| format!("line {}: {e}", i + 1))?;
        path.push((x, y));
    }
    Ok(path)
}

fn run_transform(cmd: TransformCommand, argv: &[String]) -> Result<(), String> {
    let TransformCommand::Rotate2d { input, output } = cmd;
    let text = fs::read_to_string(&input).map_err(|e| format!("{}: {e}", input.display()))?;
    let path = parse_path_file(&text)?;
    let mapped = map_to_simple_2d(&path).map_err(|e| e.to_string())?;
    let manifest = RunManifest::new(argv, None);
    let data = match output.format {
        FormatArg::Csv => {
            let mut s = String::new();
            for (x, y) in &mapped {
                s.push_str(&format!("{x} {y}\n"));
            }
            s
        }
        FormatArg::Json => {
            serde_json::to_string_pretty(&json!({ "path": mapped })).expect("json") + "\n"
        }
    };
    emit(&data, output.out.as_deref(), &manifest).map_err(|e| e.to_string())
}
