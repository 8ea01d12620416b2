use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use smk_bench::{
    run_sweep, verify_ratios, write_csv, write_report_csv, BenchError, SourceSpec, SweepConfig,
    VerifyConfig, DEFAULT_REPS, EXIT_INVALID, EXIT_VERIFY_FAILED,
};
use smk_core::data::ObjectiveKind;
use smk_core::Algorithm;

#[derive(Parser)]
#[command(
    name = "smk",
    version,
    about = "Knapsack-constrained submodular maximization experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run algorithms across a range of budgets and write one CSV row per run.
    Sweep(SweepArgs),
    /// Check approximation ratios against exhaustive optima on small random instances.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Generator {
    Er,
    Similarity,
}

#[derive(Args)]
struct SweepArgs {
    /// revenue, summarization or maxcut.
    #[arg(long)]
    app: String,
    /// Edge list (revenue, maxcut) or similarity CSV (summarization).
    #[arg(long, conflicts_with = "gen")]
    input: Option<PathBuf>,
    /// Synthetic source, used when no --input is given.
    #[arg(long, value_enum)]
    gen: Option<Generator>,
    /// Items in the synthetic source.
    #[arg(long, default_value_t = 500)]
    n: usize,
    /// Edge probability of the ER generator.
    #[arg(long, default_value_t = 0.2)]
    edge_prob: f64,
    /// Comma-separated budget fractions of the total cost.
    #[arg(long, default_value = "0.02,0.04,0.06,0.08,0.1,0.12")]
    budgets: String,
    /// Comma-separated algorithms: la, lar, dla, rla, baseline, exhaustive.
    #[arg(long, default_value = "la,lar,dla,rla")]
    algs: String,
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    /// Seeds: comma-separated integers or ranges like 0..10.
    #[arg(long, env = "SMK_SEED", default_value = "0")]
    seeds: String,
    /// Repetitions per seed for lar and rla.
    #[arg(long, default_value_t = DEFAULT_REPS)]
    reps: usize,
    /// Seed of the synthetic source.
    #[arg(long, default_value_t = 0)]
    instance_seed: u64,
    /// Output CSV; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated instance families.
    #[arg(long, default_value = "revenue,summarization,maxcut")]
    app: String,
    /// Largest instance size (at most 25).
    #[arg(long, default_value_t = 12)]
    n: usize,
    #[arg(long, default_value_t = 30)]
    instances: usize,
    #[arg(long, default_value = "la,lar,dla,rla")]
    algs: String,
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    /// Seeds averaged over for lar and rla: integers or ranges like 0..100.
    #[arg(long, env = "SMK_SEED", default_value = "0..20")]
    seeds: String,
    #[arg(long, default_value_t = 0)]
    instance_seed: u64,
    /// Per-instance report CSV.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_list<T>(
    flag: &str,
    raw: &str,
    parse: impl Fn(&str) -> Result<T, String>,
) -> Result<Vec<T>, BenchError> {
    raw.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse(s).map_err(|e| BenchError::Config(format!("--{flag}: {e}"))))
        .collect()
}

fn parse_seeds(raw: &str) -> Result<Vec<u64>, BenchError> {
    let chunks = parse_list("seeds", raw, |s| {
        let num = |t: &str| t.parse::<u64>().map_err(|_| format!("'{t}' is not a seed"));
        match s.split_once("..") {
            Some((a, b)) => Ok((num(a)?..num(b)?).collect::<Vec<_>>()),
            None => Ok(vec![num(s)?]),
        }
    })?;
    Ok(chunks.into_iter().flatten().collect())
}

fn parse_algs(raw: &str) -> Result<Vec<Algorithm>, BenchError> {
    parse_list("algs", raw, |s| {
        s.parse().map_err(|e: smk_core::Error| e.to_string())
    })
}

fn parse_apps(raw: &str) -> Result<Vec<ObjectiveKind>, BenchError> {
    parse_list("app", raw, |s| {
        s.parse().map_err(|e: smk_core::Error| e.to_string())
    })
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, BenchError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|source| {
            BenchError::Io {
                path: p.clone(),
                source,
            }
        })?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn sweep(args: SweepArgs) -> Result<i32, BenchError> {
    let application: ObjectiveKind = args.app.parse()?;
    let source = match (args.input, args.gen) {
        (Some(path), _) => SourceSpec::File(path),
        (None, Some(Generator::Er)) => SourceSpec::Er {
            n: args.n,
            edge_prob: args.edge_prob,
            seed: args.instance_seed,
        },
        (None, Some(Generator::Similarity)) => SourceSpec::Similarity {
            n: args.n,
            seed: args.instance_seed,
        },
        (None, None) => {
            return Err(BenchError::Config(
                "give a data file with --input or a generator with --gen".into(),
            ))
        }
    };
    let config = SweepConfig {
        application,
        source,
        budget_fractions: parse_list("budgets", &args.budgets, |s| {
            s.parse::<f64>()
                .map_err(|_| format!("'{s}' is not a number"))
        })?,
        algorithms: parse_algs(&args.algs)?,
        epsilon: args.epsilon,
        seeds: parse_seeds(&args.seeds)?,
        repetitions: args.reps,
    };
    let rows = run_sweep(&config)?;
    write_csv(&rows, output(&args.out)?)?;
    eprintln!("{} rows", rows.len());
    Ok(0)
}

fn verify(args: VerifyArgs) -> Result<i32, BenchError> {
    let config = VerifyConfig {
        applications: parse_apps(&args.app)?,
        instances: args.instances,
        max_n: args.n,
        epsilon: args.epsilon,
        seeds: parse_seeds(&args.seeds)?,
        algorithms: parse_algs(&args.algs)?,
        instance_seed: args.instance_seed,
    };
    let report = verify_ratios(&config)?;
    if let Some(path) = &args.out {
        write_report_csv(&report, output(&Some(path.clone()))?)?;
    }
    for &alg in &config.algorithms {
        let checks: Vec<_> = report
            .checks
            .iter()
            .filter(|c| c.algorithm == alg)
            .collect();
        let failed = checks.iter().filter(|c| !c.pass).count();
        let worst = report.worst_ratio(alg).unwrap_or(1.0);
        let factor = alg
            .factor(config.epsilon)
            .map_or("-".to_string(), |f| format!("{f}"));
        println!(
            "{alg:<10} instances {:>4}  worst ratio {worst:>8.4}  factor {factor:>7}  violations {failed}",
            checks.len()
        );
    }
    println!(
        "{} runs, {} infeasible",
        report.total_runs(),
        report.infeasible_runs()
    );
    Ok(if report.passed() {
        0
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                EXIT_INVALID as u8
            } else {
                0
            });
        }
    };
    let result = match cli.command {
        Command::Sweep(args) => sweep(args),
        Command::Verify(args) => verify(args),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID as u8)
        }
    }
}
