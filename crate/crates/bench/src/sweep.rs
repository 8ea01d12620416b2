use std::io::Write;

use rayon::prelude::*;
use smk_core::data::{build_instance, ObjectiveKind};
use smk_core::rng::derive_seed;
use smk_core::{AlgParams, Algorithm, Instance};

use crate::error::{BenchError, Result};
use crate::source::{load_source, SourceSpec};

pub const CSV_HEADER: &str = "application,n,budget_fraction,budget,algorithm,seed,rep,stat,\
objective_value,query_count,wall_ms,epsilon";

/// 2%, 4%, ..., 12% of the total cost.
pub const DEFAULT_BUDGETS: [f64; 6] = [0.02, 0.04, 0.06, 0.08, 0.10, 0.12];
pub const DEFAULT_REPS: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub application: ObjectiveKind,
    pub source: SourceSpec,
    pub budget_fractions: Vec<f64>,
    pub algorithms: Vec<Algorithm>,
    pub epsilon: f64,
    pub seeds: Vec<u64>,
    /// Runs per seed for randomized algorithms.
    pub repetitions: usize,
}

impl SweepConfig {
    pub fn new(application: ObjectiveKind, source: SourceSpec) -> Self {
        Self {
            application,
            source,
            budget_fractions: DEFAULT_BUDGETS.to_vec(),
            algorithms: vec![
                Algorithm::La,
                Algorithm::Lar,
                Algorithm::Dla,
                Algorithm::Rla,
            ],
            epsilon: 0.1,
            seeds: vec![0],
            repetitions: DEFAULT_REPS,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.budget_fractions.is_empty() {
            return Err(BenchError::config(
                "at least one budget fraction is required",
            ));
        }
        if let Some(f) = self
            .budget_fractions
            .iter()
            .find(|&&f| !(f > 0.0 && f <= 1.0))
        {
            return Err(BenchError::config(format!(
                "budget fraction {f} is outside (0, 1]"
            )));
        }
        if self.algorithms.is_empty() {
            return Err(BenchError::config("at least one algorithm is required"));
        }
        if self.seeds.is_empty() {
            return Err(BenchError::config("at least one seed is required"));
        }
        if self.repetitions == 0 {
            return Err(BenchError::config("repetitions must be at least 1"));
        }
        AlgParams::with_epsilon(self.epsilon).validate()?;
        Ok(())
    }
}

/// What a row reports: a single run, or the mean / standard deviation of a
/// randomized cell's repetitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stat {
    Run,
    Mean,
    Std,
}

impl Stat {
    fn name(self) -> &'static str {
        match self {
            Stat::Run => "run",
            Stat::Mean => "mean",
            Stat::Std => "std",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub application: ObjectiveKind,
    pub n: usize,
    pub budget_fraction: f64,
    pub budget: f64,
    pub algorithm: Algorithm,
    pub seed: u64,
    /// `None` on mean / std rows.
    pub rep: Option<usize>,
    pub stat: Stat,
    pub objective_value: f64,
    pub query_count: f64,
    pub wall_ms: f64,
    pub epsilon: f64,
}

struct Task {
    fraction: usize,
    algorithm: Algorithm,
    seed: u64,
    rep: usize,
}

/// Runs every (budget fraction, algorithm, seed, repetition) cell. Cells run
/// in parallel; rows come back in cell order. Deterministic algorithms run
/// once per seed; randomized ones `repetitions` times per seed, followed by
/// a mean and a standard-deviation row.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    config.validate()?;
    let (source, cost_model) = load_source(config.application, &config.source)?;
    let instances = config
        .budget_fractions
        .iter()
        .map(|&f| build_instance(config.application, &source, &cost_model, f))
        .collect::<std::result::Result<Vec<Instance>, _>>()?;

    let mut tasks = Vec::new();
    for fraction in 0..instances.len() {
        for &algorithm in &config.algorithms {
            for &seed in &config.seeds {
                let reps = if algorithm.is_randomized() {
                    config.repetitions
                } else {
                    1
                };
                for rep in 0..reps {
                    tasks.push(Task {
                        fraction,
                        algorithm,
                        seed,
                        rep,
                    });
                }
            }
        }
    }

    let runs = tasks
        .par_iter()
        .map(|t| {
            let instance = &instances[t.fraction];
            let run_seed = if t.algorithm.is_randomized() {
                derive_seed(t.seed, t.rep as u64)
            } else {
                t.seed
            };
            let params = AlgParams::with_epsilon(config.epsilon).with_seed(run_seed);
            let run = t.algorithm.run(instance, &params)?;
            Ok(SweepRow {
                application: config.application,
                n: instance.n(),
                budget_fraction: config.budget_fractions[t.fraction],
                budget: instance.budget(),
                algorithm: t.algorithm,
                seed: t.seed,
                rep: Some(t.rep),
                stat: Stat::Run,
                objective_value: run.value,
                query_count: run.query_count as f64,
                wall_ms: run.elapsed.as_secs_f64() * 1e3,
                epsilon: config.epsilon,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut rows = Vec::with_capacity(runs.len());
    let mut i = 0;
    while i < runs.len() {
        let first = &runs[i];
        let reps = if first.algorithm.is_randomized() {
            config.repetitions
        } else {
            1
        };
        let cell = &runs[i..i + reps];
        rows.extend_from_slice(cell);
        if first.algorithm.is_randomized() {
            rows.push(summary(cell, Stat::Mean));
            rows.push(summary(cell, Stat::Std));
        }
        i += reps;
    }
    Ok(rows)
}

fn summary(cell: &[SweepRow], stat: Stat) -> SweepRow {
    let pick = |f: fn(&SweepRow) -> f64| {
        let xs: Vec<f64> = cell.iter().map(f).collect();
        match stat {
            Stat::Mean => mean(&xs),
            _ => std_dev(&xs),
        }
    };
    SweepRow {
        rep: None,
        stat,
        objective_value: pick(|r| r.objective_value),
        query_count: pick(|r| r.query_count),
        wall_ms: pick(|r| r.wall_ms),
        ..cell[0].clone()
    }
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample standard deviation; 0 for a single observation.
fn std_dev(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let m = mean(xs);
    let ss: f64 = xs.iter().map(|x| (x - m).powi(2)).sum();
    (ss / (xs.len() - 1) as f64).sqrt()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER.split(','))?;
    for r in rows {
        w.write_record([
            r.application.name().to_string(),
            r.n.to_string(),
            r.budget_fraction.to_string(),
            r.budget.to_string(),
            r.algorithm.name().to_string(),
            r.seed.to_string(),
            r.rep.map_or(String::new(), |x| x.to_string()),
            r.stat.name().to_string(),
            r.objective_value.to_string(),
            r.query_count.to_string(),
            format!("{:.3}", r.wall_ms),
            r.epsilon.to_string(),
        ])?;
    }
    w.flush().map_err(|source| BenchError::Io {
        path: "<csv output>".into(),
        source,
    })?;
    Ok(())
}
