use std::io::Write;

use rayon::prelude::*;
use smk_core::algorithms::EXHAUSTIVE_LIMIT;
use smk_core::data::{random_instance, ObjectiveKind};
use smk_core::rng::derive_seed;
use smk_core::{exhaustive, AlgParams, Algorithm, Instance};

use crate::error::{BenchError, Result};

/// Multiplier on expectation bounds that absorbs Monte Carlo noise in the
/// mean over seeds.
pub const EXPECTATION_SLACK: f64 = 0.98;
/// Relative floating-point tolerance on every factor comparison.
pub const FACTOR_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    /// Instance families, used round-robin.
    pub applications: Vec<ObjectiveKind>,
    pub instances: usize,
    /// Instance `i` of a family has `1 + (i mod max_n)` items before the
    /// over-budget discard.
    pub max_n: usize,
    pub epsilon: f64,
    /// Seeds averaged over for randomized algorithms.
    pub seeds: Vec<u64>,
    pub algorithms: Vec<Algorithm>,
    pub instance_seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            applications: ObjectiveKind::ALL.to_vec(),
            instances: 30,
            max_n: 12,
            epsilon: 0.1,
            seeds: (0..20).collect(),
            algorithms: vec![
                Algorithm::La,
                Algorithm::Lar,
                Algorithm::Dla,
                Algorithm::Rla,
            ],
            instance_seed: 0,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.applications.is_empty() {
            return Err(BenchError::config("at least one application is required"));
        }
        if self.algorithms.is_empty() {
            return Err(BenchError::config("at least one algorithm is required"));
        }
        if self.instances == 0 {
            return Err(BenchError::config("at least one instance is required"));
        }
        if self.max_n == 0 {
            return Err(BenchError::config("n must be at least 1"));
        }
        if self.max_n > EXHAUSTIVE_LIMIT {
            return Err(smk_core::Error::TooLarge {
                n: self.max_n,
                limit: EXHAUSTIVE_LIMIT,
            }
            .into());
        }
        if self.seeds.is_empty() {
            return Err(BenchError::config("at least one seed is required"));
        }
        AlgParams::with_epsilon(self.epsilon).validate()?;
        Ok(())
    }
}

/// One algorithm judged on one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioCheck {
    pub instance: usize,
    pub application: ObjectiveKind,
    pub n: usize,
    pub budget: f64,
    pub opt: f64,
    pub algorithm: Algorithm,
    /// `f(S)`, or its mean over seeds for randomized algorithms.
    pub value: f64,
    /// `opt / value`; 1 when both are 0.
    pub ratio: f64,
    /// Proven factor, if the algorithm has one.
    pub factor: Option<f64>,
    pub runs: usize,
    pub infeasible: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerifyReport {
    pub checks: Vec<RatioCheck>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &RatioCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn total_runs(&self) -> usize {
        self.checks.iter().map(|c| c.runs).sum()
    }

    pub fn infeasible_runs(&self) -> usize {
        self.checks.iter().map(|c| c.infeasible).sum()
    }

    /// Largest ratio seen for `algorithm`.
    pub fn worst_ratio(&self, algorithm: Algorithm) -> Option<f64> {
        self.checks
            .iter()
            .filter(|c| c.algorithm == algorithm)
            .map(|c| c.ratio)
            .reduce(f64::max)
    }
}

fn ratio(opt: f64, value: f64) -> f64 {
    if opt == 0.0 && value == 0.0 {
        1.0
    } else {
        opt / value
    }
}

/// Runs exhaustive search and every configured algorithm on seeded random
/// instances and checks each against its approximation factor. For LAR and
/// RLA the factor is checked on the mean over `config.seeds`, scaled by
/// [`EXPECTATION_SLACK`].
pub fn verify_ratios(config: &VerifyConfig) -> Result<VerifyReport> {
    config.validate()?;
    let per_instance = (0..config.instances)
        .into_par_iter()
        .map(|i| check_instance(config, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        checks: per_instance.into_iter().flatten().collect(),
    })
}

fn check_instance(config: &VerifyConfig, i: usize) -> Result<Vec<RatioCheck>> {
    let families = config.applications.len();
    let application = config.applications[i % families];
    let size = 1 + (i / families) % config.max_n;
    let instance = random_instance(
        application,
        size,
        derive_seed(config.instance_seed, i as u64),
    )?;
    let exact = exhaustive(&instance)?;
    let opt = exact.opt_value;

    let mut checks = Vec::with_capacity(config.algorithms.len());
    for &algorithm in &config.algorithms {
        let seeds: &[u64] = if algorithm.is_randomized() {
            &config.seeds
        } else {
            &config.seeds[..1]
        };
        let (sum, infeasible) = run_all(&instance, algorithm, config.epsilon, seeds)?;
        let value = sum / seeds.len() as f64;
        let factor = algorithm.factor(config.epsilon);
        let tol = FACTOR_TOL * (1.0 + opt);
        let meets = match factor {
            Some(rho) if algorithm.is_randomized() => value >= opt / rho * EXPECTATION_SLACK - tol,
            Some(rho) => value >= opt / rho - tol,
            None => true,
        };
        checks.push(RatioCheck {
            instance: i,
            application,
            n: instance.n(),
            budget: instance.budget(),
            opt,
            algorithm,
            value,
            ratio: ratio(opt, value),
            factor,
            runs: seeds.len(),
            infeasible,
            pass: meets && infeasible == 0,
        });
    }
    Ok(checks)
}

fn run_all(
    instance: &Instance,
    algorithm: Algorithm,
    epsilon: f64,
    seeds: &[u64],
) -> Result<(f64, usize)> {
    let mut sum = 0.0;
    let mut infeasible = 0;
    for &seed in seeds {
        let run = algorithm.run(instance, &AlgParams::with_epsilon(epsilon).with_seed(seed))?;
        if !instance.feasible(&run.solution) {
            infeasible += 1;
        }
        sum += run.value;
    }
    Ok((sum, infeasible))
}

pub fn write_report_csv<W: Write>(report: &VerifyReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "instance",
        "application",
        "n",
        "budget",
        "opt",
        "algorithm",
        "value",
        "ratio",
        "factor",
        "runs",
        "infeasible",
        "pass",
    ])?;
    for c in &report.checks {
        w.write_record([
            c.instance.to_string(),
            c.application.name().to_string(),
            c.n.to_string(),
            c.budget.to_string(),
            c.opt.to_string(),
            c.algorithm.name().to_string(),
            c.value.to_string(),
            c.ratio.to_string(),
            c.factor.map_or(String::new(), |f| f.to_string()),
            c.runs.to_string(),
            c.infeasible.to_string(),
            c.pass.to_string(),
        ])?;
    }
    w.flush().map_err(|source| BenchError::Io {
        path: "<csv output>".into(),
        source,
    })?;
    Ok(())
}
