//! The approximation algorithms and the two reference solvers.
//!
//! | algorithm | guarantee                    | queries              |
//! |-----------|------------------------------|----------------------|
//! | [`la`]    | 19                           | `O(n)`               |
//! | [`lar`]   | 16.034 in expectation        | `O(n)`               |
//! | [`dla`]   | 6 + ε                        | `O(n log(1/ε) / ε)`  |
//! | [`rla`]   | 4 + ε in expectation         | `O(n log(1/ε) / ε)`  |
//!
//! Every pass iterates elements in ascending id order, and every argmax keeps
//! the first maximum in listing order, so deterministic algorithms are fully
//! reproducible and randomized ones are reproducible per seed.

mod baseline;
mod exhaustive;
mod linear;
mod threshold;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::oracle::CountingOracle;
use crate::solution::OrderedSolution;
use crate::Element;

pub use baseline::density_greedy_baseline;
pub use exhaustive::{exhaustive, ExactResult, EXHAUSTIVE_LIMIT};
pub use linear::{la, lar};
pub use threshold::{dla, dla_query_bound, rla, rla_query_bound};

/// Approximation factor proven for LA.
pub const LA_FACTOR: f64 = 19.0;
/// Expected approximation factor proven for LAR with the default `p` and `alpha`.
pub const LAR_FACTOR: f64 = 16.034;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    La,
    Lar,
    Dla,
    Rla,
    Baseline,
    Exhaustive,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::La,
        Algorithm::Lar,
        Algorithm::Dla,
        Algorithm::Rla,
        Algorithm::Baseline,
        Algorithm::Exhaustive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::La => "la",
            Algorithm::Lar => "lar",
            Algorithm::Dla => "dla",
            Algorithm::Rla => "rla",
            Algorithm::Baseline => "baseline",
            Algorithm::Exhaustive => "exhaustive",
        }
    }

    pub fn is_randomized(self) -> bool {
        matches!(self, Algorithm::Lar | Algorithm::Rla)
    }

    /// Proven approximation factor, if any. For LAR and RLA the bound holds
    /// in expectation.
    pub fn factor(self, epsilon: f64) -> Option<f64> {
        match self {
            Algorithm::La => Some(LA_FACTOR),
            Algorithm::Lar => Some(LAR_FACTOR),
            Algorithm::Dla => Some(6.0 + epsilon),
            Algorithm::Rla => Some(4.0 + epsilon),
            Algorithm::Baseline | Algorithm::Exhaustive => None,
        }
    }

    /// Runs the algorithm with a fresh oracle.
    pub fn run(self, instance: &Instance, params: &AlgParams) -> Result<RunResult> {
        match self {
            Algorithm::La => la(instance),
            Algorithm::Lar => lar(instance, params),
            Algorithm::Dla => dla(instance, params),
            Algorithm::Rla => rla(instance, params),
            Algorithm::Baseline => density_greedy_baseline(instance),
            Algorithm::Exhaustive => {
                let started = Instant::now();
                let exact = exhaustive(instance)?;
                Ok(RunResult {
                    algorithm: self,
                    params: *params,
                    cost: instance.total_cost(&exact.opt_set),
                    solution: exact.opt_set,
                    value: exact.opt_value,
                    query_count: exact.evaluations,
                    candidates_inspected: 0,
                    admitted: 0,
                    threshold_passes: 0,
                    elapsed: started.elapsed(),
                })
            }
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| {
                Error::invalid(format!(
                    "unknown algorithm '{s}' (expected one of la, lar, dla, rla, baseline, exhaustive)"
                ))
            })
    }
}

/// Algorithm parameters. `seed` only matters for LAR and RLA; `p` and `alpha`
/// only for LAR (and the LAR call inside RLA).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgParams {
    pub epsilon: f64,
    pub seed: u64,
    pub p: f64,
    pub alpha: f64,
}

impl Default for AlgParams {
    fn default() -> Self {
        Self {
            epsilon: 0.1,
            seed: 0,
            p: std::f64::consts::SQRT_2 - 1.0,
            alpha: (2.0 + 2.0 * std::f64::consts::SQRT_2).sqrt(),
        }
    }
}

impl AlgParams {
    pub fn with_epsilon(epsilon: f64) -> Self {
        Self {
            epsilon,
            ..Self::default()
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(Error::invalid(format!(
                "epsilon must lie in (0, 1), got {}",
                self.epsilon
            )));
        }
        if !(self.p > 0.0 && self.p <= 1.0) {
            return Err(Error::invalid(format!(
                "p must lie in (0, 1], got {}",
                self.p
            )));
        }
        if !(self.alpha.is_finite() && self.alpha >= 0.0) {
            return Err(Error::invalid(format!(
                "alpha must be non-negative, got {}",
                self.alpha
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub algorithm: Algorithm,
    pub params: AlgParams,
    /// Selected elements, in the order the winning candidate was built.
    pub solution: Vec<Element>,
    pub value: f64,
    pub cost: f64,
    pub query_count: u64,
    /// Elements that passed an admission gate. For RLA this is the candidate
    /// sequence `u_1..u_j`, including those the coin dropped.
    pub candidates_inspected: usize,
    /// Elements actually added to the constructions (for RLA, the candidates
    /// that won their coin flip).
    pub admitted: usize,
    /// Threshold-greedy passes (DLA and RLA only).
    pub threshold_passes: usize,
    pub elapsed: Duration,
}

/// What a single algorithm body hands back before metering is attached.
struct Outcome {
    best: OrderedSolution,
    candidates_inspected: usize,
    admitted: usize,
    threshold_passes: usize,
}

impl Outcome {
    fn empty() -> Self {
        Outcome {
            best: OrderedSolution::empty(),
            candidates_inspected: 0,
            admitted: 0,
            threshold_passes: 0,
        }
    }
}

fn finish(
    algorithm: Algorithm,
    params: AlgParams,
    oracle: &CountingOracle<'_>,
    started: Instant,
    outcome: Outcome,
) -> RunResult {
    RunResult {
        algorithm,
        params,
        solution: outcome.best.elements,
        value: outcome.best.value,
        cost: outcome.best.total_cost,
        query_count: oracle.query_count(),
        candidates_inspected: outcome.candidates_inspected,
        admitted: outcome.admitted,
        threshold_passes: outcome.threshold_passes,
        elapsed: started.elapsed(),
    }
}

/// First candidate of maximum value.
fn argmax(candidates: Vec<OrderedSolution>) -> OrderedSolution {
    let mut best: Option<OrderedSolution> = None;
    for c in candidates {
        if best.as_ref().is_none_or(|b| c.value > b.value) {
            best = Some(c);
        }
    }
    best.unwrap_or_else(OrderedSolution::empty)
}

/// Extends `base` with the element `e ∈ V` maximizing `f(base ∪ {e})` subject
/// to `c(base ∪ {e}) ≤ B`, ties to the smallest id.
///
/// Members of `base` are candidates too (with value `f(base)`, no query), so
/// when every outside gain is negative the base comes back unchanged.
fn augment_best(
    instance: &Instance,
    oracle: &CountingOracle<'_>,
    base: &OrderedSolution,
) -> Result<OrderedSolution> {
    let costs = instance.costs();
    let budget = instance.budget();
    let mut state = oracle.state();
    for &e in &base.elements {
        state.insert(e);
    }
    let mut best: Option<(Element, f64)> = None;
    for (e, &c) in costs.iter().enumerate() {
        let gain = if state.contains(e) {
            0.0
        } else if base.total_cost + c <= budget {
            oracle.gain(&*state, e)?
        } else {
            continue;
        };
        if best.is_none_or(|(_, g)| gain > g) {
            best = Some((e, gain));
        }
    }
    Ok(match best {
        Some((e, gain)) if !state.contains(e) => {
            let mut elements = base.elements.clone();
            elements.push(e);
            OrderedSolution {
                elements,
                total_cost: base.total_cost + costs[e],
                value: base.value + gain,
            }
        }
        _ => base.clone(),
    })
}

/// `⌈ln(1/ε′) / ε′⌉`, the number of augmentation rounds minus one.
pub fn augmentation_rounds(eps_prime: f64) -> usize {
    ((1.0 / eps_prime).ln() / eps_prime).ceil() as usize
}
