//! DLA and RLA: threshold-greedy refinements seeded by LA / LAR.
//!
//! Both take `Γ = f(S′)` from the linear-time subroutine as a bracket on the
//! optimum, then sweep a density threshold `θ` downward by a factor of
//! `(1 - ε′)` per pass over the ground set. A second phase takes budget-capped
//! prefixes of the construction at geometrically spaced caps `ε′B(1 + ε′)^l`
//! and tops each up with the best single feasible element.

use std::time::Instant;

use rand::Rng;

use super::linear::{run_la, run_lar};
use super::{
    argmax, augment_best, augmentation_rounds, finish, AlgParams, Algorithm, Outcome, RunResult,
    LAR_FACTOR, LA_FACTOR,
};
use crate::error::Result;
use crate::instance::Instance;
use crate::oracle::CountingOracle;
use crate::rng::{self, Stream};
use crate::solution::{Construction, OrderedSolution};

/// Deterministic DLA with accuracy `params.epsilon`.
pub fn dla(instance: &Instance, params: &AlgParams) -> Result<RunResult> {
    params.validate()?;
    let started = Instant::now();
    let oracle = instance.oracle();
    let outcome = run_dla(instance, &oracle, params.epsilon)?;
    Ok(finish(Algorithm::Dla, *params, &oracle, started, outcome))
}

/// Randomized RLA with accuracy `params.epsilon`, seeded by `params.seed`.
pub fn rla(instance: &Instance, params: &AlgParams) -> Result<RunResult> {
    params.validate()?;
    let started = Instant::now();
    let oracle = instance.oracle();
    let outcome = run_rla(instance, &oracle, params)?;
    Ok(finish(Algorithm::Rla, *params, &oracle, started, outcome))
}

fn ceil_ln_over(ratio: f64, eps_prime: f64) -> u64 {
    (ratio.ln() / eps_prime).ceil() as u64
}

/// Worst-case DLA query count on `n` elements:
/// `3n+4 + 2n(⌈ln(19/ε′)/ε′⌉+1) + 2n(Δ+1) + (2Δ+5)` with `ε′ = ε/14`.
pub fn dla_query_bound(n: usize, epsilon: f64) -> u64 {
    let n = n as u64;
    let eps_prime = epsilon / 14.0;
    let passes = ceil_ln_over(LA_FACTOR / eps_prime, eps_prime) + 1;
    let delta = augmentation_rounds(eps_prime) as u64;
    3 * n + 4 + 2 * n * passes + 2 * n * (delta + 1) + (2 * delta + 5)
}

/// Worst-case RLA query count on `n` elements, `ε′ = ε/10`: LAR's
/// `2n + 1`, at most `⌈ln(16.034/ε′)/ε′⌉ + 1` passes of `n` gains, and
/// `⌈ln(1/ε′)/ε′⌉ + 1` augmentation rounds of `n` gains.
pub fn rla_query_bound(n: usize, epsilon: f64) -> u64 {
    let n = n as u64;
    let eps_prime = epsilon / 10.0;
    let passes = ceil_ln_over(LAR_FACTOR / eps_prime, eps_prime) + 1;
    let rounds = augmentation_rounds(eps_prime) as u64 + 1;
    2 * n + 2 + n * passes + n * rounds
}

#[derive(Clone, Copy, PartialEq)]
enum Side {
    X,
    Y,
}

fn run_dla(instance: &Instance, oracle: &CountingOracle<'_>, epsilon: f64) -> Result<Outcome> {
    let seed = run_la(instance, oracle)?;
    let gamma = seed.best.value;
    // With Γ = 0 the stopping threshold is 0 and no positive gate can ever
    // admit anything useful; S′ is already optimal among the candidates.
    if instance.n() == 0 || gamma <= 0.0 {
        return Ok(seed);
    }

    let costs = instance.costs();
    let budget = instance.budget();
    let eps_prime = epsilon / 14.0;
    let delta = augmentation_rounds(eps_prime);
    let mut theta = LA_FACTOR * gamma / (6.0 * eps_prime * budget);
    let stop = gamma * (1.0 - eps_prime) / (6.0 * budget);

    let mut x = Construction::new(oracle);
    let mut y = Construction::new(oracle);
    let mut passes = 0;
    while theta >= stop {
        passes += 1;
        for (e, &c) in costs.iter().enumerate() {
            if x.contains(e) || y.contains(e) {
                continue;
            }
            let mut pick: Option<(Side, f64)> = None;
            if x.cost() + c <= budget {
                let d = x.gain(oracle, e)? / c;
                if d >= theta {
                    pick = Some((Side::X, d));
                }
            }
            if y.cost() + c <= budget {
                let d = y.gain(oracle, e)? / c;
                if d >= theta && pick.is_none_or(|(_, best)| d > best) {
                    pick = Some((Side::Y, d));
                }
            }
            match pick {
                Some((Side::X, _)) => x.push(e, c),
                Some((Side::Y, _)) => y.push(e, c),
                None => {}
            }
        }
        theta *= 1.0 - eps_prime;
    }
    debug_assert!(x.elements().iter().all(|&e| !y.contains(e)));

    let mut from_x = Vec::with_capacity(delta + 1);
    let mut from_y = Vec::with_capacity(delta + 1);
    for l in 0..=delta {
        let cap = eps_prime * budget * (1.0 + eps_prime).powi(l as i32);
        from_x.push(augment_best(
            instance,
            oracle,
            &x.max_cost_prefix(cap, costs),
        )?);
        from_y.push(augment_best(
            instance,
            oracle,
            &y.max_cost_prefix(cap, costs),
        )?);
    }

    let mut candidates: Vec<OrderedSolution> =
        vec![seed.best, x.to_solution(costs), y.to_solution(costs)];
    candidates.extend(from_x);
    candidates.extend(from_y);
    Ok(Outcome {
        best: argmax(candidates),
        candidates_inspected: x.len() + y.len(),
        admitted: x.len() + y.len(),
        threshold_passes: passes,
    })
}

fn run_rla(
    instance: &Instance,
    oracle: &CountingOracle<'_>,
    params: &AlgParams,
) -> Result<Outcome> {
    let seed = run_lar(instance, oracle, params)?;
    let gamma = seed.best.value;
    if instance.n() == 0 || gamma <= 0.0 {
        return Ok(seed);
    }

    let n = instance.n();
    let costs = instance.costs();
    let budget = instance.budget();
    let eps_prime = params.epsilon / 10.0;
    let rounds = augmentation_rounds(eps_prime);
    let mut theta = LAR_FACTOR * gamma / (4.0 * eps_prime * budget);
    let stop = gamma * (1.0 - eps_prime) / (4.0 * budget);

    let mut coins = rng::stream(params.seed, Stream::Coin);
    let mut recorded = vec![false; n];
    let mut recorded_count = 0;
    let mut s = Construction::new(oracle);
    let mut passes = 0;
    while theta >= stop {
        passes += 1;
        for e in 0..n {
            if recorded[e] {
                continue;
            }
            let c = costs[e];
            if s.cost() + c > budget {
                continue;
            }
            if s.gain(oracle, e)? / c >= theta {
                recorded[e] = true;
                recorded_count += 1;
                if coins.gen_bool(0.5) {
                    s.push(e, c);
                }
            }
        }
        theta *= 1.0 - eps_prime;
    }

    let mut candidates = vec![seed.best, s.to_solution(costs)];
    for l in 0..=rounds {
        let cap = eps_prime * budget * (1.0 + eps_prime).powi(l as i32);
        candidates.push(augment_best(
            instance,
            oracle,
            &s.max_cost_prefix(cap, costs),
        )?);
    }
    Ok(Outcome {
        best: argmax(candidates),
        candidates_inspected: recorded_count,
        admitted: s.len(),
        threshold_passes: passes,
    })
}
