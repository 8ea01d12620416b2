//! LA and LAR: single-pass, `O(n)`-query constant-factor algorithms.
//!
//! Both split the ground set into light elements (`c(e) ≤ B/2`) and the rest.
//! Any feasible set over the heavy part has at most one element, so the best
//! singleton covers it. The light elements are streamed once through a
//! density gate `f(e | Z) / c(e) ≥ α · f(Z) / B`; the resulting sets may run
//! over budget, and the feasible candidate is their longest suffix fitting in
//! `B`.

use std::time::Instant;

use rand::Rng;

use super::{argmax, finish, AlgParams, Algorithm, Outcome, RunResult};
use crate::error::Result;
use crate::instance::{best_singleton, Instance};
use crate::oracle::CountingOracle;
use crate::rng::{self, Stream};
use crate::solution::{Construction, OrderedSolution};

/// Deterministic LA. At most `3n + 4` queries.
pub fn la(instance: &Instance) -> Result<RunResult> {
    let started = Instant::now();
    let oracle = instance.oracle();
    let outcome = run_la(instance, &oracle)?;
    Ok(finish(
        Algorithm::La,
        AlgParams::default(),
        &oracle,
        started,
        outcome,
    ))
}

/// Randomized LAR with sampling probability `params.p` and gate multiplier
/// `params.alpha`.
pub fn lar(instance: &Instance, params: &AlgParams) -> Result<RunResult> {
    params.validate()?;
    let started = Instant::now();
    let oracle = instance.oracle();
    let outcome = run_lar(instance, &oracle, params)?;
    Ok(finish(Algorithm::Lar, *params, &oracle, started, outcome))
}

#[derive(Clone, Copy)]
enum Side {
    X,
    Y,
}

pub(super) fn run_la(instance: &Instance, oracle: &CountingOracle<'_>) -> Result<Outcome> {
    let n = instance.n();
    if n == 0 {
        return Ok(Outcome::empty());
    }
    let costs = instance.costs();
    let budget = instance.budget();
    let (e_max, f_max) = best_singleton(oracle)?;

    let mut x = Construction::new(oracle);
    let mut y = Construction::new(oracle);
    for e in (0..n).filter(|&e| costs[e] <= budget / 2.0) {
        let c = costs[e];
        let dx = x.gain(oracle, e)? / c;
        let dy = y.gain(oracle, e)? / c;
        let pass_x = dx >= x.value() / budget;
        let pass_y = dy >= y.value() / budget;
        let side = match (pass_x, pass_y) {
            (true, true) if dx >= dy => Some(Side::X),
            (true, true) => Some(Side::Y),
            (true, false) => Some(Side::X),
            (false, true) => Some(Side::Y),
            (false, false) => None,
        };
        match side {
            Some(Side::X) => x.push(e, c),
            Some(Side::Y) => y.push(e, c),
            None => {}
        }
    }
    debug_assert!(x.elements().iter().all(|&e| !y.contains(e)));

    let x_tail = x
        .to_solution(costs)
        .max_cost_suffix(budget, costs, oracle)?;
    let y_tail = y
        .to_solution(costs)
        .max_cost_suffix(budget, costs, oracle)?;
    let best = argmax(vec![
        x_tail,
        y_tail,
        OrderedSolution::singleton(e_max, costs[e_max], f_max),
    ]);
    Ok(Outcome {
        best,
        candidates_inspected: x.len() + y.len(),
        admitted: x.len() + y.len(),
        threshold_passes: 0,
    })
}

pub(super) fn run_lar(
    instance: &Instance,
    oracle: &CountingOracle<'_>,
    params: &AlgParams,
) -> Result<Outcome> {
    let n = instance.n();
    if n == 0 {
        return Ok(Outcome::empty());
    }
    let costs = instance.costs();
    let budget = instance.budget();
    let (e_max, f_max) = best_singleton(oracle)?;

    let mut sampler = rng::stream(params.seed, Stream::Sample);
    let sampled: Vec<_> = (0..n)
        .filter(|&e| costs[e] <= budget / 2.0)
        .filter(|_| sampler.gen_bool(params.p))
        .collect();

    let mut s = Construction::new(oracle);
    for &e in &sampled {
        let c = costs[e];
        let density = s.gain(oracle, e)? / c;
        if density >= params.alpha * s.value() / budget {
            s.push(e, c);
        }
    }

    let tail = s
        .to_solution(costs)
        .max_cost_suffix(budget, costs, oracle)?;
    let best = argmax(vec![
        tail,
        OrderedSolution::singleton(e_max, costs[e_max], f_max),
    ]);
    Ok(Outcome {
        best,
        candidates_inspected: s.len(),
        admitted: s.len(),
        threshold_passes: 0,
    })
}
