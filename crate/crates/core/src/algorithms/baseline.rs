use std::time::Instant;

use super::{argmax, finish, AlgParams, Algorithm, Outcome, RunResult};
use crate::error::Result;
use crate::instance::{best_singleton, Instance};
use crate::solution::{Construction, OrderedSolution};
use crate::Element;

/// Cost-density greedy: repeatedly add the feasible element with the largest
/// `f(e | S) / c(e)` while that gain is positive, then return the better of
/// the greedy set and the best singleton.
///
/// Uses `O(n · |S|)` queries; it is a quality reference, not a linear-query
/// algorithm.
pub fn density_greedy_baseline(instance: &Instance) -> Result<RunResult> {
    let started = Instant::now();
    let oracle = instance.oracle();
    let n = instance.n();
    if n == 0 {
        return Ok(finish(
            Algorithm::Baseline,
            AlgParams::default(),
            &oracle,
            started,
            Outcome::empty(),
        ));
    }
    let costs = instance.costs();
    let budget = instance.budget();
    let (e_max, f_max) = best_singleton(&oracle)?;

    let mut s = Construction::new(&oracle);
    let mut rounds = 0;
    loop {
        let mut best: Option<(Element, f64, f64)> = None;
        for (e, &c) in costs.iter().enumerate() {
            if s.contains(e) || s.cost() + c > budget {
                continue;
            }
            let gain = s.gain(&oracle, e)?;
            let density = gain / c;
            if best.is_none_or(|(_, d, _)| density > d) {
                best = Some((e, density, gain));
            }
        }
        match best {
            Some((e, _, gain)) if gain > 0.0 => s.push(e, costs[e]),
            _ => break,
        }
        rounds += 1;
    }

    let best = argmax(vec![
        s.to_solution(costs),
        OrderedSolution::singleton(e_max, costs[e_max], f_max),
    ]);
    Ok(finish(
        Algorithm::Baseline,
        AlgParams::default(),
        &oracle,
        started,
        Outcome {
            best,
            candidates_inspected: rounds,
            admitted: s.len(),
            threshold_passes: 0,
        },
    ))
}
