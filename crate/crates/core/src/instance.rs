use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::objectives::{Objective, Restricted};
use crate::oracle::CountingOracle;
use crate::Element;

/// A knapsack-constrained instance: ground set `0..n`, positive costs, a budget,
/// and the objective.
///
/// Instances are immutable and cheap to clone; each algorithm run creates its
/// own [`CountingOracle`] via [`Instance::oracle`].
#[derive(Clone)]
pub struct Instance {
    objective: Arc<dyn Objective>,
    costs: Vec<f64>,
    budget: f64,
    origin: Vec<usize>,
}

impl Instance {
    /// Validates costs and budget, then discards every item whose cost exceeds
    /// the budget. Surviving items are renumbered densely in their original
    /// order; [`Instance::origin`] maps them back.
    pub fn new(objective: Arc<dyn Objective>, costs: Vec<f64>, budget: f64) -> Result<Self> {
        if costs.len() != objective.len() {
            return Err(Error::invalid(format!(
                "{} costs given for {} items",
                costs.len(),
                objective.len()
            )));
        }
        if !(budget.is_finite() && budget > 0.0) {
            return Err(Error::invalid(format!(
                "budget must be positive, got {budget}"
            )));
        }
        if let Some((i, c)) = costs
            .iter()
            .enumerate()
            .find(|(_, &c)| !(c.is_finite() && c > 0.0))
        {
            return Err(Error::invalid(format!(
                "cost of item {i} must be positive, got {c}"
            )));
        }

        let origin: Vec<usize> = (0..costs.len()).filter(|&i| costs[i] <= budget).collect();
        if origin.len() == costs.len() {
            return Ok(Self {
                objective,
                costs,
                budget,
                origin,
            });
        }
        let kept = origin.iter().map(|&i| costs[i]).collect();
        let restricted = Restricted::new(objective, origin.clone());
        Ok(Self {
            objective: Arc::new(restricted),
            costs: kept,
            budget,
            origin,
        })
    }

    pub fn n(&self) -> usize {
        self.costs.len()
    }

    pub fn costs(&self) -> &[f64] {
        &self.costs
    }

    pub fn cost(&self, e: Element) -> f64 {
        self.costs[e]
    }

    pub fn budget(&self) -> f64 {
        self.budget
    }

    pub fn objective(&self) -> &dyn Objective {
        &*self.objective
    }

    /// Item id in the source objective for each element.
    pub fn origin(&self) -> &[usize] {
        &self.origin
    }

    pub fn oracle(&self) -> CountingOracle<'_> {
        CountingOracle::new(&*self.objective)
    }

    pub fn total_cost(&self, set: &[Element]) -> f64 {
        set.iter().map(|&e| self.costs[e]).sum()
    }

    /// `c(S) ≤ B`, inclusive at the boundary.
    pub fn feasible(&self, set: &[Element]) -> bool {
        self.total_cost(set) <= self.budget
    }
}

impl fmt::Debug for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Instance")
            .field("n", &self.n())
            .field("budget", &self.budget)
            .field("objective", &self.objective)
            .finish()
    }
}

/// Element with the largest singleton value; ties go to the smallest id.
/// Costs exactly `n` queries.
pub fn best_singleton(oracle: &CountingOracle<'_>) -> Result<(Element, f64)> {
    let n = oracle.n();
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let empty = oracle.state();
    let mut best = (0, f64::NEG_INFINITY);
    for e in 0..n {
        let v = oracle.gain(&*empty, e)?;
        if v > best.1 {
            best = (e, v);
        }
    }
    Ok(best)
}
