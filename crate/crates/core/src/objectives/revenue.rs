use std::sync::Arc;

use super::{GainState, Objective, WeightedGraph};
use crate::Element;

/// Cost-curve steepness for the revenue cost model.
pub const REVENUE_MU: f64 = 0.2;

/// Cost assigned to vertices whose weighted degree is zero, where the curve
/// itself would give a non-positive cost.
pub const ISOLATED_COST: f64 = 1e-6;

/// `f(S) = Σ_{u∉S} sqrt(Σ_{v∈S, (v,u)∈E} w(u, v))`.
pub fn revenue_value(graph: &WeightedGraph, set: &[Element]) -> f64 {
    let mut inside = vec![false; graph.n()];
    for &u in set {
        inside[u] = true;
    }
    let mut total = 0.0;
    for u in (0..graph.n()).filter(|&u| !inside[u]) {
        let influence: f64 = graph
            .neighbors(u)
            .iter()
            .filter(|&&(v, _)| inside[v])
            .map(|&(_, w)| w)
            .sum();
        total += influence.sqrt();
    }
    total
}

/// `1 - exp(-mu · sqrt(wdeg(u)))`, floored at [`ISOLATED_COST`].
pub fn revenue_cost(graph: &WeightedGraph, u: Element, mu: f64) -> f64 {
    let cost = 1.0 - (-mu * graph.weighted_degree(u).sqrt()).exp();
    if cost > 0.0 {
        cost
    } else {
        ISOLATED_COST
    }
}

/// Advertising-revenue objective over a social graph.
#[derive(Debug, Clone)]
pub struct Revenue {
    graph: Arc<WeightedGraph>,
}

impl Revenue {
    pub fn new(graph: Arc<WeightedGraph>) -> Self {
        Self { graph }
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }
}

impl Objective for Revenue {
    fn len(&self) -> usize {
        self.graph.n()
    }

    fn value(&self, set: &[Element]) -> f64 {
        revenue_value(&self.graph, set)
    }

    fn state(&self) -> Box<dyn GainState + '_> {
        Box::new(RevenueState {
            graph: &self.graph,
            inside: vec![false; self.graph.n()],
            acc: vec![0.0; self.graph.n()],
            value: 0.0,
        })
    }
}

/// `acc[u]` is the weight flowing into `u` from the current set.
#[derive(Clone)]
pub(crate) struct RevenueState<'a> {
    graph: &'a WeightedGraph,
    inside: Vec<bool>,
    acc: Vec<f64>,
    value: f64,
}

impl RevenueState<'_> {
    #[cfg(test)]
    pub(crate) fn acc(&self) -> &[f64] {
        &self.acc
    }
}

impl GainState for RevenueState<'_> {
    fn value(&self) -> f64 {
        self.value
    }

    fn contains(&self, e: Element) -> bool {
        self.inside[e]
    }

    fn gain(&self, e: Element) -> f64 {
        // e leaves the outer sum, and each outside neighbor gains weight.
        let mut gain = -self.acc[e].sqrt();
        for &(u, w) in self.graph.neighbors(e) {
            if !self.inside[u] {
                let a = self.acc[u];
                gain += (a + w).sqrt() - a.sqrt();
            }
        }
        gain
    }

    fn insert(&mut self, e: Element) -> f64 {
        let gain = self.gain(e);
        self.inside[e] = true;
        for &(u, w) in self.graph.neighbors(e) {
            self.acc[u] += w;
        }
        self.value += gain;
        gain
    }

    fn boxed_clone(&self) -> Box<dyn GainState + '_> {
        Box::new(self.clone())
    }
}
