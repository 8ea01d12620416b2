use std::sync::Arc;

use super::{GainState, Objective, WeightedGraph};
use crate::Element;

/// Total weight of edges with exactly one endpoint in `set`.
pub fn cut_value(graph: &WeightedGraph, set: &[Element]) -> f64 {
    let mut inside = vec![false; graph.n()];
    for &u in set {
        inside[u] = true;
    }
    let mut total = 0.0;
    for &u in set {
        for &(v, w) in graph.neighbors(u) {
            if !inside[v] {
                total += w;
            }
        }
    }
    total
}

/// Weighted max-cut objective `f(S) = Σ_{u∉S} Σ_{v∈S} w(u, v)`.
#[derive(Debug, Clone)]
pub struct MaxCut {
    graph: Arc<WeightedGraph>,
}

impl MaxCut {
    pub fn new(graph: Arc<WeightedGraph>) -> Self {
        Self { graph }
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }
}

impl Objective for MaxCut {
    fn len(&self) -> usize {
        self.graph.n()
    }

    fn value(&self, set: &[Element]) -> f64 {
        cut_value(&self.graph, set)
    }

    fn state(&self) -> Box<dyn GainState + '_> {
        Box::new(CutState {
            graph: &self.graph,
            inside: vec![false; self.graph.n()],
            toward_set: vec![0.0; self.graph.n()],
            value: 0.0,
        })
    }
}

/// `toward_set[u]` is the edge weight between `u` and the current set, so a
/// gain is `wdeg(e) - 2·toward_set[e]` in constant time.
#[derive(Clone)]
struct CutState<'a> {
    graph: &'a WeightedGraph,
    inside: Vec<bool>,
    toward_set: Vec<f64>,
    value: f64,
}

impl GainState for CutState<'_> {
    fn value(&self) -> f64 {
        self.value
    }

    fn contains(&self, e: Element) -> bool {
        self.inside[e]
    }

    fn gain(&self, e: Element) -> f64 {
        self.graph.weighted_degree(e) - 2.0 * self.toward_set[e]
    }

    fn insert(&mut self, e: Element) -> f64 {
        let gain = self.gain(e);
        self.inside[e] = true;
        for &(v, w) in self.graph.neighbors(e) {
            self.toward_set[v] += w;
        }
        self.value += gain;
        gain
    }

    fn boxed_clone(&self) -> Box<dyn GainState + '_> {
        Box::new(self.clone())
    }
}
