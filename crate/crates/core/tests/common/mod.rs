//! Shared fixtures and from-scratch reference implementations.
#![allow(dead_code)]

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smk_core::objectives::{MaxCut, Revenue, SimilarityMatrix, Summarization, WeightedGraph};
use smk_core::{Element, Objective};

pub type Edges = Vec<(usize, usize, f64)>;

pub fn random_edges(n: usize, p: f64, seed: u64) -> Edges {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, rng.gen::<f64>()));
            }
        }
    }
    edges
}

pub fn random_similarity(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sim = vec![0.0; n * n];
    for u in 0..n {
        sim[u * n + u] = 1.0;
        for v in u + 1..n {
            let s = rng.gen::<f64>();
            sim[u * n + v] = s;
            sim[v * n + u] = s;
        }
    }
    sim
}

pub fn naive_cut(edges: &Edges, set: &[Element]) -> f64 {
    edges
        .iter()
        .filter(|(u, v, _)| set.contains(u) != set.contains(v))
        .map(|e| e.2)
        .sum()
}

pub fn naive_revenue(n: usize, edges: &Edges, set: &[Element]) -> f64 {
    let mut total = 0.0;
    for u in (0..n).filter(|u| !set.contains(u)) {
        let mut inner = 0.0;
        for &(a, b, w) in edges {
            if (a == u && set.contains(&b)) || (b == u && set.contains(&a)) {
                inner += w;
            }
        }
        total += f64::sqrt(inner);
    }
    total
}

pub fn naive_summarization(n: usize, sim: &[f64], set: &[Element]) -> f64 {
    let mut coverage = 0.0;
    let mut penalty = 0.0;
    for u in 0..n {
        let mut best = 0.0f64;
        for &v in set {
            best = best.max(sim[u * n + v]);
            penalty += sim[u * n + v];
        }
        coverage += best;
    }
    coverage - penalty / n as f64
}

/// One objective together with its independent reference.
pub struct Family {
    pub name: &'static str,
    pub objective: Arc<dyn Objective>,
    pub reference: Reference,
}

pub type Reference = Box<dyn Fn(&[Element]) -> f64 + Send + Sync>;

pub fn families(n: usize, seed: u64) -> Vec<Family> {
    let edges = random_edges(n, 0.4, seed);
    let graph = Arc::new(WeightedGraph::from_edges(n, edges.clone()).unwrap());
    let sim = random_similarity(n, seed);
    let matrix = Arc::new(SimilarityMatrix::new(n, sim.clone()).unwrap());
    let cut_edges = edges.clone();
    vec![
        Family {
            name: "maxcut",
            objective: Arc::new(MaxCut::new(graph.clone())),
            reference: Box::new(move |s| naive_cut(&cut_edges, s)),
        },
        Family {
            name: "revenue",
            objective: Arc::new(Revenue::new(graph)),
            reference: Box::new(move |s| naive_revenue(n, &edges, s)),
        },
        Family {
            name: "summarization",
            objective: Arc::new(Summarization::new(matrix)),
            reference: Box::new(move |s| naive_summarization(n, &sim, s)),
        },
    ]
}

pub fn members(mask: &[bool]) -> Vec<Element> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}
