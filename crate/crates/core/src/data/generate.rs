//! Seeded synthetic data: Erdős–Rényi graphs, clustered similarity matrices,
//! and small random instances for property and ratio tests.
//!
//! All generators are pure functions of their spec; the same seed always
//! yields bit-identical output.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use super::build::{assign_costs, objective_for, CostModel, ObjectiveKind, Source};
use super::SimilarityData;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::objectives::{SimilarityMatrix, WeightedGraph, REVENUE_MU};
use crate::rng::{self, Stream};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    ErGraph,
    Similarity,
    RandomSubmodular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightDist {
    Uniform01,
    Unit,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub edge_prob: f64,
    pub seed: u64,
    pub weight_dist: WeightDist,
    pub cost_model: CostModel,
}

impl GeneratorSpec {
    /// ER graph with U(0, 1) weights and U(0, 1) costs.
    pub fn er(n: usize, edge_prob: f64, seed: u64) -> Self {
        Self {
            kind: GeneratorKind::ErGraph,
            n,
            edge_prob,
            seed,
            weight_dist: WeightDist::Uniform01,
            cost_model: CostModel::Uniform01 { seed },
        }
    }

    /// Clustered similarity matrix with U(0.1, 1) costs in the file column.
    pub fn similarity(n: usize, seed: u64) -> Self {
        Self {
            kind: GeneratorKind::Similarity,
            n,
            edge_prob: 0.0,
            seed,
            weight_dist: WeightDist::Uniform01,
            cost_model: CostModel::FileColumn,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::invalid("generator needs n >= 1"));
        }
        if !(0.0..=1.0).contains(&self.edge_prob) {
            return Err(Error::invalid(format!(
                "edge probability must lie in [0, 1], got {}",
                self.edge_prob
            )));
        }
        Ok(())
    }
}

/// Erdős–Rényi graph: every unordered pair is an edge independently with
/// probability `spec.edge_prob`.
pub fn gen_er(spec: &GeneratorSpec) -> Result<WeightedGraph> {
    spec.validate()?;
    let mut rng = rng::stream(spec.seed, Stream::Graph);
    let mut edges = Vec::new();
    for u in 0..spec.n {
        for v in u + 1..spec.n {
            if rng.gen_bool(spec.edge_prob) {
                let w = match spec.weight_dist {
                    WeightDist::Uniform01 => rng.gen::<f64>(),
                    WeightDist::Unit => 1.0,
                };
                edges.push((u, v, w));
            }
        }
    }
    WeightedGraph::from_edges(spec.n, edges)
}

const FEATURE_DIM: usize = 24;
const ITEMS_PER_CLUSTER: usize = 20;

/// Cosine similarities of non-negative feature vectors drawn around a few
/// random cluster centers, plus U(0.1, 1) costs.
pub fn gen_similarity(spec: &GeneratorSpec) -> Result<SimilarityData> {
    spec.validate()?;
    let n = spec.n;
    let mut rng = rng::stream(spec.seed, Stream::Features);
    let clusters = n.div_ceil(ITEMS_PER_CLUSTER).max(2);
    let centers: Vec<Vec<f64>> = (0..clusters)
        .map(|_| (0..FEATURE_DIM).map(|_| rng.gen::<f64>().powi(2)).collect())
        .collect();
    let features: Vec<Vec<f64>> = (0..n)
        .map(|_| {
            let center = centers.choose(&mut rng).expect("at least two clusters");
            let v: Vec<f64> = center
                .iter()
                .map(|&c| (c + rng.gen_range(-0.25..0.25)).max(0.0) + 1e-3)
                .collect();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            v.into_iter().map(|x| x / norm).collect()
        })
        .collect();

    let mut sim = vec![0.0; n * n];
    for u in 0..n {
        sim[u * n + u] = 1.0;
        for v in u + 1..n {
            let dot: f64 = features[u]
                .iter()
                .zip(&features[v])
                .map(|(a, b)| a * b)
                .sum();
            let s = dot.clamp(0.0, 1.0);
            sim[u * n + v] = s;
            sim[v * n + u] = s;
        }
    }

    let mut cost_rng = rng::stream(spec.seed, Stream::Cost);
    let costs = (0..n).map(|_| cost_rng.gen_range(0.1..1.0)).collect();
    Ok(SimilarityData {
        matrix: Arc::new(SimilarityMatrix::new(n, sim)?),
        costs,
    })
}

/// Edge probabilities random instances draw from.
pub const RANDOM_EDGE_PROBS: [f64; 3] = [0.2, 0.5, 0.8];
/// Budget fractions (of total cost) random instances draw from.
pub const RANDOM_BUDGET_FRACTIONS: [f64; 4] = [0.05, 0.1, 0.25, 0.5];

/// Small random weighted-cut instance: ER graph with `p ∈ {0.2, 0.5, 0.8}`,
/// U(0, 1) weights, U(0.1, 1) costs, and a budget of `{5, 10, 25, 50}%` of
/// the total cost. Items over budget are discarded, so the ground set may be
/// smaller than `n` (or empty).
pub fn gen_random_submodular_instance(n: usize, seed: u64) -> Result<Instance> {
    random_instance(ObjectiveKind::MaxCut, n, seed)
}

/// Random instance of any of the three application families, with the same
/// shape distribution as [`gen_random_submodular_instance`]. Revenue
/// instances use the revenue cost curve instead of uniform costs.
pub fn random_instance(kind: ObjectiveKind, n: usize, seed: u64) -> Result<Instance> {
    let mut shape = rng::stream(seed, Stream::Shape);
    let edge_prob = *RANDOM_EDGE_PROBS.choose(&mut shape).expect("non-empty");
    let fraction = *RANDOM_BUDGET_FRACTIONS
        .choose(&mut shape)
        .expect("non-empty");

    let (source, costs) = match kind {
        ObjectiveKind::MaxCut => {
            let graph = gen_er(&GeneratorSpec::er(n, edge_prob, seed))?;
            let mut rng = rng::stream(seed, Stream::Cost);
            let costs = (0..n).map(|_| rng.gen_range(0.1..1.0)).collect();
            (Source::Graph(Arc::new(graph)), costs)
        }
        ObjectiveKind::Revenue => {
            let graph = gen_er(&GeneratorSpec::er(n, edge_prob, seed))?;
            let source = Source::Graph(Arc::new(graph));
            let costs = assign_costs(&source, &CostModel::RevenueExp { mu: REVENUE_MU })?;
            (source, costs)
        }
        ObjectiveKind::Summarization => {
            let data = gen_similarity(&GeneratorSpec::similarity(n, seed))?;
            let costs = data.costs.clone();
            (Source::Similarity(Arc::new(data)), costs)
        }
    };
    let objective = objective_for(kind, &source)?;
    let budget = fraction * costs.iter().sum::<f64>();
    Instance::new(objective, costs, budget)
}
