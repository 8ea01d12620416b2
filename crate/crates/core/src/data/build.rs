use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::distributions::Open01;
use rand::Rng;

use super::SimilarityData;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::objectives::{revenue_cost, MaxCut, Objective, Revenue, Summarization, WeightedGraph};
use crate::rng::{self, Stream};

/// The three application objectives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectiveKind {
    Revenue,
    Summarization,
    MaxCut,
}

impl ObjectiveKind {
    pub const ALL: [ObjectiveKind; 3] = [
        ObjectiveKind::Revenue,
        ObjectiveKind::Summarization,
        ObjectiveKind::MaxCut,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ObjectiveKind::Revenue => "revenue",
            ObjectiveKind::Summarization => "summarization",
            ObjectiveKind::MaxCut => "maxcut",
        }
    }
}

impl fmt::Display for ObjectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for ObjectiveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ObjectiveKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                Error::invalid(format!(
                    "unknown application '{s}' (expected revenue, summarization or maxcut)"
                ))
            })
    }
}

/// How element costs are assigned.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CostModel {
    /// `1 - exp(-mu · sqrt(weighted degree))`; graph sources only.
    RevenueExp { mu: f64 },
    /// I.i.d. uniform on the open interval (0, 1).
    Uniform01 { seed: u64 },
    /// The cost column of a similarity source.
    FileColumn,
    /// Every element costs 1.
    Unit,
}

/// Parsed or generated data an instance is built from.
#[derive(Debug, Clone)]
pub enum Source {
    Graph(Arc<WeightedGraph>),
    Similarity(Arc<SimilarityData>),
}

impl Source {
    pub fn len(&self) -> usize {
        match self {
            Source::Graph(g) => g.n(),
            Source::Similarity(s) => s.matrix.n(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub(crate) fn uniform01_costs(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = rng::stream(seed, Stream::Cost);
    (0..n).map(|_| rng.sample(Open01)).collect()
}

/// Costs for every item of `source` under `model`.
pub fn assign_costs(source: &Source, model: &CostModel) -> Result<Vec<f64>> {
    match (model, source) {
        (CostModel::RevenueExp { mu }, Source::Graph(g)) => {
            Ok((0..g.n()).map(|u| revenue_cost(g, u, *mu)).collect())
        }
        (CostModel::RevenueExp { .. }, Source::Similarity(_)) => Err(Error::invalid(
            "the revenue cost model needs a graph source",
        )),
        (CostModel::Uniform01 { seed }, s) => Ok(uniform01_costs(s.len(), *seed)),
        (CostModel::FileColumn, Source::Similarity(s)) => Ok(s.costs.clone()),
        (CostModel::FileColumn, Source::Graph(_)) => Err(Error::invalid(
            "the file-column cost model needs a similarity source",
        )),
        (CostModel::Unit, s) => Ok(vec![1.0; s.len()]),
    }
}

pub(crate) fn objective_for(kind: ObjectiveKind, source: &Source) -> Result<Arc<dyn Objective>> {
    match (kind, source) {
        (ObjectiveKind::Revenue, Source::Graph(g)) => Ok(Arc::new(Revenue::new(g.clone()))),
        (ObjectiveKind::MaxCut, Source::Graph(g)) => Ok(Arc::new(MaxCut::new(g.clone()))),
        (ObjectiveKind::Summarization, Source::Similarity(s)) => {
            Ok(Arc::new(Summarization::new(s.matrix.clone())))
        }
        (kind, _) => Err(Error::invalid(format!(
            "the {kind} objective cannot be built from this source"
        ))),
    }
}

/// Builds an instance whose budget is `budget_fraction` of the total cost of
/// all items. Items costing more than the budget are discarded.
pub fn build_instance(
    kind: ObjectiveKind,
    source: &Source,
    cost_model: &CostModel,
    budget_fraction: f64,
) -> Result<Instance> {
    let instance = build_allowing_empty(kind, source, cost_model, budget_fraction)?;
    if instance.n() == 0 {
        return Err(Error::EmptyInstance {
            budget: instance.budget(),
        });
    }
    Ok(instance)
}

fn build_allowing_empty(
    kind: ObjectiveKind,
    source: &Source,
    cost_model: &CostModel,
    budget_fraction: f64,
) -> Result<Instance> {
    if !(budget_fraction > 0.0 && budget_fraction <= 1.0) {
        return Err(Error::invalid(format!(
            "budget fraction must lie in (0, 1], got {budget_fraction}"
        )));
    }
    if source.is_empty() {
        return Err(Error::EmptyGroundSet);
    }
    let objective = objective_for(kind, source)?;
    let costs = assign_costs(source, cost_model)?;
    let budget = budget_fraction * costs.iter().sum::<f64>();
    Instance::new(objective, costs, budget)
}
