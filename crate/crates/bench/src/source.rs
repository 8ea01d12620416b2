use std::path::PathBuf;
use std::sync::Arc;

use smk_core::data::{
    gen_er, gen_similarity, parse_edge_list, read_similarity_csv, CostModel, GeneratorSpec,
    ObjectiveKind, Source,
};
use smk_core::objectives::REVENUE_MU;

use crate::error::{BenchError, Result};

/// Where a sweep's data comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum SourceSpec {
    /// Edge list (revenue, maxcut) or similarity CSV (summarization).
    File(PathBuf),
    /// Erdős–Rényi graph with U(0, 1) weights.
    Er { n: usize, edge_prob: f64, seed: u64 },
    /// Clustered synthetic similarity matrix with U(0.1, 1) costs.
    Similarity { n: usize, seed: u64 },
}

impl SourceSpec {
    fn seed(&self) -> u64 {
        match self {
            SourceSpec::File(_) => 0,
            SourceSpec::Er { seed, .. } | SourceSpec::Similarity { seed, .. } => *seed,
        }
    }
}

/// Loads the source and picks the application's cost model: revenue uses
/// the degree-based curve, max cut U(0, 1) costs, summarization the file's
/// cost column.
pub fn load_source(app: ObjectiveKind, spec: &SourceSpec) -> Result<(Source, CostModel)> {
    let source = match (app, spec) {
        (ObjectiveKind::Summarization, SourceSpec::File(path)) => {
            Source::Similarity(Arc::new(read_similarity_csv(path)?))
        }
        (_, SourceSpec::File(path)) => Source::Graph(Arc::new(parse_edge_list(path)?)),
        (ObjectiveKind::Summarization, SourceSpec::Similarity { n, seed }) => Source::Similarity(
            Arc::new(gen_similarity(&GeneratorSpec::similarity(*n, *seed))?),
        ),
        (ObjectiveKind::Revenue | ObjectiveKind::MaxCut, SourceSpec::Er { n, edge_prob, seed }) => {
            Source::Graph(Arc::new(gen_er(&GeneratorSpec::er(*n, *edge_prob, *seed))?))
        }
        (app, _) => {
            return Err(BenchError::config(format!(
                "the {app} application needs {} data",
                if app == ObjectiveKind::Summarization {
                    "similarity"
                } else {
                    "graph (er)"
                }
            )))
        }
    };
    let cost_model = match app {
        ObjectiveKind::Revenue => CostModel::RevenueExp { mu: REVENUE_MU },
        ObjectiveKind::MaxCut => CostModel::Uniform01 { seed: spec.seed() },
        ObjectiveKind::Summarization => CostModel::FileColumn,
    };
    Ok((source, cost_model))
}
