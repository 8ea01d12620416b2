//! Loading and generating problem data.

mod build;
mod edge_list;
mod generate;
mod similarity;

pub use build::{assign_costs, build_instance, CostModel, ObjectiveKind, Source};
pub use edge_list::{parse_edge_list, parse_edge_list_str, read_edge_list, write_edge_list};
pub use generate::{
    gen_er, gen_random_submodular_instance, gen_similarity, random_instance, GeneratorKind,
    GeneratorSpec, WeightDist, RANDOM_BUDGET_FRACTIONS, RANDOM_EDGE_PROBS,
};
pub use similarity::{read_similarity, read_similarity_csv, write_similarity_csv, SimilarityData};
