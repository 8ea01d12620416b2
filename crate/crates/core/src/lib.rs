//! Linear-query approximation algorithms for maximizing a non-negative,
//! possibly non-monotone submodular function subject to a knapsack budget.
//!
//! The crate is organized around a counted value oracle:
//!
//! * [`oracle`] and [`instance`] hold the problem model: element costs, the
//!   budget, and a [`CountingOracle`] that meters every set evaluation.
//! * [`objectives`] provides the three application objectives (revenue
//!   maximization, image summarization, weighted max cut) with incremental
//!   gain evaluators.
//! * [`algorithms`] implements the LA, LAR, DLA and RLA algorithms plus a
//!   density-greedy baseline and an exhaustive solver used as a test oracle.
//! * [`data`] parses edge lists and similarity CSVs, generates synthetic
//!   instances, and assembles [`Instance`]s from them.

pub mod algorithms;
pub mod data;
pub mod error;
pub mod instance;
pub mod objectives;
pub mod oracle;
pub mod rng;
pub mod solution;

pub use algorithms::{
    density_greedy_baseline, dla, exhaustive, la, lar, rla, AlgParams, Algorithm, ExactResult,
    RunResult,
};
pub use error::{Error, Result};
pub use instance::Instance;
pub use objectives::{GainState, Objective};
pub use oracle::CountingOracle;
pub use solution::{Construction, OrderedSolution};

/// Index of an element of the ground set, dense in `[0, n)`.
pub type Element = usize;
