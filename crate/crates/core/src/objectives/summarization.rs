use std::sync::Arc;

use super::{GainState, Objective};
use crate::error::{Error, Result};
use crate::Element;

const SIM_TOLERANCE: f64 = 1e-9;

/// Dense symmetric matrix of pairwise cosine similarities.
///
/// Entries must lie in `[0, 1]` with a unit diagonal. Negative similarities
/// are rejected because the summarization objective is only guaranteed to be
/// non-negative when they are excluded.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityMatrix {
    n: usize,
    data: Vec<f64>,
    column_sums: Vec<f64>,
}

impl SimilarityMatrix {
    /// `rows` is row-major with `n * n` entries.
    pub fn new(n: usize, rows: Vec<f64>) -> Result<Self> {
        if rows.len() != n * n {
            return Err(Error::invalid(format!(
                "similarity matrix needs {} entries, got {}",
                n * n,
                rows.len()
            )));
        }
        for u in 0..n {
            let diag = rows[u * n + u];
            if (diag - 1.0).abs() > SIM_TOLERANCE {
                return Err(Error::invalid(format!(
                    "self-similarity of item {u} is {diag}, expected 1"
                )));
            }
            for v in 0..n {
                let w = rows[u * n + v];
                if !(0.0..=1.0 + SIM_TOLERANCE).contains(&w) {
                    return Err(Error::invalid(format!(
                        "similarity ({u}, {v}) = {w} is outside [0, 1]"
                    )));
                }
                if (w - rows[v * n + u]).abs() > SIM_TOLERANCE {
                    return Err(Error::invalid(format!(
                        "similarity is not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        let column_sums = (0..n)
            .map(|v| (0..n).map(|u| rows[u * n + v]).sum())
            .collect();
        Ok(Self {
            n,
            data: rows,
            column_sums,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[f64] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    fn column_sum(&self, v: usize) -> f64 {
        self.column_sums[v]
    }
}

/// `f(S) = Σ_u max_{v∈S} w(u,v) - (1/n) Σ_u Σ_{v∈S} w(u,v)`, with the max over
/// an empty set taken as 0. Self-similarity is included in both sums.
pub fn summarization_value(sim: &SimilarityMatrix, set: &[Element]) -> f64 {
    let n = sim.n();
    if set.is_empty() || n == 0 {
        return 0.0;
    }
    let mut coverage = 0.0;
    let mut penalty = 0.0;
    for u in 0..n {
        let row = sim.row(u);
        let mut best = 0.0f64;
        for &v in set {
            best = best.max(row[v]);
            penalty += row[v];
        }
        coverage += best;
    }
    coverage - penalty / n as f64
}

/// Representative-subset objective for image summarization.
#[derive(Debug, Clone)]
pub struct Summarization {
    sim: Arc<SimilarityMatrix>,
}

impl Summarization {
    pub fn new(sim: Arc<SimilarityMatrix>) -> Self {
        Self { sim }
    }

    pub fn similarity(&self) -> &SimilarityMatrix {
        &self.sim
    }
}

impl Objective for Summarization {
    fn len(&self) -> usize {
        self.sim.n()
    }

    fn value(&self, set: &[Element]) -> f64 {
        summarization_value(&self.sim, set)
    }

    fn state(&self) -> Box<dyn GainState + '_> {
        let n = self.sim.n();
        Box::new(SummaryState {
            sim: &self.sim,
            inside: vec![false; n],
            best: vec![0.0; n],
            value: 0.0,
        })
    }
}

/// `best[u]` is the max similarity of `u` to the current set (0 when empty).
#[derive(Clone)]
struct SummaryState<'a> {
    sim: &'a SimilarityMatrix,
    inside: Vec<bool>,
    best: Vec<f64>,
    value: f64,
}

impl GainState for SummaryState<'_> {
    fn value(&self) -> f64 {
        self.value
    }

    fn contains(&self, e: Element) -> bool {
        self.inside[e]
    }

    fn gain(&self, e: Element) -> f64 {
        // sim is symmetric, so row e holds w(u, e) for every u.
        let row = self.sim.row(e);
        let coverage: f64 = row
            .iter()
            .zip(&self.best)
            .map(|(&w, &b)| (w - b).max(0.0))
            .sum();
        coverage - self.sim.column_sum(e) / self.sim.n() as f64
    }

    fn insert(&mut self, e: Element) -> f64 {
        let gain = self.gain(e);
        self.inside[e] = true;
        for (b, &w) in self.best.iter_mut().zip(self.sim.row(e)) {
            if w > *b {
                *b = w;
            }
        }
        self.value += gain;
        gain
    }

    fn boxed_clone(&self) -> Box<dyn GainState + '_> {
        Box::new(self.clone())
    }
}
