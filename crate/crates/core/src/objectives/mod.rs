//! Set functions and their incremental evaluators.
//!
//! An [`Objective`] evaluates `f(S)` from scratch. Every objective also hands
//! out a [`GainState`], a mutable evaluator positioned at some set `S` that
//! answers `f(e | S)` without re-evaluating `f(S)`. The algorithms only ever
//! touch objectives through [`crate::CountingOracle`], which meters both
//! paths identically.

mod cut;
mod graph;
mod revenue;
mod summarization;

use std::fmt;
use std::sync::Arc;

use crate::Element;

pub use cut::{cut_value, MaxCut};
pub use graph::WeightedGraph;
pub use revenue::{revenue_cost, revenue_value, Revenue, ISOLATED_COST, REVENUE_MU};
pub use summarization::{summarization_value, SimilarityMatrix, Summarization};

/// A normalized set function over items `0..len()`.
///
/// Implementations must be pure: the same set always yields the same value.
pub trait Objective: Send + Sync + fmt::Debug {
    /// Number of items the function is defined over.
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `f(S)` for a set of distinct, in-range items.
    fn value(&self, set: &[Element]) -> f64;

    /// A fresh incremental evaluator positioned at the empty set.
    ///
    /// The default falls back to from-scratch evaluation.
    fn state(&self) -> Box<dyn GainState + '_> {
        Box::new(NaiveState::new(self))
    }
}

/// Incremental evaluator for one growing set.
pub trait GainState {
    /// `f(S)` for the current set, accumulated from inserted gains.
    fn value(&self) -> f64;

    fn contains(&self, e: Element) -> bool;

    /// `f(S ∪ {e}) - f(S)`. The caller guarantees `e ∉ S`.
    fn gain(&self, e: Element) -> f64;

    /// Adds `e` to the set and returns its gain.
    fn insert(&mut self, e: Element) -> f64;

    fn boxed_clone(&self) -> Box<dyn GainState + '_>;
}

/// Evaluator that recomputes `f` from scratch for every gain.
pub struct NaiveState<'a, O: ?Sized> {
    objective: &'a O,
    members: Vec<Element>,
    present: Vec<bool>,
    value: f64,
}

impl<'a, O: Objective + ?Sized> NaiveState<'a, O> {
    pub fn new(objective: &'a O) -> Self {
        Self {
            objective,
            members: Vec::new(),
            present: vec![false; objective.len()],
            value: 0.0,
        }
    }
}

impl<O: ?Sized> Clone for NaiveState<'_, O> {
    fn clone(&self) -> Self {
        Self {
            objective: self.objective,
            members: self.members.clone(),
            present: self.present.clone(),
            value: self.value,
        }
    }
}

impl<O: Objective + ?Sized> GainState for NaiveState<'_, O> {
    fn value(&self) -> f64 {
        self.value
    }

    fn contains(&self, e: Element) -> bool {
        self.present[e]
    }

    fn gain(&self, e: Element) -> f64 {
        let mut with = self.members.clone();
        with.push(e);
        self.objective.value(&with) - self.value
    }

    fn insert(&mut self, e: Element) -> f64 {
        self.members.push(e);
        self.present[e] = true;
        let next = self.objective.value(&self.members);
        let gain = next - self.value;
        self.value = next;
        gain
    }

    fn boxed_clone(&self) -> Box<dyn GainState + '_> {
        Box::new(self.clone())
    }
}

/// Restriction of an objective to a subset of its items, renumbered densely.
///
/// Items outside the subset still exist for the inner function (a vertex that
/// cannot be selected still contributes to a cut or to a revenue sum); they
/// just cannot be chosen.
#[derive(Debug)]
pub struct Restricted {
    inner: Arc<dyn Objective>,
    map: Vec<usize>,
}

impl Restricted {
    pub fn new(inner: Arc<dyn Objective>, map: Vec<usize>) -> Self {
        debug_assert!(map.iter().all(|&i| i < inner.len()));
        Self { inner, map }
    }

    pub fn inner(&self) -> &Arc<dyn Objective> {
        &self.inner
    }

    /// Original item id for each restricted element.
    pub fn map(&self) -> &[usize] {
        &self.map
    }
}

impl Objective for Restricted {
    fn len(&self) -> usize {
        self.map.len()
    }

    fn value(&self, set: &[Element]) -> f64 {
        let mapped: Vec<Element> = set.iter().map(|&e| self.map[e]).collect();
        self.inner.value(&mapped)
    }

    fn state(&self) -> Box<dyn GainState + '_> {
        Box::new(RestrictedState {
            inner: self.inner.state(),
            map: &self.map,
        })
    }
}

struct RestrictedState<'a> {
    inner: Box<dyn GainState + 'a>,
    map: &'a [usize],
}

impl GainState for RestrictedState<'_> {
    fn value(&self) -> f64 {
        self.inner.value()
    }

    fn contains(&self, e: Element) -> bool {
        self.inner.contains(self.map[e])
    }

    fn gain(&self, e: Element) -> f64 {
        self.inner.gain(self.map[e])
    }

    fn insert(&mut self, e: Element) -> f64 {
        self.inner.insert(self.map[e])
    }

    fn boxed_clone(&self) -> Box<dyn GainState + '_> {
        Box::new(RestrictedState {
            inner: self.inner.boxed_clone(),
            map: self.map,
        })
    }
}

/// `f(S) = Σ_{e∈S} w(e)` with non-negative weights. Monotone, and the simplest
/// submodular function; handy for exercising algorithms in isolation.
#[derive(Debug, Clone)]
pub struct Modular {
    weights: Vec<f64>,
}

impl Modular {
    pub fn new(weights: Vec<f64>) -> Self {
        Self { weights }
    }

    /// The identically-zero function on `n` items.
    pub fn zero(n: usize) -> Self {
        Self::new(vec![0.0; n])
    }
}

impl Objective for Modular {
    fn len(&self) -> usize {
        self.weights.len()
    }

    fn value(&self, set: &[Element]) -> f64 {
        set.iter().map(|&e| self.weights[e]).sum()
    }
}
