//! Query-metered access to an objective.
//!
//! Counting convention: every set evaluation costs one query. A marginal gain
//! costs one query because the caller already holds `f(S)`. `f(∅) = 0` is
//! free, and re-evaluating the most recently evaluated set is a cache hit.

use std::cell::{Cell, RefCell};

use crate::error::{Error, Result};
use crate::objectives::{GainState, Objective};
use crate::Element;

/// Single-owner, metered view of an objective. Not `Sync`: one oracle per
/// algorithm run.
pub struct CountingOracle<'a> {
    objective: &'a dyn Objective,
    queries: Cell<u64>,
    last: RefCell<Option<(Vec<Element>, f64)>>,
}

impl<'a> CountingOracle<'a> {
    pub fn new(objective: &'a dyn Objective) -> Self {
        Self {
            objective,
            queries: Cell::new(0),
            last: RefCell::new(None),
        }
    }

    pub fn n(&self) -> usize {
        self.objective.len()
    }

    pub fn query_count(&self) -> u64 {
        self.queries.get()
    }

    fn charge(&self) {
        self.queries.set(self.queries.get() + 1);
    }

    fn canonical(&self, set: &[Element]) -> Result<Vec<Element>> {
        let n = self.n();
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateElement(pair[0]));
            }
        }
        if let Some(&element) = sorted.last().filter(|&&e| e >= n) {
            return Err(Error::ElementOutOfRange { element, n });
        }
        Ok(sorted)
    }

    /// `f(S)`.
    pub fn value(&self, set: &[Element]) -> Result<f64> {
        let key = self.canonical(set)?;
        if key.is_empty() {
            return Ok(0.0);
        }
        if let Some((cached, v)) = self.last.borrow().as_ref() {
            if *cached == key {
                return Ok(*v);
            }
        }
        self.charge();
        let v = self.objective.value(&key);
        *self.last.borrow_mut() = Some((key, v));
        Ok(v)
    }

    /// `f(S ∪ {e}) - f_s`, where `f_s` is the caller's value of `f(S)`.
    pub fn marginal_gain(&self, e: Element, set: &[Element], f_s: f64) -> Result<f64> {
        if set.contains(&e) {
            return Err(Error::AlreadyPresent(e));
        }
        let mut with = set.to_vec();
        with.push(e);
        Ok(self.value(&with)? - f_s)
    }

    /// A fresh incremental evaluator at the empty set. Creating it is free.
    pub fn state(&self) -> Box<dyn GainState + 'a> {
        self.objective.state()
    }

    /// `f(e | S)` through an incremental evaluator; one query.
    pub fn gain(&self, state: &dyn GainState, e: Element) -> Result<f64> {
        let n = self.n();
        if e >= n {
            return Err(Error::ElementOutOfRange { element: e, n });
        }
        if state.contains(e) {
            return Err(Error::AlreadyPresent(e));
        }
        self.charge();
        self.last.replace(None);
        Ok(state.gain(e))
    }

    /// Unmetered access for result verification outside an algorithm run.
    pub fn objective(&self) -> &'a dyn Objective {
        self.objective
    }
}
