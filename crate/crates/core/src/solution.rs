//! Ordered solutions and the budget-capped suffix/prefix extractions used to
//! turn an over-budget construction into feasible candidates.

use crate::error::Result;
use crate::objectives::GainState;
use crate::oracle::CountingOracle;
use crate::Element;

/// A set together with the order its elements were added in.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedSolution {
    pub elements: Vec<Element>,
    pub total_cost: f64,
    pub value: f64,
}

impl OrderedSolution {
    pub fn empty() -> Self {
        Self {
            elements: Vec::new(),
            total_cost: 0.0,
            value: 0.0,
        }
    }

    pub fn singleton(e: Element, cost: f64, value: f64) -> Self {
        Self {
            elements: vec![e],
            total_cost: cost,
            value,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Longest run of last-added elements whose cost fits under `cap`. With
    /// positive costs this is also the fitting suffix of maximum cost.
    ///
    /// Evaluating the suffix costs one query, except when it is empty or the
    /// whole sequence (whose value is already known).
    pub fn max_cost_suffix(
        &self,
        cap: f64,
        costs: &[f64],
        oracle: &CountingOracle<'_>,
    ) -> Result<OrderedSolution> {
        let start = max_cost_suffix_start(&self.elements, cap, costs);
        if start == 0 {
            return Ok(self.clone());
        }
        let elements = self.elements[start..].to_vec();
        let value = oracle.value(&elements)?;
        Ok(OrderedSolution {
            total_cost: sum_costs(&elements, costs),
            elements,
            value,
        })
    }
}

fn sum_costs(elements: &[Element], costs: &[f64]) -> f64 {
    elements.iter().map(|&e| costs[e]).sum()
}

/// Start index of the longest suffix of `elements` with cost `≤ cap`.
pub fn max_cost_suffix_start(elements: &[Element], cap: f64, costs: &[f64]) -> usize {
    let mut start = elements.len();
    let mut tail = 0.0;
    while start > 0 && tail + costs[elements[start - 1]] <= cap {
        tail += costs[elements[start - 1]];
        start -= 1;
    }
    // Re-sum in slice order so the result agrees with `Instance::feasible`
    // even when the two summation orders round differently.
    while start < elements.len() && sum_costs(&elements[start..], costs) > cap {
        start += 1;
    }
    start
}

/// Length of the longest prefix of `elements` with cost `≤ cap`.
pub fn max_cost_prefix_len(elements: &[Element], cap: f64, costs: &[f64]) -> usize {
    let mut total = 0.0;
    for (i, &e) in elements.iter().enumerate() {
        total += costs[e];
        if total > cap {
            return i;
        }
    }
    elements.len()
}

/// A set under construction, with its incremental evaluator and the value of
/// every prefix of its insertion history.
pub struct Construction<'a> {
    state: Box<dyn GainState + 'a>,
    order: Vec<Element>,
    cost: f64,
    prefix_values: Vec<f64>,
}

impl<'a> Construction<'a> {
    pub fn new(oracle: &CountingOracle<'a>) -> Self {
        Self {
            state: oracle.state(),
            order: Vec::new(),
            cost: 0.0,
            prefix_values: vec![0.0],
        }
    }

    /// `f(e | S)`; one query.
    pub fn gain(&self, oracle: &CountingOracle<'_>, e: Element) -> Result<f64> {
        oracle.gain(&*self.state, e)
    }

    /// Appends `e`. The evaluator update is bookkeeping and is not metered:
    /// the caller has already paid for `f(e | S)`.
    pub fn push(&mut self, e: Element, cost: f64) {
        self.state.insert(e);
        self.order.push(e);
        self.cost += cost;
        self.prefix_values.push(self.state.value());
    }

    pub fn contains(&self, e: Element) -> bool {
        self.state.contains(e)
    }

    pub fn value(&self) -> f64 {
        self.state.value()
    }

    pub fn cost(&self) -> f64 {
        self.cost
    }

    pub fn elements(&self) -> &[Element] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn to_solution(&self, costs: &[f64]) -> OrderedSolution {
        self.prefix(self.order.len(), costs)
    }

    /// The first `len` elements added, valued from the recorded history.
    pub fn prefix(&self, len: usize, costs: &[f64]) -> OrderedSolution {
        let elements = self.order[..len].to_vec();
        OrderedSolution {
            total_cost: sum_costs(&elements, costs),
            value: self.prefix_values[len],
            elements,
        }
    }

    /// Longest prefix of the insertion history with cost `≤ cap`. Free: the
    /// prefix values were recorded during construction.
    pub fn max_cost_prefix(&self, cap: f64, costs: &[f64]) -> OrderedSolution {
        self.prefix(max_cost_prefix_len(&self.order, cap, costs), costs)
    }
}
