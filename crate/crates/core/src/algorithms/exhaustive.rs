use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::objectives::GainState;
use crate::Element;

/// Largest ground set [`exhaustive`] will enumerate.
pub const EXHAUSTIVE_LIMIT: usize = 25;

/// Optimum of an instance, found by enumeration.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactResult {
    /// Optimal set in ascending id order; the lexicographically smallest
    /// among sets of equal value.
    pub opt_set: Vec<Element>,
    pub opt_value: f64,
    /// Most expensive member of `opt_set` (smallest id on ties); `None` when
    /// the optimum is empty.
    pub r: Option<Element>,
    /// Feasible sets visited.
    pub evaluations: u64,
}

struct Search<'i> {
    instance: &'i Instance,
    best_set: Vec<Element>,
    best_value: f64,
    evaluations: u64,
}

impl Search<'_> {
    // Visits every feasible set once, in lexicographic order of its sorted
    // element list, so a strict `>` keeps the smallest set among ties.
    fn visit(&mut self, state: &dyn GainState, set: &mut Vec<Element>, cost: f64, next: Element) {
        self.evaluations += 1;
        if state.value() > self.best_value {
            self.best_value = state.value();
            self.best_set = set.clone();
        }
        for e in next..self.instance.n() {
            let c = cost + self.instance.cost(e);
            if c > self.instance.budget() {
                continue;
            }
            let mut child = state.boxed_clone();
            child.insert(e);
            set.push(e);
            self.visit(&*child, set, c, e + 1);
            set.pop();
        }
    }
}

/// Enumerates every feasible subset. Refuses instances with more than
/// [`EXHAUSTIVE_LIMIT`] elements. Evaluations are not metered.
pub fn exhaustive(instance: &Instance) -> Result<ExactResult> {
    let n = instance.n();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let objective = instance.objective();
    let root = objective.state();
    let mut search = Search {
        instance,
        best_set: Vec::new(),
        best_value: 0.0,
        evaluations: 0,
    };
    search.visit(&*root, &mut Vec::new(), 0.0, 0);

    let opt_set = search.best_set;
    let opt_value = objective.value(&opt_set);
    let mut r: Option<Element> = None;
    for &e in &opt_set {
        if r.is_none_or(|best| instance.cost(e) > instance.cost(best)) {
            r = Some(e);
        }
    }
    Ok(ExactResult {
        opt_set,
        opt_value,
        r,
        evaluations: search.evaluations,
    })
}
