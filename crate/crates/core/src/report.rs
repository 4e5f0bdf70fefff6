//! Trace JSON emitted by `reluctant trace` and `reluctant run`.

use serde::{Deserialize, Serialize};

use crate::instrument::{CounterSet, SwapEvent};
use crate::sorts::{SortOutcome, SortRun};
use crate::Element;

/// `{"algorithm", "n", "seed", "input", "events", "counters"}` in that order.
/// `output` is only present in `run` documents and sits between `input` and
/// `events`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub algorithm: String,
    pub n: usize,
    pub seed: Option<u64>,
    pub input: Vec<Element>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<Vec<Element>>,
    pub events: Vec<SwapEvent>,
    pub counters: CounterSet,
}

impl TraceDocument {
    pub fn new(run: &SortRun, outcome: &SortOutcome) -> Self {
        TraceDocument {
            algorithm: run.algorithm.name().to_string(),
            n: run.n(),
            seed: run.algorithm.is_randomized().then_some(run.seed),
            input: run.input.clone(),
            output: None,
            events: outcome.trace.clone(),
            counters: outcome.counters,
        }
    }

    pub fn with_output(mut self, outcome: &SortOutcome) -> Self {
        self.output = Some(outcome.output.clone());
        self
    }
}

/// Printed by `reluctant run` when a budget stops the sort.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetDocument {
    pub algorithm: String,
    pub n: usize,
    pub seed: Option<u64>,
    pub error: String,
    pub counters: CounterSet,
}

impl BudgetDocument {
    pub fn new(run: &SortRun, counters: CounterSet) -> Self {
        BudgetDocument {
            algorithm: run.algorithm.name().to_string(),
            n: run.n(),
            seed: run.algorithm.is_randomized().then_some(run.seed),
            error: "budget_exceeded".to_string(),
            counters,
        }
    }
}
