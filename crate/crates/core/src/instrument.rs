//! Exact operation counting and swap-trace recording.
//!
//! Cost model: one comparison is one evaluation of an element-versus-element
//! guard. Loop bookkeeping, index arithmetic and the `n > 1` size guards are
//! not counted. An invocation is any procedure entry, base cases included.
//!
//! Positions inside the sorts are 0-based. [`Recorder::record_swap`] is the
//! only place they are converted: every [`SwapEvent`] carries 1-based
//! positions, matching the pseudocode the algorithms are transcribed from.

use std::num::NonZeroU64;

use serde::{Deserialize, Serialize};

use crate::Element;

/// Exact tallies for one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CounterSet {
    pub comparisons: u64,
    pub swaps: u64,
    pub invocations: u64,
    pub shuffles: u64,
}

/// One exchange of two array elements, recorded before it happens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SwapEvent {
    /// 1-based sequence number within the trace.
    pub step: u64,
    /// 1-based position of the left element.
    pub left: usize,
    /// 1-based position of the right element. Equal to `left + 1` for every
    /// algorithm except StoogeSort and SlowSort, and omitted from JSON then.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    right: Option<usize>,
    pub larger: Element,
    pub smaller: Element,
}

impl SwapEvent {
    pub fn adjacent(step: u64, left: usize, larger: Element, smaller: Element) -> Self {
        SwapEvent {
            step,
            left,
            right: None,
            larger,
            smaller,
        }
    }

    pub fn new(step: u64, left: usize, right: usize, larger: Element, smaller: Element) -> Self {
        assert!(left < right, "swap positions must satisfy left < right");
        SwapEvent {
            step,
            left,
            right: (right != left + 1).then_some(right),
            larger,
            smaller,
        }
    }

    pub fn right(&self) -> usize {
        self.right.unwrap_or(self.left + 1)
    }

    pub fn is_adjacent(&self) -> bool {
        self.right() == self.left + 1
    }

    /// The event with its step number erased, for order-only comparisons.
    pub fn key(&self) -> (usize, usize, Element, Element) {
        (self.left, self.right(), self.larger, self.smaller)
    }
}

pub type SwapTrace = Vec<SwapEvent>;

/// Hard caps on counted work. Present limits are at least one.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_comparisons: Option<NonZeroU64>,
    pub max_shuffles: Option<NonZeroU64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_comparisons: None,
        max_shuffles: None,
    };

    pub fn comparisons(limit: u64) -> Self {
        Budget {
            max_comparisons: NonZeroU64::new(limit),
            max_shuffles: None,
        }
    }

    pub fn shuffles(limit: u64) -> Self {
        Budget {
            max_comparisons: None,
            max_shuffles: NonZeroU64::new(limit),
        }
    }
}

/// A run hit its budget. `counters` are the tallies at the stop point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error(
    "budget exceeded after {} comparisons and {} shuffles",
    counters.comparisons,
    counters.shuffles
)]
pub struct BudgetExceeded {
    pub counters: CounterSet,
}

/// Instrumentation sink owned by exactly one run.
#[derive(Debug, Clone, Default)]
pub struct Recorder {
    counters: CounterSet,
    trace: SwapTrace,
    budget: Budget,
}

impl Recorder {
    pub fn new(budget: Budget) -> Self {
        Recorder {
            budget,
            ..Recorder::default()
        }
    }

    pub fn counters(&self) -> CounterSet {
        self.counters
    }

    pub fn trace(&self) -> &[SwapEvent] {
        &self.trace
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn into_parts(self) -> (CounterSet, SwapTrace) {
        (self.counters, self.trace)
    }

    pub fn enter(&mut self) {
        self.counters.invocations += 1;
    }

    /// Counts one element comparison, refusing once the budget is spent.
    pub fn record_comparison(&mut self) -> Result<(), BudgetExceeded> {
        if let Some(max) = self.budget.max_comparisons {
            if self.counters.comparisons >= max.get() {
                return Err(self.exceeded());
            }
        }
        self.counters.comparisons += 1;
        Ok(())
    }

    /// The counted strict `a > b` guard every sort is built from.
    #[inline]
    pub fn greater(&mut self, a: Element, b: Element) -> Result<bool, BudgetExceeded> {
        self.record_comparison()?;
        Ok(a > b)
    }

    /// Records the exchange of the out-of-order pair at 0-based positions
    /// `left < right`. Swapping an in-order pair is a bug in the caller.
    pub fn record_swap(&mut self, left: usize, right: usize, larger: Element, smaller: Element) {
        assert!(
            larger > smaller,
            "only strictly out-of-order pairs may be swapped ({larger} vs {smaller})"
        );
        self.counters.swaps += 1;
        let step = self.counters.swaps;
        self.trace
            .push(SwapEvent::new(step, left + 1, right + 1, larger, smaller));
    }

    pub fn record_shuffle(&mut self) -> Result<(), BudgetExceeded> {
        if let Some(max) = self.budget.max_shuffles {
            if self.counters.shuffles >= max.get() {
                return Err(self.exceeded());
            }
        }
        self.counters.shuffles += 1;
        Ok(())
    }

    fn exceeded(&self) -> BudgetExceeded {
        BudgetExceeded {
            counters: self.counters,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplayError {
    #[error("step {step}: positions {left}..{right} are outside an array of length {len}")]
    OutOfRange {
        step: u64,
        left: usize,
        right: usize,
        len: usize,
    },
    #[error("step {step}: trace says ({larger}, {smaller}) but the array holds ({found_left}, {found_right})")]
    InconsistentTrace {
        step: u64,
        larger: Element,
        smaller: Element,
        found_left: Element,
        found_right: Element,
    },
    #[error("step {step}: recorded pair ({larger}, {smaller}) is not strictly out of order")]
    NotInverted {
        step: u64,
        larger: Element,
        smaller: Element,
    },
}

/// Applies `trace` to a copy of `input`, checking every event against the
/// array state it claims to have seen.
pub fn replay(trace: &[SwapEvent], input: &[Element]) -> Result<Vec<Element>, ReplayError> {
    let mut a = input.to_vec();
    for event in trace {
        apply(&mut a, event)?;
    }
    Ok(a)
}

/// Applies a single event in place. Used by [`replay`] and by callers that
/// inspect the array between swaps.
pub fn apply(a: &mut [Element], event: &SwapEvent) -> Result<(), ReplayError> {
    let (left, right) = (event.left, event.right());
    if left == 0 || right > a.len() || left >= right {
        return Err(ReplayError::OutOfRange {
            step: event.step,
            left,
            right,
            len: a.len(),
        });
    }
    if event.larger <= event.smaller {
        return Err(ReplayError::NotInverted {
            step: event.step,
            larger: event.larger,
            smaller: event.smaller,
        });
    }
    let (i, j) = (left - 1, right - 1);
    if a[i] != event.larger || a[j] != event.smaller {
        return Err(ReplayError::InconsistentTrace {
            step: event.step,
            larger: event.larger,
            smaller: event.smaller,
            found_left: a[i],
            found_right: a[j],
        });
    }
    a.swap(i, j);
    Ok(())
}
