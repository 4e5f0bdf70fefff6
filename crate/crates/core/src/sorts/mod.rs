//! The six sorts behind one instrumented interface.
//!
//! Each submodule exposes a `sort_slice` kernel that works in place on a slice
//! and reports to a [`Recorder`]. The `*_sort` operations wrap a kernel with
//! the run-level contract: guards, default budgets and outcome assembly.

pub mod bogo;
pub mod cube;
pub mod expo;
pub mod insertion;
pub mod slow;
pub mod stooge;

use crate::algorithm::AlgorithmId;
use crate::instrument::{Budget, BudgetExceeded, CounterSet, Recorder, SwapTrace};
use crate::Element;

/// ExpoSort refuses inputs longer than this unless the run carries an explicit
/// comparison budget or sets [`SortRun::allow_large`].
pub const EXPO_SORT_UNGUARDED_MAX_N: usize = 26;

/// Shuffle cap applied to BogoSort when the run does not set one.
pub const BOGO_SORT_DEFAULT_SHUFFLE_CAP: u64 = 10_000_000;

/// A deterministic in-place sort reporting to a recorder.
pub type Kernel = fn(&mut [Element], &mut Recorder) -> Result<(), BudgetExceeded>;

/// One execution request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortRun {
    pub input: Vec<Element>,
    pub algorithm: AlgorithmId,
    pub budget: Budget,
    /// Only BogoSort consumes randomness.
    pub seed: u64,
    /// Lifts the ExpoSort size guard.
    pub allow_large: bool,
}

impl SortRun {
    pub fn new(algorithm: AlgorithmId, input: impl Into<Vec<Element>>) -> Self {
        SortRun {
            input: input.into(),
            algorithm,
            budget: Budget::UNLIMITED,
            seed: 0,
            allow_large: false,
        }
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn allow_large(mut self, allow: bool) -> Self {
        self.allow_large = allow;
        self
    }

    pub fn n(&self) -> usize {
        self.input.len()
    }

    /// The recorder this run should report to, with default caps applied.
    pub fn recorder(&self) -> Recorder {
        let mut budget = self.budget;
        if self.algorithm == AlgorithmId::BogoSort && budget.max_shuffles.is_none() {
            budget.max_shuffles = std::num::NonZeroU64::new(BOGO_SORT_DEFAULT_SHUFFLE_CAP);
        }
        Recorder::new(budget)
    }
}

/// A completed run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortOutcome {
    pub output: Vec<Element>,
    pub counters: CounterSet,
    pub trace: SwapTrace,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SortError {
    #[error(transparent)]
    BudgetExceeded(#[from] BudgetExceeded),
    #[error("{algorithm} refuses n = {n} (limit {limit}) without an explicit budget or override")]
    InputTooLarge {
        algorithm: AlgorithmId,
        n: usize,
        limit: usize,
    },
}

impl SortError {
    /// Counters at the stop point, when the run got as far as counting.
    pub fn counters(&self) -> Option<CounterSet> {
        match self {
            SortError::BudgetExceeded(e) => Some(e.counters),
            SortError::InputTooLarge { .. } => None,
        }
    }
}

fn execute(
    run: &SortRun,
    mut recorder: Recorder,
    kernel: impl FnOnce(&mut [Element], &mut Recorder) -> Result<(), BudgetExceeded>,
) -> Result<SortOutcome, SortError> {
    let mut a = run.input.clone();
    // On failure the half-sorted array is dropped; only the counters survive.
    kernel(&mut a, &mut recorder)?;
    let (counters, trace) = recorder.into_parts();
    Ok(SortOutcome {
        output: a,
        counters,
        trace,
    })
}

pub fn expo_sort(run: &SortRun, recorder: Recorder) -> Result<SortOutcome, SortError> {
    debug_assert_eq!(run.algorithm, AlgorithmId::ExpoSort);
    let n = run.n();
    if n > EXPO_SORT_UNGUARDED_MAX_N
        && recorder.budget().max_comparisons.is_none()
        && !run.allow_large
    {
        return Err(SortError::InputTooLarge {
            algorithm: AlgorithmId::ExpoSort,
            n,
            limit: EXPO_SORT_UNGUARDED_MAX_N,
        });
    }
    execute(run, recorder, expo::sort_slice)
}

pub fn cube_sort(run: &SortRun, recorder: Recorder) -> Result<SortOutcome, SortError> {
    debug_assert_eq!(run.algorithm, AlgorithmId::CubeSort);
    execute(run, recorder, cube::sort_slice)
}

pub fn insertion_sort(run: &SortRun, recorder: Recorder) -> Result<SortOutcome, SortError> {
    debug_assert_eq!(run.algorithm, AlgorithmId::InsertionSort);
    execute(run, recorder, insertion::sort_slice)
}

pub fn stooge_sort(run: &SortRun, recorder: Recorder) -> Result<SortOutcome, SortError> {
    debug_assert_eq!(run.algorithm, AlgorithmId::StoogeSort);
    execute(run, recorder, stooge::sort_slice)
}

pub fn slow_sort(run: &SortRun, recorder: Recorder) -> Result<SortOutcome, SortError> {
    debug_assert_eq!(run.algorithm, AlgorithmId::SlowSort);
    execute(run, recorder, slow::sort_slice)
}

pub fn bogo_sort(run: &SortRun, recorder: Recorder) -> Result<SortOutcome, SortError> {
    debug_assert_eq!(run.algorithm, AlgorithmId::BogoSort);
    let seed = run.seed;
    execute(run, recorder, |a, rec| bogo::sort_slice(a, rec, seed))
}

/// Single dispatch entry point.
pub fn run_sort(run: &SortRun) -> Result<SortOutcome, SortError> {
    let recorder = run.recorder();
    match run.algorithm {
        AlgorithmId::ExpoSort => expo_sort(run, recorder),
        AlgorithmId::CubeSort => cube_sort(run, recorder),
        AlgorithmId::InsertionSort => insertion_sort(run, recorder),
        AlgorithmId::StoogeSort => stooge_sort(run, recorder),
        AlgorithmId::SlowSort => slow_sort(run, recorder),
        AlgorithmId::BogoSort => bogo_sort(run, recorder),
    }
}

/// The deterministic kernel behind `alg`, or `None` for BogoSort.
pub fn kernel(alg: AlgorithmId) -> Option<Kernel> {
    match alg {
        AlgorithmId::ExpoSort => Some(expo::sort_slice),
        AlgorithmId::CubeSort => Some(cube::sort_slice),
        AlgorithmId::InsertionSort => Some(insertion::sort_slice),
        AlgorithmId::StoogeSort => Some(stooge::sort_slice),
        AlgorithmId::SlowSort => Some(slow::sort_slice),
        AlgorithmId::BogoSort => None,
    }
}
