//! A laboratory for reluctant sorting algorithms.
//!
//! Six sorts (ExpoSort, CubeSort, InsertionSort, StoogeSort, SlowSort and
//! BogoSort) run behind one instrumented interface that counts every element
//! comparison, procedure entry and shuffle, and records each swap as a
//! [`SwapEvent`]. The [`oracle`] module supplies brute-force ground truth
//! (inversion counts, permutation enumeration, closed-form count tables),
//! [`growth`] fits measured count series against a ladder of growth laws, and
//! [`conformance`] bundles the property suites behind `reluctant verify`.

pub mod algorithm;
pub mod conformance;
pub mod growth;
pub mod instrument;
pub mod oracle;
pub mod report;
pub mod rng;
pub mod sorts;

pub use algorithm::{AlgorithmId, ParseAlgorithmError};
pub use growth::{fit, ratio_diagnostic, FitReport, GrowthError, GrowthModel, ModelFit};
pub use instrument::{
    replay, Budget, BudgetExceeded, CounterSet, Recorder, ReplayError, SwapEvent, SwapTrace,
};
pub use sorts::{
    bogo_sort, cube_sort, expo_sort, insertion_sort, run_sort, slow_sort, stooge_sort, SortError,
    SortOutcome, SortRun,
};

/// The sort key. Every algorithm here orders plain 64-bit signed integers.
pub type Element = i64;
