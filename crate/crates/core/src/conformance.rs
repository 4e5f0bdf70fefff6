//! Property suites run by `reluctant verify`.
//!
//! The three adjacent-swap sorts are taken from a [`Kernels`] table so a suite
//! can be pointed at a deliberately broken variant and shown to catch it.

use crate::algorithm::AlgorithmId;
use crate::instrument::{self, Recorder, SwapEvent};
use crate::oracle::{self, CountCase};
use crate::sorts::{self, Kernel, SortOutcome, SortRun};
use crate::Element;

/// Exhaustive BogoSort sweeps stop at this size by default: at n = 8 every
/// one of the 40 320 inputs expects 40 320 shuffles.
pub const BOGO_EXHAUSTIVE_MAX_N: usize = 7;

/// Inputs with duplicates are drawn from this alphabet.
pub const TIE_ALPHABET: [Element; 3] = [1, 2, 3];
pub const TIE_MAX_N: usize = 6;

/// How many failure descriptions a suite keeps.
const MAX_REPORTED_FAILURES: usize = 5;

#[derive(Clone, Copy)]
pub struct Kernels {
    pub expo: Kernel,
    pub cube: Kernel,
    pub insertion: Kernel,
}

impl Kernels {
    pub fn standard() -> Self {
        Kernels {
            expo: sorts::expo::sort_slice,
            cube: sorts::cube::sort_slice,
            insertion: sorts::insertion::sort_slice,
        }
    }

    fn get(&self, alg: AlgorithmId) -> Option<Kernel> {
        match alg {
            AlgorithmId::ExpoSort => Some(self.expo),
            AlgorithmId::CubeSort => Some(self.cube),
            AlgorithmId::InsertionSort => Some(self.insertion),
            _ => None,
        }
    }

    /// Runs `alg` on `input` without budgets, through the overridden kernel
    /// when there is one.
    pub fn run(&self, alg: AlgorithmId, input: &[Element], seed: u64) -> SortOutcome {
        match self.get(alg) {
            Some(kernel) => {
                let mut a = input.to_vec();
                let mut rec = Recorder::default();
                kernel(&mut a, &mut rec).expect("unbudgeted run cannot exceed its budget");
                let (counters, trace) = rec.into_parts();
                SortOutcome {
                    output: a,
                    counters,
                    trace,
                }
            }
            None => {
                let run = SortRun::new(alg, input.to_vec())
                    .with_seed(seed)
                    .allow_large(true);
                sorts::run_sort(&run).expect("suite inputs stay within default budgets")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
    pub examples: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            cases: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_REPORTED_FAILURES {
                self.examples.push(describe());
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub bogo_max_n: usize,
    pub seed: u64,
}

impl VerifyConfig {
    pub fn new(max_n: usize) -> Self {
        VerifyConfig {
            max_n,
            bogo_max_n: max_n.min(BOGO_EXHAUSTIVE_MAX_N),
            seed: 0,
        }
    }
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig::new(8)
    }
}

const ADJACENT: [AlgorithmId; 3] = [
    AlgorithmId::ExpoSort,
    AlgorithmId::CubeSort,
    AlgorithmId::InsertionSort,
];

fn all_permutations(max_n: usize) -> impl Iterator<Item = Vec<Element>> {
    (1..=max_n).flat_map(|n| oracle::permutations(n).expect("max_n within oracle limit"))
}

fn tie_inputs(max_n: usize) -> impl Iterator<Item = Vec<Element>> {
    (1..=max_n.min(TIE_MAX_N)).flat_map(|n| oracle::words(&TIE_ALPHABET, n))
}

pub fn run_all(config: &VerifyConfig) -> Vec<SuiteResult> {
    run_all_with(config, &Kernels::standard())
}

pub fn run_all_with(config: &VerifyConfig, kernels: &Kernels) -> Vec<SuiteResult> {
    vec![
        sortedness(config, kernels),
        expo_count_law(config, kernels),
        cube_best_case(config, kernels),
        cube_worst_case(config, kernels),
        trace_equivalence(config, kernels),
        swap_inversion_law(config, kernels),
        monotone_progress(config, kernels),
        ties(config, kernels),
        oracle_agreement(config, kernels),
    ]
}

/// Output is sorted and a rearrangement of the input, for all six sorts over
/// every permutation (BogoSort up to `bogo_max_n`) and every tie input.
pub fn sortedness(config: &VerifyConfig, kernels: &Kernels) -> SuiteResult {
    let mut suite = SuiteResult::new("sortedness");
    let inputs: Vec<Vec<Element>> = all_permutations(config.max_n)
        .chain(tie_inputs(config.max_n))
        .collect();
    for alg in AlgorithmId::ALL {
        for (i, input) in inputs.iter().enumerate() {
            if alg == AlgorithmId::BogoSort && input.len() > config.bogo_max_n {
                continue;
            }
            suite.cases += 1;
            let out = kernels.run(alg, input, config.seed.wrapping_add(i as u64));
            suite.check(
                oracle::is_sorted(&out.output) && oracle::is_permutation_of(&out.output, input),
                || format!("{alg} on {input:?} gave {:?}", out.output),
            );
        }
    }
    suite
}

/// ExpoSort makes 2^(n−1) − 1 comparisons and 2^n − 1 calls on every input.
pub fn expo_count_law(config: &VerifyConfig, kernels: &Kernels) -> SuiteResult {
    let mut suite = SuiteResult::new("expo-count-law");
    for input in all_permutations(config.max_n) {
        suite.cases += 1;
        let n = input.len() as u32;
        let c = kernels.run(AlgorithmId::ExpoSort, &input, 0).counters;
        suite.check(
            c.comparisons == (1 << (n - 1)) - 1 && c.invocations == (1 << n) - 1,
            || {
                format!(
                    "{input:?}: {} comparisons, {} calls",
                    c.comparisons, c.invocations
                )
            },
        );
    }
    suite
}

/// CubeSort on sorted input makes exactly n − 1 comparisons and no swaps.
pub fn cube_best_case(config: &VerifyConfig, kernels: &Kernels) -> SuiteResult {
    let mut suite = SuiteResult::new("cube-best-case");
    for n in 1..=config.max_n {
        suite.cases += 1;
        let input = oracle::case_input(CountCase::Sorted, n);
        let c = kernels.run(AlgorithmId::CubeSort, &input, 0).counters;
        suite.check(c.comparisons == n as u64 - 1 && c.swaps == 0, || {
            format!("n = {n}: {} comparisons", c.comparisons)
        });
    }
    suite
}

/// CubeSort on reversed input makes (n − 1) + C(n, 3) comparisons, and no
/// permutation of the same size costs more.
pub fn cube_worst_case(config: &VerifyConfig, kernels: &Kernels) -> SuiteResult {
    let mut suite = SuiteResult::new("cube-worst-case");
    for n in 1..=config.max_n {
        let reversed = oracle::case_input(CountCase::Reverse, n);
        let worst = kernels
            .run(AlgorithmId::CubeSort, &reversed, 0)
            .counters
            .comparisons;
        let expected = (n as u64 - 1) + oracle::binomial(n as u64, 3);
        suite.cases += 1;
        suite.check(worst == expected, || {
            format!("n = {n}: reversed took {worst}, expected {expected}")
        });
        for input in oracle::permutations(n).expect("max_n within oracle limit") {
            suite.cases += 1;
            let c = kernels
                .run(AlgorithmId::CubeSort, &input, 0)
                .counters
                .comparisons;
            suite.check(c <= worst, || {
                format!("{input:?} took {c} > reversed {worst}")
            });
        }
    }
    suite
}

/// ExpoSort, CubeSort and InsertionSort make the same swaps on every
/// permutation.
pub fn trace_equivalence(config: &VerifyConfig, kernels: &Kernels) -> SuiteResult {
    let mut suite = SuiteResult::new("trace-equivalence");
    for input in all_permutations(config.max_n) {
        suite.cases += 1;
        suite.check(same_traces(kernels, &input), || {
            format!("traces differ on {input:?}")
        });
    }
    suite
}

fn same_traces(kernels: &Kernels, input: &[Element]) -> bool {
    let reference = kernels.run(AlgorithmId::InsertionSort, input, 0).trace;
    [AlgorithmId::ExpoSort, AlgorithmId::CubeSort]
        .into_iter()
        .all(|alg| oracle::traces_equal(&kernels.run(alg, input, 0).trace, &reference))
}

/// Swaps equal the input's inversion count for the adjacent-swap sorts.
pub fn swap_inversion_law(config: &VerifyConfig, kernels: &Kernels) -> SuiteResult {
    let mut suite = SuiteResult::new("swap-inversion-law");
    for input in all_permutations(config.max_n).chain(tie_inputs(config.max_n)) {
        let inversions = oracle::inversion_count(&input);
        for alg in ADJACENT {
            suite.cases += 1;
            let swaps = kernels.run(alg, &input, 0).counters.swaps;
            suite.check(swaps == inversions, || {
                format!("{alg} on {input:?}: {swaps} swaps, {inversions} inversions")
            });
        }
    }
    suite
}

/// Replaying each trace removes exactly one inversion per swap and ends at
/// the run's output.
pub fn monotone_progress(config: &VerifyConfig, kernels: &Kernels) -> SuiteResult {
    let mut suite = SuiteResult::new("monotone-progress");
    for input in all_permutations(config.max_n) {
        for alg in ADJACENT {
            suite.cases += 1;
            let out = kernels.run(alg, &input, 0);
            suite.check(progresses_one_inversion_per_swap(&input, &out), || {
                format!("{alg} on {input:?} does not progress monotonically")
            });
        }
    }
    suite
}

/// True when every event in `outcome.trace` applies cleanly to `input` and
/// removes exactly one inversion, and the replay ends at `outcome.output`.
pub fn progresses_one_inversion_per_swap(input: &[Element], outcome: &SortOutcome) -> bool {
    let mut a = input.to_vec();
    let mut inversions = oracle::inversion_count(&a);
    for event in &outcome.trace {
        if instrument::apply(&mut a, event).is_err() {
            return false;
        }
        let now = oracle::inversion_count(&a);
        if now + 1 != inversions {
            return false;
        }
        inversions = now;
    }
    a == outcome.output && outcome.trace.len() as u64 == outcome.counters.swaps
}

/// On inputs with repeated values no swap touches an equal pair, and the
/// three traces still agree.
pub fn ties(config: &VerifyConfig, kernels: &Kernels) -> SuiteResult {
    let mut suite = SuiteResult::new("ties");
    for input in tie_inputs(config.max_n) {
        suite.cases += 1;
        let strict = ADJACENT.into_iter().all(|alg| {
            kernels
                .run(alg, &input, 0)
                .trace
                .iter()
                .all(|e: &SwapEvent| e.larger > e.smaller)
        });
        suite.check(strict && same_traces(kernels, &input), || {
            format!("tie handling differs on {input:?}")
        });
    }
    suite
}

/// Instrumented comparison counts equal the oracle's recurrence tables.
pub fn oracle_agreement(config: &VerifyConfig, kernels: &Kernels) -> SuiteResult {
    let mut suite = SuiteResult::new("oracle-agreement");
    let pairs = [
        (AlgorithmId::ExpoSort, CountCase::WorstKnown),
        (AlgorithmId::CubeSort, CountCase::Sorted),
        (AlgorithmId::CubeSort, CountCase::Reverse),
        (AlgorithmId::InsertionSort, CountCase::Sorted),
        (AlgorithmId::InsertionSort, CountCase::Reverse),
        (AlgorithmId::StoogeSort, CountCase::Reverse),
        (AlgorithmId::SlowSort, CountCase::Reverse),
        (AlgorithmId::BogoSort, CountCase::Sorted),
    ];
    for (alg, case) in pairs {
        let table = oracle::count_table(alg, case, config.max_n).expect("closed form exists");
        for (n, expected) in table {
            suite.cases += 1;
            let input = oracle::case_input(case, n as usize);
            let got = kernels.run(alg, &input, config.seed).counters.comparisons;
            suite.check(got == expected, || {
                format!("{alg} {case} n = {n}: {got} comparisons, table says {expected}")
            });
        }
    }
    suite
}
