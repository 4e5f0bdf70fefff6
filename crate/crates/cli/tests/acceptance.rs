//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any criterion fails.

mod common;

use std::time::Instant;

use reluctant_core::conformance::progresses_one_inversion_per_swap;
use reluctant_core::growth::fit;
use reluctant_core::oracle::{
    binomial, count_table, inversion_count, is_permutation_of, is_sorted, permutations,
    traces_equal, words, CountCase,
};
use reluctant_core::rng::{derive_seed, random_permutation, SeededRng};
use reluctant_core::sorts::BOGO_SORT_DEFAULT_SHUFFLE_CAP;
use reluctant_core::{run_sort, AlgorithmId, Element, SortOutcome, SortRun};

use common::{assert_golden, json, reluctant, stdout};

const SEED: u64 = 0x00AC_CE97;

/// Every run made by criteria 1–8 passes through here so criterion 9 can
/// report on all of them.
#[derive(Default)]
struct Contract {
    runs: u64,
    violations: Vec<String>,
}

impl Contract {
    fn run(&mut self, run: SortRun) -> SortOutcome {
        let out = run_sort(&run).unwrap_or_else(|e| panic!("{} failed: {e}", run.algorithm));
        self.runs += 1;
        if !(is_sorted(&out.output) && is_permutation_of(&out.output, &run.input)) {
            self.violations.push(format!(
                "{} on {:?} gave {:?}",
                run.algorithm, run.input, out.output
            ));
        }
        out
    }

    fn sort(&mut self, alg: AlgorithmId, input: Vec<Element>) -> SortOutcome {
        self.run(SortRun::new(alg, input))
    }
}

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn sorted(n: usize) -> Vec<Element> {
    (1..=n as Element).collect()
}

fn reversed(n: usize) -> Vec<Element> {
    (1..=n as Element).rev().collect()
}

fn expo_exponentiality(c: &mut Contract) -> Verdict {
    let mut mismatches = 0;
    let mut runs = 0;
    for n in 1..=20usize {
        let expected = (1u64 << (n - 1)) - 1;
        let mut inputs = vec![sorted(n), reversed(n)];
        inputs.extend((0..50).map(|t| random_permutation(n, derive_seed(SEED, n as u64, t))));
        for input in inputs {
            runs += 1;
            if c.sort(AlgorithmId::ExpoSort, input).counters.comparisons != expected {
                mismatches += 1;
            }
        }
    }

    let bench = reluctant(
        &[
            "bench",
            "--alg",
            "exposort",
            "--case",
            "random",
            "--n-min",
            "10",
            "--n-max",
            "22",
            "--trials",
            "3",
            "--seed",
            "1",
            "--no-timing",
        ],
        "",
    );
    let report = json(&reluctant(&["fit", "--input", "-"], &stdout(&bench)));
    let selected = report["selected"].as_str().unwrap_or("").to_string();
    let base = report["models"]["exponential"]["slope"]
        .as_f64()
        .unwrap_or(f64::NAN)
        .exp2();
    for n in 10..=22usize {
        c.sort(
            AlgorithmId::ExpoSort,
            random_permutation(n, derive_seed(SEED, n as u64, 99)),
        );
    }

    verdict(
        mismatches == 0 && selected == "exponential" && (1.9..=2.1).contains(&base),
        format!(
            "{runs} runs, {mismatches} count mismatches; fit selected {selected}, base {base:.4}"
        ),
    )
}

fn identical_swaps(c: &mut Contract) -> Verdict {
    let mut inputs = 0u64;
    let mut differing = 0u64;
    let same = |input: Vec<Element>, c: &mut Contract| {
        let ins = c.sort(AlgorithmId::InsertionSort, input.clone()).trace;
        let expo = c.sort(AlgorithmId::ExpoSort, input.clone()).trace;
        let cube = c.sort(AlgorithmId::CubeSort, input).trace;
        traces_equal(&expo, &ins) && traces_equal(&cube, &ins)
    };
    for n in 1..=8 {
        for p in permutations(n).unwrap() {
            inputs += 1;
            if !same(p, c) {
                differing += 1;
            }
        }
    }
    let permutation_inputs = inputs;
    for n in 1..=6 {
        for w in words(&[1, 2, 3], n) {
            inputs += 1;
            if !same(w, c) {
                differing += 1;
            }
        }
    }
    verdict(
        permutation_inputs == 46_233 && differing == 0,
        format!(
            "{permutation_inputs} permutations + {} tie inputs, {differing} trace mismatches",
            inputs - permutation_inputs
        ),
    )
}

fn cube_best_case(c: &mut Contract) -> Verdict {
    let mut mismatches = 0;
    let mut series = Vec::new();
    for n in 1..=200usize {
        let comparisons = c
            .sort(AlgorithmId::CubeSort, sorted(n))
            .counters
            .comparisons;
        if comparisons != n as u64 - 1 {
            mismatches += 1;
        }
        if n >= 10 {
            series.push((n as u64, comparisons as f64));
        }
    }
    let slope = fit(&series).map(|r| r.loglog_slope()).unwrap_or(f64::NAN);
    verdict(
        mismatches == 0 && (0.95..=1.05).contains(&slope),
        format!("n = 1..200 exact ({mismatches} mismatches); log-log slope {slope:.4} on 10..200"),
    )
}

fn cube_worst_case(c: &mut Contract) -> Verdict {
    let table = count_table(AlgorithmId::CubeSort, CountCase::Reverse, 400).unwrap();
    let mut mismatches = 0;
    let mut series = Vec::new();
    for (n, from_table) in table {
        let comparisons = c
            .sort(AlgorithmId::CubeSort, reversed(n as usize))
            .counters
            .comparisons;
        if comparisons != (n - 1) + binomial(n, 3) || comparisons != from_table {
            mismatches += 1;
        }
        if n >= 50 {
            series.push((n, comparisons as f64));
        }
    }
    let report = fit(&series).ok();
    let slope = report
        .as_ref()
        .map(|r| r.loglog_slope())
        .unwrap_or(f64::NAN);
    let selected = report.map_or("none", |r| r.selected.name());

    let mut exceeded = 0;
    for n in 1..=8 {
        let worst = (n as u64 - 1) + binomial(n as u64, 3);
        for p in permutations(n).unwrap() {
            if c.sort(AlgorithmId::CubeSort, p).counters.comparisons > worst {
                exceeded += 1;
            }
        }
    }
    verdict(
        mismatches == 0 && (2.8..=3.2).contains(&slope) && exceeded == 0,
        format!(
            "n = 1..400 exact ({mismatches} mismatches); slope {slope:.4} on 50..400 (selected {selected}); \
             {exceeded} permutations above reversed for n <= 8"
        ),
    )
}

fn swap_inversion_law(c: &mut Contract) -> Verdict {
    let mut rng = SeededRng::new(SEED);
    let mut failures = 0;
    let mut runs = 0;
    for alg in [
        AlgorithmId::ExpoSort,
        AlgorithmId::CubeSort,
        AlgorithmId::InsertionSort,
    ] {
        let max_n = if alg == AlgorithmId::ExpoSort { 20 } else { 64 };
        for _ in 0..1000 {
            let n = rng.below(max_n + 1);
            let input: Vec<Element> = (0..n).map(|_| rng.below(41) as Element - 20).collect();
            let out = c.sort(alg, input.clone());
            runs += 1;
            if out.counters.swaps != inversion_count(&input)
                || !progresses_one_inversion_per_swap(&input, &out)
            {
                failures += 1;
            }
        }
    }
    verdict(
        failures == 0,
        format!("{runs} random runs, {failures} violations"),
    )
}

fn expo_beats_slow(c: &mut Contract) -> Verdict {
    let expo_table = count_table(AlgorithmId::ExpoSort, CountCase::WorstKnown, 22).unwrap();
    let slow_table = count_table(AlgorithmId::SlowSort, CountCase::Reverse, 22).unwrap();
    let mut failures = Vec::new();
    for n in 8..=22usize {
        let expo = c
            .sort(AlgorithmId::ExpoSort, reversed(n))
            .counters
            .comparisons;
        let slow = c
            .sort(AlgorithmId::SlowSort, reversed(n))
            .counters
            .comparisons;
        let agree = expo == expo_table[n - 1].1 && slow == slow_table[n - 1].1;
        if !(expo > slow && agree) {
            failures.push(n);
        }
    }
    let last = (expo_table[21].1, slow_table[21].1);
    verdict(
        failures.is_empty(),
        format!(
            "n = 8..22, failing n: {failures:?}; at n = 22 exposort {} vs slowsort {}",
            last.0, last.1
        ),
    )
}

fn stooge_exponent(c: &mut Contract) -> Verdict {
    let series: Vec<(u64, f64)> = [9usize, 27, 81, 243]
        .into_iter()
        .map(|n| {
            (
                n as u64,
                c.sort(AlgorithmId::StoogeSort, reversed(n))
                    .counters
                    .comparisons as f64,
            )
        })
        .collect();
    let report = fit(&series).unwrap();
    let slope = report.loglog_slope();
    let counts: Vec<f64> = series.iter().map(|&(_, c)| c).collect();
    verdict(
        (2.5..=2.9).contains(&slope),
        format!(
            "log-log slope {slope:.4} over n = 9, 27, 81, 243 (counts {counts:?}; \
             selected {})",
            report.selected
        ),
    )
}

fn bogo_expectation(c: &mut Contract) -> Verdict {
    let trials = 500u64;
    let mut total = 0u64;
    for t in 0..trials {
        let run =
            SortRun::new(AlgorithmId::BogoSort, reversed(5)).with_seed(derive_seed(SEED, 5, t));
        let shuffles = c.run(run).counters.shuffles;
        assert!(shuffles <= BOGO_SORT_DEFAULT_SHUFFLE_CAP);
        total += shuffles;
    }
    let mean = total as f64 / trials as f64;
    verdict(
        (90.0..=150.0).contains(&mean),
        format!("mean shuffles {mean:.2} over {trials} trials at n = 5 (analytic 120)"),
    )
}

fn universal_contract(c: &mut Contract) -> Verdict {
    let earlier = c.runs;
    for alg in AlgorithmId::ALL {
        for n in 0..=8 {
            for (i, p) in permutations(n).unwrap().enumerate() {
                c.run(SortRun::new(alg, p).with_seed(derive_seed(SEED, n as u64, i as u64)));
            }
        }
    }
    verdict(
        c.violations.is_empty(),
        format!(
            "{} runs ({earlier} from criteria 1-8, {} exhaustive n <= 8), {} violations {:?}",
            c.runs,
            c.runs - earlier,
            c.violations.len(),
            c.violations.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn interface_stability(_: &mut Contract) -> Verdict {
    let checks = std::panic::catch_unwind(|| {
        let trace = reluctant(&["trace", "--alg", "insertionsort"], "3 2 1");
        assert_golden("trace_insertionsort_321.json", &stdout(&trace));
        let run = reluctant(&["run", "--alg", "bogosort", "--seed", "42"], "3 1 4 5 2");
        assert_golden("run_bogosort_seed42.json", &stdout(&run));
        let bench = reluctant(
            &[
                "bench",
                "--alg",
                "cubesort",
                "--case",
                "sorted",
                "--n-min",
                "2",
                "--n-max",
                "6",
                "--no-timing",
            ],
            "",
        );
        assert_golden("bench_cubesort_sorted.csv", &stdout(&bench));
        let bench = reluctant(
            &[
                "bench",
                "--alg",
                "bogosort",
                "--case",
                "random",
                "--n-min",
                "3",
                "--n-max",
                "5",
                "--trials",
                "3",
                "--seed",
                "7",
                "--no-timing",
            ],
            "",
        );
        assert_golden("bench_bogosort_random_seed7.csv", &stdout(&bench));
        let bench = reluctant(
            &[
                "bench",
                "--alg",
                "exposort",
                "--case",
                "sorted",
                "--n-min",
                "10",
                "--n-max",
                "16",
                "--no-timing",
            ],
            "",
        );
        let fit = reluctant(&["fit", "--input", "-"], &stdout(&bench));
        assert_golden("fit_exposort_10_16.json", &stdout(&fit));
    });
    verdict(
        checks.is_ok(),
        "trace JSON, run JSON, bench CSV and FitReport JSON match golden files",
    )
}

type Criterion = (&'static str, fn(&mut Contract) -> Verdict);

fn main() {
    let criteria: [Criterion; 10] = [
        ("ExpoSort exponentiality", expo_exponentiality),
        ("identical swap sequences", identical_swaps),
        ("CubeSort best case", cube_best_case),
        ("CubeSort worst case", cube_worst_case),
        ("swap/inversion law", swap_inversion_law),
        ("ExpoSort surpasses SlowSort", expo_beats_slow),
        ("StoogeSort exponent", stooge_exponent),
        ("BogoSort expectation", bogo_expectation),
        ("universal sorting contract", universal_contract),
        ("interface stability", interface_stability),
    ];
    let mut contract = Contract::default();
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let v = check(&mut contract);
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} [{status}] {name}: {} ({:.1}s)",
            i + 1,
            v.detail,
            start.elapsed().as_secs_f64()
        );
        if !v.pass {
            failed.push(i + 1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
