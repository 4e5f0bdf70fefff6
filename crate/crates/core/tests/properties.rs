use proptest::prelude::*;

use reluctant_core::conformance::progresses_one_inversion_per_swap;
use reluctant_core::oracle::{inversion_count, is_permutation_of, is_sorted, traces_equal};
use reluctant_core::{fit, replay, run_sort, AlgorithmId, Budget, SortError, SortRun, SwapEvent};

fn algorithm() -> impl Strategy<Value = AlgorithmId> {
    prop::sample::select(AlgorithmId::ALL.to_vec())
}

/// Inputs small enough for the algorithm to finish quickly.
fn run_for(alg: AlgorithmId) -> impl Strategy<Value = SortRun> {
    let max_len = match alg {
        AlgorithmId::ExpoSort => 14,
        AlgorithmId::BogoSort => 6,
        AlgorithmId::SlowSort => 40,
        _ => 64,
    };
    (prop::collection::vec(-20i64..20, 0..=max_len), any::<u64>())
        .prop_map(move |(input, seed)| SortRun::new(alg, input).with_seed(seed))
}

fn any_run() -> impl Strategy<Value = SortRun> {
    algorithm().prop_flat_map(run_for)
}

proptest! {
    #[test]
    fn outcome_contract(run in any_run()) {
        let out = run_sort(&run).unwrap();
        prop_assert!(is_sorted(&out.output));
        prop_assert!(is_permutation_of(&out.output, &run.input));
        prop_assert_eq!(out.counters.swaps as usize, out.trace.len());
        // BogoSort rearranges by shuffling, which leaves no swap events.
        if run.algorithm != AlgorithmId::BogoSort {
            prop_assert_eq!(replay(&out.trace, &run.input).unwrap(), out.output.clone());
        }
        for (i, e) in out.trace.iter().enumerate() {
            prop_assert_eq!(e.step, i as u64 + 1);
            prop_assert!(e.larger > e.smaller);
            prop_assert!(e.left >= 1 && e.right() <= run.n());
        }
        if run.algorithm != AlgorithmId::BogoSort {
            prop_assert_eq!(out.counters.shuffles, 0);
        }
    }

    #[test]
    fn adjacent_sorts_follow_the_inversion_law(
        run in prop::sample::select(vec![
            AlgorithmId::ExpoSort, AlgorithmId::CubeSort, AlgorithmId::InsertionSort,
        ]).prop_flat_map(run_for)
    ) {
        let out = run_sort(&run).unwrap();
        prop_assert_eq!(out.counters.swaps, inversion_count(&run.input));
        prop_assert!(out.counters.swaps <= out.counters.comparisons);
        prop_assert!(progresses_one_inversion_per_swap(&run.input, &out));
    }

    #[test]
    fn identical_runs_are_identical(run in any_run()) {
        prop_assert_eq!(run_sort(&run).unwrap(), run_sort(&run).unwrap());
    }

    #[test]
    fn budget_is_never_overrun(run in any_run(), budget in 1u64..200) {
        let run = match run.algorithm {
            AlgorithmId::BogoSort => run.with_budget(Budget {
                max_comparisons: Budget::comparisons(budget).max_comparisons,
                max_shuffles: Budget::shuffles(budget).max_shuffles,
            }),
            _ => run.with_budget(Budget::comparisons(budget)),
        };
        match run_sort(&run) {
            Ok(out) => prop_assert!(out.counters.comparisons <= budget),
            Err(SortError::BudgetExceeded(e)) => prop_assert!(e.counters.comparisons <= budget),
            Err(other) => prop_assert!(false, "unexpected {other:?}"),
        }
    }

    #[test]
    fn counters_grow_with_the_budget(
        run in any_run().prop_filter("deterministic", |r| r.algorithm != AlgorithmId::BogoSort),
        b in 1u64..100,
    ) {
        let at = |limit: u64| match run_sort(&run.clone().with_budget(Budget::comparisons(limit))) {
            Ok(out) => out.counters,
            Err(e) => e.counters().unwrap(),
        };
        let (small, large) = (at(b), at(b + 1));
        prop_assert!(small.comparisons <= large.comparisons);
        prop_assert!(small.swaps <= large.swaps);
        prop_assert!(small.invocations <= large.invocations);
    }

    #[test]
    fn trace_equality_is_an_equivalence(
        events in prop::collection::vec((1usize..5, 1i64..4, 1i64..4), 0..4),
        relabel in any::<u64>(),
    ) {
        let mk = |offset: u64| -> Vec<SwapEvent> {
            events.iter().enumerate()
                .map(|(i, &(left, a, b))| SwapEvent::adjacent(i as u64 + offset, left, a + b, a))
                .collect()
        };
        let (t1, t2, t3) = (mk(1), mk(relabel % 1000), mk(7));
        prop_assert!(traces_equal(&t1, &t1));
        prop_assert_eq!(traces_equal(&t1, &t2), traces_equal(&t2, &t1));
        prop_assert!(traces_equal(&t1, &t2) && traces_equal(&t2, &t3));
        prop_assert!(traces_equal(&t1, &t3));
        let mut t4 = t1.clone();
        if let Some(last) = t4.last_mut() {
            last.left += 1;
            prop_assert!(!traces_equal(&t1, &t4));
            prop_assert!(!traces_equal(&t4, &t1));
        }
    }

    #[test]
    fn fit_selection_is_scale_invariant(
        k in 0.01f64..1000.0,
        start in 2u64..30,
        len in 4u64..40,
        which in 0usize..3,
    ) {
        let counts = |n: u64| match which {
            0 => (n * n) as f64 + 3.0,
            1 => ((n - 1) + n * (n - 1) * (n - 2) / 6) as f64,
            _ => 2f64.powi(n as i32 - 1),
        };
        let series: Vec<(u64, f64)> = (start..start + len).map(|n| (n, counts(n))).collect();
        let scaled: Vec<(u64, f64)> = series.iter().map(|&(n, c)| (n, c * k)).collect();
        let (a, b) = (fit(&series).unwrap(), fit(&scaled).unwrap());
        prop_assert_eq!(a.selected, b.selected);
        for (x, y) in a.models.iter().zip(&b.models) {
            prop_assert!((x.slope - y.slope).abs() < 1e-6);
            prop_assert!((x.rss - y.rss).abs() < 1e-6 * (1.0 + x.rss));
        }
    }
}
