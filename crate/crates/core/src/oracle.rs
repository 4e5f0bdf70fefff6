//! Brute-force ground truth. Nothing here calls into [`crate::sorts`]: every
//! answer comes from pair scans, enumeration or direct evaluation of the count
//! recurrences, so it can be compared against the instrumented sorts.

use itertools::Itertools;

use crate::algorithm::AlgorithmId;
use crate::instrument::SwapEvent;
use crate::Element;

/// Largest n accepted by [`permutations`] (10! is 3.6 million orderings).
pub const PERMUTATIONS_MAX_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("n = {n} exceeds the oracle limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("no exact count law for {algorithm} on {case} input")]
    NoClosedForm {
        algorithm: AlgorithmId,
        case: CountCase,
    },
}

/// Number of pairs `i < j` with `a[i] > a[j]`, by the quadratic pair scan.
pub fn inversion_count(a: &[Element]) -> u64 {
    let mut count = 0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i] > a[j] {
                count += 1;
            }
        }
    }
    count
}

pub fn is_sorted(a: &[Element]) -> bool {
    a.windows(2).all(|w| w[0] <= w[1])
}

/// Multiset equality.
pub fn is_permutation_of(a: &[Element], b: &[Element]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// All n! orderings of `1..=n`. n = 0 yields the single empty sequence.
pub fn permutations(n: usize) -> Result<impl Iterator<Item = Vec<Element>>, OracleError> {
    if n > PERMUTATIONS_MAX_N {
        return Err(OracleError::TooLarge {
            n,
            limit: PERMUTATIONS_MAX_N,
        });
    }
    Ok((1..=n as Element).permutations(n))
}

/// Every sequence of length `n` over `alphabet`, in lexicographic order of
/// alphabet positions. With duplicates allowed this covers every multiset in
/// every arrangement.
pub fn words(alphabet: &[Element], n: usize) -> Vec<Vec<Element>> {
    if alphabet.is_empty() {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut digits = vec![0usize; n];
    let mut out = Vec::new();
    loop {
        out.push(digits.iter().map(|&d| alphabet[d]).collect());
        // Odometer increment from the right.
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < alphabet.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Same swaps in the same order, ignoring step numbering.
pub fn traces_equal(t1: &[SwapEvent], t2: &[SwapEvent]) -> bool {
    t1.len() == t2.len() && t1.iter().zip(t2).all(|(x, y)| x.key() == y.key())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountCase {
    Sorted,
    Reverse,
    /// The hardest input this crate knows of: reversed for CubeSort,
    /// InsertionSort, StoogeSort and SlowSort; any input for ExpoSort.
    WorstKnown,
}

impl std::fmt::Display for CountCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CountCase::Sorted => "sorted",
            CountCase::Reverse => "reverse",
            CountCase::WorstKnown => "worst-known",
        })
    }
}

/// Largest n for which [`count_table`] will evaluate a recurrence.
pub const COUNT_TABLE_MAX_N: usize = 100_000;

/// Exact comparison counts for n = 1..=n_max by direct evaluation of each
/// algorithm's count recurrence. Fails rather than overflow.
pub fn count_table(
    algorithm: AlgorithmId,
    case: CountCase,
    n_max: usize,
) -> Result<Vec<(u64, u64)>, OracleError> {
    if n_max > COUNT_TABLE_MAX_N {
        return Err(OracleError::TooLarge {
            n: n_max,
            limit: COUNT_TABLE_MAX_N,
        });
    }
    let too_large = |n: usize| OracleError::TooLarge { n, limit: n - 1 };

    // counts[k] holds the count for n = k; slot 0 is n = 0.
    let mut counts: Vec<u64> = vec![0; n_max + 1];
    match algorithm {
        // comp(n) = 2·comp(n−1) + 1, whatever the input.
        AlgorithmId::ExpoSort => {
            for n in 2..=n_max {
                counts[n] = counts[n - 1]
                    .checked_mul(2)
                    .and_then(|c| c.checked_add(1))
                    .ok_or_else(|| too_large(n))?;
            }
        }
        // f₁(n) = f₁(n−1) + 1: prefix call, one failed guard.
        AlgorithmId::CubeSort | AlgorithmId::InsertionSort | AlgorithmId::BogoSort
            if case == CountCase::Sorted =>
        {
            for n in 2..=n_max {
                counts[n] = counts[n - 1] + 1;
            }
        }
        // Reversed CubeSort: f₃(n) = f₃(n−1) + 1 + f₂(n−1), where f₂ is the
        // "sorted prefix, minimum last" case f₂(n) = f₁(n−1) + 1 + f₂(n−1).
        AlgorithmId::CubeSort => {
            let mut min_last = 0u64; // f₂(n−1)
            for n in 2..=n_max {
                let best = n as u64 - 2; // f₁(n−1)
                let f3 = counts[n - 1]
                    .checked_add(1 + min_last)
                    .ok_or_else(|| too_large(n))?;
                counts[n] = f3;
                min_last += best + 1;
            }
        }
        // Reversed InsertionSort: element j walks all the way to the front,
        // spending j−1 successful comparisons and none on the `i > 1` exit.
        AlgorithmId::InsertionSort => {
            for n in 2..=n_max {
                counts[n] = counts[n - 1] + (n as u64 - 1);
            }
        }
        // One comparison per call; the call tree only depends on lengths.
        AlgorithmId::StoogeSort => {
            for n in 2..=n_max {
                counts[n] = if n == 2 {
                    1
                } else {
                    counts[n - n / 3]
                        .checked_mul(3)
                        .and_then(|c| c.checked_add(1))
                        .ok_or_else(|| too_large(n))?
                };
            }
        }
        // c(n) = c(⌈n/2⌉) + c(⌊n/2⌋) + 1 + c(n−1), c(0) = c(1) = 0.
        AlgorithmId::SlowSort => {
            for n in 2..=n_max {
                counts[n] = counts[n.div_ceil(2)]
                    .checked_add(counts[n / 2])
                    .and_then(|c| c.checked_add(1))
                    .and_then(|c| c.checked_add(counts[n - 1]))
                    .ok_or_else(|| too_large(n))?;
            }
        }
        _ => return Err(OracleError::NoClosedForm { algorithm, case }),
    }
    Ok((1..=n_max).map(|n| (n as u64, counts[n])).collect())
}

/// The input [`count_table`] describes for `case` at size n.
pub fn case_input(case: CountCase, n: usize) -> Vec<Element> {
    match case {
        CountCase::Sorted => (1..=n as Element).collect(),
        CountCase::Reverse | CountCase::WorstKnown => (1..=n as Element).rev().collect(),
    }
}

/// n choose k without intermediate overflow for the sizes used here.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inversion_examples() {
        assert_eq!(inversion_count(&[1, 2, 3]), 0);
        assert_eq!(inversion_count(&[3, 2, 1]), 3);
        assert_eq!(inversion_count(&[5, 1, 4, 2, 3]), 6);
        assert_eq!(inversion_count(&[2, 2, 1]), 2);
    }

    #[test]
    fn reverse_inversions_are_n_choose_two() {
        for n in 0..40u64 {
            let a: Vec<Element> = (0..n as Element).rev().collect();
            assert_eq!(inversion_count(&a), n * n.saturating_sub(1) / 2);
        }
    }

    #[test]
    fn sortedness_and_multisets() {
        assert!(is_sorted(&[]));
        assert!(is_sorted(&[1, 1, 2]));
        assert!(!is_sorted(&[2, 1]));
        assert!(is_permutation_of(&[1, 1, 2], &[1, 2, 1]));
        assert!(!is_permutation_of(&[1, 2], &[1, 2, 2]));
        assert!(!is_permutation_of(&[1, 1, 2], &[1, 2, 2]));
    }

    #[test]
    fn permutation_counts() {
        let empty: Vec<Vec<Element>> = permutations(0).unwrap().collect();
        assert_eq!(empty, vec![Vec::<Element>::new()]);
        assert_eq!(permutations(3).unwrap().count(), 6);
        let all: std::collections::HashSet<_> = permutations(8).unwrap().collect();
        assert_eq!(all.len(), 40_320);
        assert!(all
            .iter()
            .all(|p| is_permutation_of(p, &[1, 2, 3, 4, 5, 6, 7, 8])));
        assert!(matches!(
            permutations(11).map(|_| ()),
            Err(OracleError::TooLarge { n: 11, .. })
        ));
    }

    #[test]
    fn words_enumerate_all_sequences() {
        assert_eq!(words(&[1, 2, 3], 0), vec![Vec::<Element>::new()]);
        assert_eq!(words(&[1, 2, 3], 2).len(), 9);
        assert_eq!(words(&[1, 2, 3], 6).len(), 729);
        assert_eq!(
            words(&[1, 2], 2),
            vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]
        );
    }

    #[test]
    fn trace_equality_ignores_step_numbers() {
        assert!(traces_equal(&[], &[]));
        let a = [SwapEvent::adjacent(1, 2, 5, 3)];
        let b = [SwapEvent::adjacent(7, 2, 5, 3)];
        assert!(traces_equal(&a, &b));
        assert!(!traces_equal(&a, &[]));
        assert!(!traces_equal(&a, &[SwapEvent::adjacent(1, 1, 5, 3)]));
    }

    #[test]
    fn cube_sort_tables() {
        assert_eq!(
            count_table(AlgorithmId::CubeSort, CountCase::Sorted, 5).unwrap(),
            vec![(1, 0), (2, 1), (3, 2), (4, 3), (5, 4)]
        );
        let rev = count_table(AlgorithmId::CubeSort, CountCase::Reverse, 4).unwrap();
        assert_eq!(rev.last(), Some(&(4, 7)));
        let worst = count_table(AlgorithmId::CubeSort, CountCase::WorstKnown, 400).unwrap();
        for (n, c) in worst {
            assert_eq!(c, (n - 1) + binomial(n, 3), "n = {n}");
        }
    }

    #[test]
    fn expo_sort_table() {
        let t = count_table(AlgorithmId::ExpoSort, CountCase::Sorted, 4).unwrap();
        assert_eq!(t, vec![(1, 0), (2, 1), (3, 3), (4, 7)]);
        assert!(count_table(AlgorithmId::ExpoSort, CountCase::Reverse, 65).is_ok());
        assert!(matches!(
            count_table(AlgorithmId::ExpoSort, CountCase::Reverse, 66),
            Err(OracleError::TooLarge { n: 66, .. })
        ));
    }

    #[test]
    fn baseline_tables() {
        let stooge = count_table(AlgorithmId::StoogeSort, CountCase::Reverse, 27).unwrap();
        assert_eq!(stooge[8], (9, 121));
        assert_eq!(stooge[26], (27, 3280));
        let slow = count_table(AlgorithmId::SlowSort, CountCase::WorstKnown, 22).unwrap();
        assert_eq!(slow[3], (4, 6));
        assert_eq!(slow[21], (22, 1353));
        let ins = count_table(AlgorithmId::InsertionSort, CountCase::Reverse, 10).unwrap();
        assert_eq!(ins[9], (10, 45));
    }

    #[test]
    fn bogo_sort_only_has_a_sorted_law() {
        assert!(matches!(
            count_table(AlgorithmId::BogoSort, CountCase::Reverse, 4),
            Err(OracleError::NoClosedForm { .. })
        ));
        assert_eq!(
            count_table(AlgorithmId::StoogeSort, CountCase::Sorted, 9).unwrap(),
            count_table(AlgorithmId::StoogeSort, CountCase::Reverse, 9).unwrap()
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(3, 3), 1);
        assert_eq!(binomial(4, 3), 4);
        assert_eq!(binomial(400, 3), 10_586_800);
        assert_eq!(binomial(2, 3), 0);
    }
}
