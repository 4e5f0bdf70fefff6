use serde::Serialize;

use reluctant_core::oracle::traces_equal;
use reluctant_core::report::TraceDocument;
use reluctant_core::rng::{derive_seed, random_permutation};
use reluctant_core::{fit, run_sort, AlgorithmId, CounterSet, Element, FitReport, SortRun};

/// Per-run input limits for [`trace`] and [`compare`]. The page animates
/// every swap, and ExpoSort doubles its work per element.
pub fn trace_limit(alg: AlgorithmId) -> usize {
    match alg {
        AlgorithmId::ExpoSort => 16,
        AlgorithmId::BogoSort => 8,
        AlgorithmId::SlowSort => 24,
        _ => 128,
    }
}

/// Largest n swept by [`curve`]; every point must finish in well under a
/// second in the browser.
pub fn curve_limit(alg: AlgorithmId) -> usize {
    match alg {
        AlgorithmId::ExpoSort => 22,
        AlgorithmId::BogoSort => 8,
        AlgorithmId::SlowSort => 40,
        AlgorithmId::StoogeSort => 300,
        AlgorithmId::CubeSort => 300,
        AlgorithmId::InsertionSort => 2000,
    }
}

pub fn parse_algorithm(name: &str) -> Result<AlgorithmId, String> {
    name.parse()
        .map_err(|e: reluctant_core::ParseAlgorithmError| e.to_string())
}

/// Integers separated by whitespace and/or commas.
pub fn parse_input(text: &str) -> Result<Vec<Element>, String> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse()
                .map_err(|_| format!("`{tok}` is not an integer"))
        })
        .collect()
}

fn check_len(alg: AlgorithmId, n: usize, limit: usize) -> Result<(), String> {
    if n > limit {
        Err(format!("{alg} is limited to n = {limit} here (got {n})"))
    } else {
        Ok(())
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

/// The trace document of one run, sorted output included.
pub fn trace(algorithm: &str, input: &str, seed: u64) -> Result<String, String> {
    let alg = parse_algorithm(algorithm)?;
    let input = parse_input(input)?;
    check_len(alg, input.len(), trace_limit(alg))?;
    let run = SortRun::new(alg, input).with_seed(seed);
    let outcome = run_sort(&run).map_err(|e| e.to_string())?;
    to_json(&TraceDocument::new(&run, &outcome).with_output(&outcome))
}

#[derive(Debug, Serialize)]
struct CurvePoint {
    n: usize,
    #[serde(flatten)]
    counters: CounterSet,
}

#[derive(Debug, Serialize)]
struct Curve {
    algorithm: &'static str,
    case: String,
    points: Vec<CurvePoint>,
    /// Fit of comparisons against n, when there are enough usable points.
    fit: Option<FitReport>,
    /// The selected model's prediction at each fitted n.
    fitted: Vec<(u64, f64)>,
}

fn case_input(case: &str, n: usize, seed: u64) -> Result<Vec<Element>, String> {
    match case {
        "sorted" => Ok((1..=n as Element).collect()),
        "reverse" => Ok((1..=n as Element).rev().collect()),
        "random" => Ok(random_permutation(n, derive_seed(seed, n as u64, 0))),
        other => Err(format!(
            "unknown case `{other}` (expected sorted, reverse or random)"
        )),
    }
}

/// Counters for every n in `n_min..=n_max` on the chosen input family.
pub fn curve(
    algorithm: &str,
    case: &str,
    n_min: usize,
    n_max: usize,
    seed: u64,
) -> Result<String, String> {
    let alg = parse_algorithm(algorithm)?;
    if n_min > n_max {
        return Err(format!("n_min {n_min} exceeds n_max {n_max}"));
    }
    check_len(alg, n_max, curve_limit(alg))?;
    let mut points = Vec::new();
    for n in n_min..=n_max {
        let run =
            SortRun::new(alg, case_input(case, n, seed)?).with_seed(derive_seed(seed, n as u64, 1));
        let outcome = run_sort(&run).map_err(|e| e.to_string())?;
        points.push(CurvePoint {
            n,
            counters: outcome.counters,
        });
    }
    let series: Vec<(u64, f64)> = points
        .iter()
        .filter(|p| p.n >= 2 && p.counters.comparisons > 0)
        .map(|p| (p.n as u64, p.counters.comparisons as f64))
        .collect();
    let report = fit(&series).ok();
    let fitted = report
        .as_ref()
        .map(|r| {
            let m = r.selected_fit();
            series
                .iter()
                .map(|&(n, _)| (n, (m.intercept + m.slope * m.model.ln_predictor(n)).exp()))
                .collect()
        })
        .unwrap_or_default();
    let curve = Curve {
        algorithm: alg.name(),
        case: case.to_string(),
        points,
        fit: report,
        fitted,
    };
    to_json(&curve)
}

#[derive(Debug, Serialize)]
struct Side {
    algorithm: &'static str,
    counters: CounterSet,
    lefts: Vec<usize>,
}

#[derive(Debug, Serialize)]
struct Comparison {
    input: Vec<Element>,
    output: Vec<Element>,
    same_swaps: bool,
    runs: Vec<Side>,
}

/// ExpoSort, CubeSort and InsertionSort on the same input: identical swap
/// sequences, very different comparison counts.
pub fn compare(input: &str) -> Result<String, String> {
    let input = parse_input(input)?;
    check_len(
        AlgorithmId::ExpoSort,
        input.len(),
        trace_limit(AlgorithmId::ExpoSort),
    )?;
    let mut runs = Vec::new();
    let mut outcomes = Vec::new();
    for alg in [
        AlgorithmId::ExpoSort,
        AlgorithmId::CubeSort,
        AlgorithmId::InsertionSort,
    ] {
        let outcome = run_sort(&SortRun::new(alg, input.clone())).map_err(|e| e.to_string())?;
        runs.push(Side {
            algorithm: alg.name(),
            counters: outcome.counters,
            lefts: outcome.trace.iter().map(|e| e.left).collect(),
        });
        outcomes.push(outcome);
    }
    let same_swaps = outcomes
        .windows(2)
        .all(|w| traces_equal(&w[0].trace, &w[1].trace));
    to_json(&Comparison {
        input,
        output: outcomes[0].output.clone(),
        same_swaps,
        runs,
    })
}
