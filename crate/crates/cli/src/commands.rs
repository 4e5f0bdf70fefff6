use std::io::Write;
use std::process::ExitCode;

use serde::Deserialize;

use reluctant_core::conformance::{self, VerifyConfig};
use reluctant_core::growth::{self, median_series};
use reluctant_core::oracle::PERMUTATIONS_MAX_N;
use reluctant_core::report::{BudgetDocument, TraceDocument};
use reluctant_core::{run_sort, AlgorithmId, Budget, SortError, SortRun};

use crate::bench::HEADER;
use crate::error::CliError;
use crate::input::read_elements;
use crate::{FitArgs, Metric, SortArgs, VerifyArgs};

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

/// `run` and `trace`. `run` documents also carry the sorted output.
pub fn run(args: &SortArgs, with_output: bool) -> Result<ExitCode, CliError> {
    let algorithm: AlgorithmId = args.alg.parse()?;
    let input = read_elements(args.input.as_deref())?;
    let budget = match (args.budget, algorithm) {
        (None, _) => Budget::UNLIMITED,
        (Some(b), AlgorithmId::BogoSort) => Budget::shuffles(b),
        (Some(b), _) => Budget::comparisons(b),
    };
    let run = SortRun::new(algorithm, input)
        .with_budget(budget)
        .with_seed(args.seed.seed)
        .allow_large(args.i_have_time);

    match run_sort(&run) {
        Ok(outcome) => {
            let doc = TraceDocument::new(&run, &outcome);
            let doc = if with_output {
                doc.with_output(&outcome)
            } else {
                doc
            };
            print_json(&doc)?;
            Ok(ExitCode::SUCCESS)
        }
        Err(SortError::BudgetExceeded(e)) => {
            print_json(&BudgetDocument::new(&run, e.counters))?;
            Err(SortError::BudgetExceeded(e).into())
        }
        Err(e) => Err(e.into()),
    }
}

pub fn verify(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    if args.max_n > PERMUTATIONS_MAX_N {
        return Err(CliError::Usage(format!(
            "--max-n {} is above the exhaustive limit of {PERMUTATIONS_MAX_N}",
            args.max_n
        )));
    }
    let mut config = VerifyConfig::new(args.max_n);
    config.seed = args.seed.seed;
    if let Some(b) = args.bogo_max_n {
        config.bogo_max_n = b.min(args.max_n);
    }

    let results = conformance::run_all(&config);
    let mut out = std::io::stdout().lock();
    writeln!(
        out,
        "{:<20} {:>10} {:>9}  result",
        "suite", "cases", "failures"
    )?;
    for r in &results {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{:<20} {:>10} {:>9}  {verdict}",
            r.name, r.cases, r.failures
        )?;
        for example in &r.examples {
            writeln!(out, "    {example}")?;
        }
    }
    let all = results.iter().all(|r| r.passed());
    writeln!(out, "overall: {}", if all { "PASS" } else { "FAIL" })?;
    Ok(if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Debug, Deserialize)]
struct BenchRow {
    algorithm: String,
    n: u64,
    case: String,
    #[allow(dead_code)]
    trial: u64,
    comparisons: u64,
    swaps: u64,
    invocations: u64,
    shuffles: u64,
    #[allow(dead_code)]
    elapsed_ns: u64,
}

impl BenchRow {
    fn metric(&self, metric: Metric) -> u64 {
        match metric {
            Metric::Comparisons => self.comparisons,
            Metric::Swaps => self.swaps,
            Metric::Invocations => self.invocations,
            Metric::Shuffles => self.shuffles,
        }
    }
}

/// Reads a bench CSV and reduces it to the median `metric` per n.
pub fn read_bench_series(
    reader: impl std::io::Read,
    metric: Metric,
) -> Result<Vec<(u64, f64)>, CliError> {
    let mut csv = csv::Reader::from_reader(reader);
    let header: Vec<String> = csv.headers()?.iter().map(str::to_string).collect();
    if header != HEADER {
        return Err(CliError::Schema(format!(
            "expected header `{}`, found `{}`",
            HEADER.join(","),
            header.join(",")
        )));
    }
    let mut source: Option<(String, String)> = None;
    let mut points = Vec::new();
    for row in csv.deserialize() {
        let row: BenchRow = row?;
        match &source {
            None => source = Some((row.algorithm.clone(), row.case.clone())),
            Some((alg, case)) if *alg != row.algorithm || *case != row.case => {
                return Err(CliError::Schema(format!(
                    "mixed series: {alg}/{case} and {}/{}",
                    row.algorithm, row.case
                )));
            }
            Some(_) => {}
        }
        points.push((row.n, row.metric(metric)));
    }
    Ok(median_series(points))
}

pub fn fit(args: &FitArgs) -> Result<ExitCode, CliError> {
    let series = if args.input.as_os_str() == "-" {
        read_bench_series(std::io::stdin().lock(), args.metric)?
    } else {
        read_bench_series(std::fs::File::open(&args.input)?, args.metric)?
    };
    let report = growth::fit(&series)?;
    print_json(&report)?;
    Ok(ExitCode::SUCCESS)
}
