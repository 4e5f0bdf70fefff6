use std::process::ExitCode;
use std::time::Instant;

use reluctant_core::rng::{derive_seed, random_permutation};
use reluctant_core::sorts::EXPO_SORT_UNGUARDED_MAX_N;
use reluctant_core::{run_sort, AlgorithmId, Element, SortRun};

use crate::error::CliError;
use crate::{BenchArgs, BenchCase};

pub const HEADER: [&str; 9] = [
    "algorithm",
    "n",
    "case",
    "trial",
    "comparisons",
    "swaps",
    "invocations",
    "shuffles",
    "elapsed_ns",
];

/// Random inputs and BogoSort shuffles draw from separate streams.
const INPUT_STREAM: u64 = 0x5EED_1A7E_0000_0001;

impl BenchCase {
    fn name(self) -> &'static str {
        match self {
            BenchCase::Sorted => "sorted",
            BenchCase::Reverse => "reverse",
            BenchCase::Random => "random",
        }
    }

    fn input(self, n: usize, seed: u64, trial: u64) -> Vec<Element> {
        match self {
            BenchCase::Sorted => (1..=n as Element).collect(),
            BenchCase::Reverse => (1..=n as Element).rev().collect(),
            BenchCase::Random => {
                random_permutation(n, derive_seed(seed ^ INPUT_STREAM, n as u64, trial))
            }
        }
    }
}

/// Rows come out sorted by n, then trial.
pub fn bench(args: &BenchArgs) -> Result<ExitCode, CliError> {
    let algorithm: AlgorithmId = args.alg.parse()?;
    if args.n_min > args.n_max {
        return Err(CliError::Usage(format!(
            "--n-min {} is larger than --n-max {}",
            args.n_min, args.n_max
        )));
    }
    if algorithm == AlgorithmId::ExpoSort
        && args.n_max > EXPO_SORT_UNGUARDED_MAX_N
        && !args.i_have_time
    {
        return Err(CliError::Usage(format!(
            "exposort with --n-max {} would take ~2^{} comparisons per run; pass --i-have-time to insist",
            args.n_max,
            args.n_max - 1
        )));
    }

    let mut out = csv::Writer::from_writer(std::io::stdout().lock());
    out.write_record(HEADER)?;
    for n in args.n_min..=args.n_max {
        for trial in 0..args.trials {
            let input = args.case.input(n, args.seed.seed, trial);
            let run = SortRun::new(algorithm, input)
                .with_seed(derive_seed(args.seed.seed, n as u64, trial))
                .allow_large(args.i_have_time);
            let start = Instant::now();
            let result = run_sort(&run);
            let elapsed = if args.no_timing {
                0
            } else {
                start.elapsed().as_nanos()
            };
            let outcome = match result {
                Ok(outcome) => outcome,
                Err(e) => {
                    out.flush()?;
                    return Err(e.into());
                }
            };
            let c = outcome.counters;
            out.write_record([
                algorithm.name().to_string(),
                n.to_string(),
                args.case.name().to_string(),
                trial.to_string(),
                c.comparisons.to_string(),
                c.swaps.to_string(),
                c.invocations.to_string(),
                c.shuffles.to_string(),
                elapsed.to_string(),
            ])?;
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}
