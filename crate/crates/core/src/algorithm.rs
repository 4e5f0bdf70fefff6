use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The six implemented sorts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgorithmId {
    ExpoSort,
    CubeSort,
    InsertionSort,
    StoogeSort,
    SlowSort,
    BogoSort,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 6] = [
        AlgorithmId::ExpoSort,
        AlgorithmId::CubeSort,
        AlgorithmId::InsertionSort,
        AlgorithmId::StoogeSort,
        AlgorithmId::SlowSort,
        AlgorithmId::BogoSort,
    ];

    /// Lowercase name used on the command line and in every output format.
    pub fn name(self) -> &'static str {
        match self {
            AlgorithmId::ExpoSort => "exposort",
            AlgorithmId::CubeSort => "cubesort",
            AlgorithmId::InsertionSort => "insertionsort",
            AlgorithmId::StoogeSort => "stoogesort",
            AlgorithmId::SlowSort => "slowsort",
            AlgorithmId::BogoSort => "bogosort",
        }
    }

    /// True for the three algorithms that only ever swap neighbours and share
    /// one swap sequence.
    pub fn swaps_adjacent_only(self) -> bool {
        matches!(
            self,
            AlgorithmId::ExpoSort | AlgorithmId::CubeSort | AlgorithmId::InsertionSort
        )
    }

    pub fn is_randomized(self) -> bool {
        self == AlgorithmId::BogoSort
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown algorithm `{0}` (expected one of exposort, cubesort, insertionsort, stoogesort, slowsort, bogosort)")]
pub struct ParseAlgorithmError(pub String);

impl FromStr for AlgorithmId {
    type Err = ParseAlgorithmError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_lowercase();
        AlgorithmId::ALL
            .into_iter()
            .find(|alg| alg.name() == wanted)
            .ok_or_else(|| ParseAlgorithmError(s.to_string()))
    }
}
