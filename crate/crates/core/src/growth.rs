//! Growth-model fitting for measured `(n, count)` series.
//!
//! Every model `M` has a positive predictor `g_M(n)` for n ≥ 2. A series is
//! scored against `M` by regressing `ln count` on `ln g_M(n)`:
//!
//! * the free least-squares line gives the reported `slope` and `intercept`.
//!   A slope near 1 means the series grows like `g_M`. For [`GrowthModel::Linear`]
//!   the slope is the plain log-log exponent; for [`GrowthModel::Exponential`]
//!   it is `log₂` of the fitted base.
//! * `rss` is the residual sum of squares of the single-scale fit
//!   `ln count = ln c + ln g_M(n)`, i.e. the slope pinned at 1.
//!
//! All residuals live in natural-log count space, so they are comparable
//! across models. The selected model is the smallest `rss`, ties going to the
//! slower-growing model in [`GrowthModel::ALL`] order.

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

/// Exponent of StoogeSort's running time, log₃⁄₂ 3.
pub const STOOGE_EXPONENT: f64 = 2.709_511_291_351_455;

/// Minimum number of points [`fit`] accepts.
pub const MIN_FIT_POINTS: usize = 4;

const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GrowthModel {
    Linear,
    NLogN,
    Quadratic,
    /// n^(log₃⁄₂ 3)
    Stooge,
    Cubic,
    /// n^((log₂ n) / 2)
    QuasiPoly,
    /// 2^n
    Exponential,
    /// n · n!
    LinearFactorial,
}

impl GrowthModel {
    /// Slowest to fastest growth; also the tie-break order.
    pub const ALL: [GrowthModel; 8] = [
        GrowthModel::Linear,
        GrowthModel::NLogN,
        GrowthModel::Quadratic,
        GrowthModel::Stooge,
        GrowthModel::Cubic,
        GrowthModel::QuasiPoly,
        GrowthModel::Exponential,
        GrowthModel::LinearFactorial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GrowthModel::Linear => "linear",
            GrowthModel::NLogN => "nlogn",
            GrowthModel::Quadratic => "quadratic",
            GrowthModel::Stooge => "stooge",
            GrowthModel::Cubic => "cubic",
            GrowthModel::QuasiPoly => "quasipoly",
            GrowthModel::Exponential => "exponential",
            GrowthModel::LinearFactorial => "linear_factorial",
        }
    }

    pub fn from_name(name: &str) -> Option<GrowthModel> {
        GrowthModel::ALL.into_iter().find(|m| m.name() == name)
    }

    /// `ln g(n)`. Defined and finite for n ≥ 2.
    pub fn ln_predictor(self, n: u64) -> f64 {
        let x = n as f64;
        let ln = x.ln();
        match self {
            GrowthModel::Linear => ln,
            GrowthModel::NLogN => ln + ln.ln(),
            GrowthModel::Quadratic => 2.0 * ln,
            GrowthModel::Stooge => STOOGE_EXPONENT * ln,
            GrowthModel::Cubic => 3.0 * ln,
            GrowthModel::QuasiPoly => ln * ln / (2.0 * std::f64::consts::LN_2),
            GrowthModel::Exponential => x * std::f64::consts::LN_2,
            GrowthModel::LinearFactorial => ln + ln_factorial(n),
        }
    }
}

impl std::fmt::Display for GrowthModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn ln_factorial(n: u64) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelFit {
    pub model: GrowthModel,
    pub slope: f64,
    pub intercept: f64,
    pub rss: f64,
}

impl ModelFit {
    /// Growth exponent implied by the free fit, for the power-law models.
    pub fn exponent(&self) -> Option<f64> {
        let p = match self.model {
            GrowthModel::Linear => 1.0,
            GrowthModel::Quadratic => 2.0,
            GrowthModel::Stooge => STOOGE_EXPONENT,
            GrowthModel::Cubic => 3.0,
            _ => return None,
        };
        Some(self.slope * p)
    }

    /// Base `b` of the free fit `count ≈ c · bⁿ`, for the exponential model.
    pub fn base(&self) -> Option<f64> {
        (self.model == GrowthModel::Exponential).then(|| self.slope.exp2())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    pub series: Vec<(u64, f64)>,
    /// One entry per model, in [`GrowthModel::ALL`] order.
    pub models: Vec<ModelFit>,
    pub selected: GrowthModel,
}

impl FitReport {
    pub fn model(&self, model: GrowthModel) -> &ModelFit {
        self.models
            .iter()
            .find(|m| m.model == model)
            .expect("every model is fitted")
    }

    pub fn selected_fit(&self) -> &ModelFit {
        self.model(self.selected)
    }

    /// Slope of `ln count` against `ln n`.
    pub fn loglog_slope(&self) -> f64 {
        self.model(GrowthModel::Linear).slope
    }

    pub fn exponential_base(&self) -> f64 {
        self.model(GrowthModel::Exponential).slope.exp2()
    }
}

// {"series": [[n, count], ...], "models": {"<name>": {"slope", "intercept", "rss"}}, "selected": "<name>"}
impl Serialize for FitReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Models<'a>(&'a [ModelFit]);
        struct Entry<'a>(&'a ModelFit);

        impl Serialize for Models<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for fit in self.0 {
                    map.serialize_entry(fit.model.name(), &Entry(fit))?;
                }
                map.end()
            }
        }

        impl Serialize for Entry<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut s = serializer.serialize_struct("ModelFit", 3)?;
                s.serialize_field("slope", &self.0.slope)?;
                s.serialize_field("intercept", &self.0.intercept)?;
                s.serialize_field("rss", &self.0.rss)?;
                s.end()
            }
        }

        let mut s = serializer.serialize_struct("FitReport", 3)?;
        s.serialize_field("series", &self.series)?;
        s.serialize_field("models", &Models(&self.models))?;
        s.serialize_field("selected", self.selected.name())?;
        s.end()
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GrowthError {
    #[error("degenerate series: {0}")]
    DegenerateSeries(String),
}

fn degenerate(msg: impl Into<String>) -> GrowthError {
    GrowthError::DegenerateSeries(msg.into())
}

fn check_counts(series: &[(u64, f64)]) -> Result<(), GrowthError> {
    for &(n, count) in series {
        if !(count.is_finite() && count > 0.0) {
            return Err(degenerate(format!(
                "count at n = {n} is {count}, not positive"
            )));
        }
    }
    Ok(())
}

/// Fits `series` against every [`GrowthModel`].
///
/// Needs at least four points, every n ≥ 2 and strictly increasing, and
/// every count positive.
pub fn fit(series: &[(u64, f64)]) -> Result<FitReport, GrowthError> {
    if series.len() < MIN_FIT_POINTS {
        return Err(degenerate(format!(
            "{} points, need at least {MIN_FIT_POINTS}",
            series.len()
        )));
    }
    if series[0].0 < 2 {
        return Err(degenerate("n must be at least 2"));
    }
    if series.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(degenerate("n must be strictly increasing"));
    }
    check_counts(series)?;

    let y: Vec<f64> = series.iter().map(|&(_, c)| c.ln()).collect();
    let models: Vec<ModelFit> = GrowthModel::ALL
        .into_iter()
        .map(|model| {
            let x: Vec<f64> = series.iter().map(|&(n, _)| model.ln_predictor(n)).collect();
            let (slope, intercept) = least_squares(&x, &y);
            ModelFit {
                model,
                slope,
                intercept,
                rss: single_scale_rss(&x, &y),
            }
        })
        .collect();

    let mut best = &models[0];
    for candidate in &models[1..] {
        if candidate.rss < best.rss - TIE_TOLERANCE {
            best = candidate;
        }
    }
    let selected = best.model;
    Ok(FitReport {
        series: series.to_vec(),
        models,
        selected,
    })
}

/// Ordinary least squares of `y` on `x`, returning `(slope, intercept)`.
fn least_squares(x: &[f64], y: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mean_x = x.iter().sum::<f64>() / n;
    let mean_y = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (xi, yi) in x.iter().zip(y) {
        sxy += (xi - mean_x) * (yi - mean_y);
        sxx += (xi - mean_x) * (xi - mean_x);
    }
    let slope = sxy / sxx;
    (slope, mean_y - slope * mean_x)
}

/// Residuals of `y = c + x` with the best constant `c`.
fn single_scale_rss(x: &[f64], y: &[f64]) -> f64 {
    let r: Vec<f64> = x.iter().zip(y).map(|(xi, yi)| yi - xi).collect();
    let mean = r.iter().sum::<f64>() / r.len() as f64;
    r.iter().map(|ri| (ri - mean) * (ri - mean)).sum()
}

/// Successive ratios `count(n) / count(n − 1)`; n values must be consecutive.
pub fn ratio_diagnostic(series: &[(u64, f64)]) -> Result<Vec<(u64, f64)>, GrowthError> {
    if series.len() < 2 {
        return Err(degenerate("need at least two consecutive points"));
    }
    if series.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
        return Err(degenerate("n values must be consecutive"));
    }
    check_counts(series)?;
    Ok(series
        .windows(2)
        .map(|w| (w[1].0, w[1].1 / w[0].1))
        .collect())
}

/// Collapses repeated trials into one point per n using the median count.
pub fn median_series(points: impl IntoIterator<Item = (u64, u64)>) -> Vec<(u64, f64)> {
    let mut by_n: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for (n, count) in points {
        by_n.entry(n).or_default().push(count);
    }
    by_n.into_iter()
        .map(|(n, mut counts)| {
            counts.sort_unstable();
            let mid = counts.len() / 2;
            let median = if counts.len() % 2 == 1 {
                counts[mid] as f64
            } else {
                (counts[mid - 1] as f64 + counts[mid] as f64) / 2.0
            };
            (n, median)
        })
        .collect()
}
