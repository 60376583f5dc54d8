//! The six score-to-LLR calibrators: fitting and application.
//!
//! Closed-form fits ([`fit_gaussian_shared`], [`fit_gaussian_separate`]),
//! numerically optimized generative fits ([`fit_t_ml`], [`fit_nig_ml`]),
//! discriminative weighted logistic regression ([`fit_logreg`]), and
//! non-parametric isotonic regression ([`fit_pav`]). All of them produce a
//! [`CalibratorModel`], which maps any finite score to an LLR and survives a
//! lossless JSON round trip.

mod gaussian;
mod logreg;
mod mle;
mod pav;

pub use gaussian::{fit_gaussian_separate, fit_gaussian_shared};
pub use logreg::{fit_logreg, LogRegNll};
pub use mle::{fit_nig_ml, fit_t_ml, NigNll, StudentTNll};
pub use pav::{fit_pav, pav_train_llrs};

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::data::LabeledScores;
use crate::dist::{self, DistError};
use crate::evaluate::LlrSet;
use crate::optim::{OptimError, OptimResult};

#[derive(Debug, Error)]
pub enum CalibError {
    #[error("need at least {need} {class} scores, got {got}")]
    TooFewScores {
        class: &'static str,
        need: usize,
        got: usize,
    },
    #[error("degenerate {class} variance")]
    DegenerateVariance { class: &'static str },
    #[error("target weight alpha = {0} outside (0, 1)")]
    BadAlpha(f64),
    #[error("invalid scores: {0}")]
    BadScores(#[from] crate::data::DataError),
    #[error("fitted {class} parameters invalid: {source}")]
    BadParams {
        class: &'static str,
        source: DistError,
    },
    #[error("NIG fit for {class} scores collapsed to the alpha = |beta| boundary")]
    NigBoundaryCollapse { class: &'static str },
    #[error("optimizer failed on {class} scores: {source}")]
    Optim {
        class: &'static str,
        source: OptimError,
    },
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("cannot access model file {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse model file {path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
}

/// Relative weight of the target class in weighted-ML and logistic fits.
///
/// `DataPrior` is `T / (T + N)`, which reduces weighted ML to plain ML;
/// `Balanced` and `High` are the fixed settings 0.5 and 0.92.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TargetWeight {
    DataPrior,
    Balanced,
    High,
    Fixed(f64),
}

impl TargetWeight {
    pub fn resolve(self, scores: &LabeledScores) -> Result<f64, CalibError> {
        let alpha = match self {
            TargetWeight::DataPrior => {
                let t = scores.targets.len() as f64;
                t / (t + scores.nontargets.len() as f64)
            }
            TargetWeight::Balanced => 0.5,
            TargetWeight::High => 0.92,
            TargetWeight::Fixed(a) => a,
        };
        check_alpha(alpha)?;
        Ok(alpha)
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<(), CalibError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(CalibError::BadAlpha(alpha));
    }
    Ok(())
}

/// A fitted score-to-LLR transform.
///
/// Serialized as JSON with a `type` tag naming the method and a flat map of
/// parameters (`pav` stores parallel `scores`/`llrs` knot arrays). Suffix 1
/// marks target-hypothesis parameters, 2 non-target.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum CalibratorModel {
    #[serde(rename = "gauss-shared")]
    GaussianShared { mu1: f64, mu2: f64, v: f64 },
    #[serde(rename = "gauss-sep")]
    GaussianSeparate { mu1: f64, v1: f64, mu2: f64, v2: f64 },
    #[serde(rename = "t")]
    StudentT {
        mu1: f64,
        sigma1: f64,
        nu1: f64,
        mu2: f64,
        sigma2: f64,
        nu2: f64,
    },
    #[serde(rename = "nig")]
    Nig {
        mu1: f64,
        delta1: f64,
        alpha1: f64,
        beta1: f64,
        mu2: f64,
        delta2: f64,
        alpha2: f64,
        beta2: f64,
    },
    #[serde(rename = "logreg")]
    LinearLogReg { a: f64, b: f64 },
    #[serde(rename = "pav")]
    Pav { scores: Vec<f64>, llrs: Vec<f64> },
}

impl CalibratorModel {
    /// The `type` tag this model serializes under, which is also its CLI
    /// method name.
    pub fn method_name(&self) -> &'static str {
        match self {
            CalibratorModel::GaussianShared { .. } => "gauss-shared",
            CalibratorModel::GaussianSeparate { .. } => "gauss-sep",
            CalibratorModel::StudentT { .. } => "t",
            CalibratorModel::Nig { .. } => "nig",
            CalibratorModel::LinearLogReg { .. } => "logreg",
            CalibratorModel::Pav { .. } => "pav",
        }
    }

    /// Map one score to an LLR.
    pub fn apply(&self, s: f64) -> f64 {
        match *self {
            CalibratorModel::GaussianShared { mu1, mu2, v } => {
                (mu1 - mu2) / v * s + (mu2 * mu2 - mu1 * mu1) / (2.0 * v)
            }
            CalibratorModel::GaussianSeparate { mu1, v1, mu2, v2 } => {
                dist::gauss_logpdf(s, mu1, v1) - dist::gauss_logpdf(s, mu2, v2)
            }
            CalibratorModel::StudentT {
                mu1,
                sigma1,
                nu1,
                mu2,
                sigma2,
                nu2,
            } => dist::t_logpdf(s, mu1, sigma1, nu1) - dist::t_logpdf(s, mu2, sigma2, nu2),
            CalibratorModel::Nig {
                mu1,
                delta1,
                alpha1,
                beta1,
                mu2,
                delta2,
                alpha2,
                beta2,
            } => {
                dist::nig_logpdf(s, mu1, delta1, alpha1, beta1)
                    - dist::nig_logpdf(s, mu2, delta2, alpha2, beta2)
            }
            CalibratorModel::LinearLogReg { a, b } => a * s + b,
            CalibratorModel::Pav {
                ref scores,
                ref llrs,
            } => {
                if s <= scores[0] {
                    return llrs[0];
                }
                let last = scores.len() - 1;
                if s >= scores[last] {
                    return llrs[last];
                }
                let i = scores.partition_point(|&k| k < s);
                let (x0, x1) = (scores[i - 1], scores[i]);
                let w = (s - x0) / (x1 - x0);
                llrs[i - 1] + w * (llrs[i] - llrs[i - 1])
            }
        }
    }

    /// Apply to every score of a labeled set, preserving the split.
    pub fn apply_all(&self, scores: &LabeledScores) -> LlrSet {
        LlrSet {
            targets: scores.targets.iter().map(|&s| self.apply(s)).collect(),
            nontargets: scores.nontargets.iter().map(|&s| self.apply(s)).collect(),
        }
    }

    pub fn validate(&self) -> Result<(), CalibError> {
        let finite = |vals: &[f64], what: &str| {
            if vals.iter().all(|v| v.is_finite()) {
                Ok(())
            } else {
                Err(CalibError::InvalidModel(format!("non-finite {what}")))
            }
        };
        match *self {
            CalibratorModel::GaussianShared { mu1, mu2, v } => {
                finite(&[mu1, mu2, v], "gauss-shared parameter")?;
                if v <= 0.0 {
                    return Err(CalibError::InvalidModel(format!("variance v = {v}")));
                }
            }
            CalibratorModel::GaussianSeparate { mu1, v1, mu2, v2 } => {
                for (mu, v, class) in [(mu1, v1, "target"), (mu2, v2, "non-target")] {
                    dist::GaussianParams::new(mu, v)
                        .map_err(|source| CalibError::BadParams { class, source })?;
                }
            }
            CalibratorModel::StudentT {
                mu1,
                sigma1,
                nu1,
                mu2,
                sigma2,
                nu2,
            } => {
                for (mu, sigma, nu, class) in
                    [(mu1, sigma1, nu1, "target"), (mu2, sigma2, nu2, "non-target")]
                {
                    dist::StudentTParams::new(mu, sigma, nu)
                        .map_err(|source| CalibError::BadParams { class, source })?;
                }
            }
            CalibratorModel::Nig {
                mu1,
                delta1,
                alpha1,
                beta1,
                mu2,
                delta2,
                alpha2,
                beta2,
            } => {
                for (mu, delta, alpha, beta, class) in [
                    (mu1, delta1, alpha1, beta1, "target"),
                    (mu2, delta2, alpha2, beta2, "non-target"),
                ] {
                    dist::NigParams::new(mu, delta, alpha, beta)
                        .map_err(|source| CalibError::BadParams { class, source })?;
                }
            }
            CalibratorModel::LinearLogReg { a, b } => {
                finite(&[a, b], "logreg parameter")?;
            }
            CalibratorModel::Pav {
                ref scores,
                ref llrs,
            } => {
                if scores.is_empty() || scores.len() != llrs.len() {
                    return Err(CalibError::InvalidModel(format!(
                        "pav needs equal non-empty knot arrays, got {} scores and {} llrs",
                        scores.len(),
                        llrs.len()
                    )));
                }
                finite(scores, "pav knot score")?;
                finite(llrs, "pav knot llr")?;
                if scores.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(CalibError::InvalidModel(
                        "pav knot scores must be strictly increasing".into(),
                    ));
                }
                if llrs.windows(2).any(|w| w[0] > w[1]) {
                    return Err(CalibError::InvalidModel(
                        "pav knot llrs must be non-decreasing".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// A numerically fitted model together with its optimizer runs
/// (target-hypothesis run first, non-target second; logistic regression has
/// a single joint run).
#[derive(Clone, Debug)]
pub struct NumericFit {
    pub model: CalibratorModel,
    pub runs: Vec<OptimResult>,
}

/// Write a model as pretty JSON.
pub fn save_model(path: &Path, model: &CalibratorModel) -> Result<(), CalibError> {
    model.validate()?;
    let mut text = serde_json::to_string_pretty(model).map_err(|source| CalibError::Json {
        path: path.display().to_string(),
        source,
    })?;
    text.push('\n');
    std::fs::write(path, text).map_err(|source| CalibError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Read and validate a model written by [`save_model`].
pub fn load_model(path: &Path) -> Result<CalibratorModel, CalibError> {
    let text = std::fs::read_to_string(path).map_err(|source| CalibError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let model: CalibratorModel =
        serde_json::from_str(&text).map_err(|source| CalibError::Json {
            path: path.display().to_string(),
            source,
        })?;
    model.validate()?;
    Ok(model)
}
