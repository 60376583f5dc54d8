//! Closed-form Gaussian calibrators.

use super::{check_alpha, CalibError, CalibratorModel};
use crate::data::LabeledScores;
use crate::optim::blocked_sum;

pub(crate) fn mean(xs: &[f64]) -> f64 {
    blocked_sum(xs.len(), |i| xs[i]) / xs.len() as f64
}

pub(crate) fn ml_variance(xs: &[f64], m: f64) -> f64 {
    blocked_sum(xs.len(), |i| {
        let d = xs[i] - m;
        d * d
    }) / xs.len() as f64
}

/// Two Gaussians with one shared variance, fitted by weighted ML: class
/// means, and `v = alpha * v1_hat + (1 - alpha) * v2_hat` mixing the
/// per-class ML variances. The resulting score-to-LLR map is linear;
/// `alpha = T / (T + N)` recovers the plain ML fit.
pub fn fit_gaussian_shared(
    scores: &LabeledScores,
    alpha: f64,
) -> Result<CalibratorModel, CalibError> {
    scores.validate()?;
    check_alpha(alpha)?;
    let mu1 = mean(&scores.targets);
    let mu2 = mean(&scores.nontargets);
    let v = alpha * ml_variance(&scores.targets, mu1)
        + (1.0 - alpha) * ml_variance(&scores.nontargets, mu2);
    if !(v > 0.0) {
        return Err(CalibError::DegenerateVariance { class: "pooled" });
    }
    Ok(CalibratorModel::GaussianShared { mu1, mu2, v })
}

/// Two Gaussians with separate variances, fitted by per-class ML (variance
/// denominator is the class count). The score-to-LLR map is quadratic.
pub fn fit_gaussian_separate(scores: &LabeledScores) -> Result<CalibratorModel, CalibError> {
    scores.validate()?;
    for (class, xs) in [
        ("target", &scores.targets),
        ("non-target", &scores.nontargets),
    ] {
        if xs.len() < 2 {
            return Err(CalibError::TooFewScores {
                class,
                need: 2,
                got: xs.len(),
            });
        }
    }
    let mu1 = mean(&scores.targets);
    let v1 = ml_variance(&scores.targets, mu1);
    let mu2 = mean(&scores.nontargets);
    let v2 = ml_variance(&scores.nontargets, mu2);
    for (class, v) in [("target", v1), ("non-target", v2)] {
        if !(v > 0.0) {
            return Err(CalibError::DegenerateVariance { class });
        }
    }
    Ok(CalibratorModel::GaussianSeparate { mu1, v1, mu2, v2 })
}
