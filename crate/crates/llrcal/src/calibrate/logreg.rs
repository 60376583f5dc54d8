//! Discriminatively trained linear calibration (weighted logistic
//! regression).

use super::{check_alpha, CalibError, CalibratorModel, NumericFit};
use crate::data::LabeledScores;
use crate::optim::{bfgs, blocked_sum, BfgsConfig, ScalarObjective};
use crate::scalar::Scalar;
use crate::special::softplus;

/// The weighted logarithmic proper scoring rule for `llr = a*s + b` with
/// prior offset `tau = logit(alpha)`:
///
/// `(alpha/T) * sum_targets softplus(-(a*s + b) - tau)
///  + ((1-alpha)/N) * sum_nontargets softplus((a*s + b) + tau)`
///
/// Convex in `(a, b)`.
pub struct LogRegNll<'a> {
    pub targets: &'a [f64],
    pub nontargets: &'a [f64],
    pub alpha: f64,
}

impl ScalarObjective for LogRegNll<'_> {
    fn dim(&self) -> usize {
        2
    }

    fn eval<S: Scalar>(&self, x: &[S]) -> S {
        let (a, b) = (x[0], x[1]);
        let tau = S::from_f64((self.alpha / (1.0 - self.alpha)).ln());
        let t_sum = blocked_sum(self.targets.len(), |i| {
            softplus(-(a * S::from_f64(self.targets[i]) + b) - tau)
        });
        let n_sum = blocked_sum(self.nontargets.len(), |i| {
            softplus(a * S::from_f64(self.nontargets[i]) + b + tau)
        });
        S::from_f64(self.alpha / self.targets.len() as f64) * t_sum
            + S::from_f64((1.0 - self.alpha) / self.nontargets.len() as f64) * n_sum
    }
}

/// Fit `llr = a*s + b` by minimizing [`LogRegNll`] with BFGS from `(0, 0)`.
///
/// Perfectly separable data makes the objective infimum unattainable; the
/// run then ends with a non-converged status in [`NumericFit::runs`] rather
/// than an error (no regularization is applied).
pub fn fit_logreg(
    scores: &LabeledScores,
    alpha: f64,
    cfg: &BfgsConfig,
) -> Result<NumericFit, CalibError> {
    scores.validate()?;
    check_alpha(alpha)?;
    let obj = LogRegNll {
        targets: &scores.targets,
        nontargets: &scores.nontargets,
        alpha,
    };
    let run = bfgs(&obj, &[0.0, 0.0], cfg).map_err(|source| CalibError::Optim {
        class: "pooled",
        source,
    })?;
    Ok(NumericFit {
        model: CalibratorModel::LinearLogReg {
            a: run.x[0],
            b: run.x[1],
        },
        runs: vec![run],
    })
}
