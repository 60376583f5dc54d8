//! Maximum-likelihood fits of the heavy-tailed score families.
//!
//! Both families are fitted per hypothesis by minimizing the mean negative
//! log-likelihood over unconstrained coordinates (positive parameters enter
//! through squares). The per-datum normalization keeps gradient tolerances
//! meaningful at any data size.

use super::gaussian::{mean, ml_variance};
use super::{CalibError, CalibratorModel, NumericFit};
use crate::data::LabeledScores;
use crate::dist::{
    nig_from_unconstrained, nig_logpdf_prefix, t_from_unconstrained, t_logpdf_prefix, NigParams,
    StudentTParams,
};
use crate::optim::{
    bfgs, blocked_sum, subsample_indices, trust_region_newton, BfgsConfig, ScalarObjective,
    TrustRegionConfig,
};
use crate::scalar::Scalar;

/// Mean negative log-likelihood of a Student-T fit, over coordinates
/// `[mu, sqrt(sigma), sqrt(nu)]`.
pub struct StudentTNll<'a> {
    pub scores: &'a [f64],
}

impl ScalarObjective for StudentTNll<'_> {
    fn dim(&self) -> usize {
        3
    }

    fn eval<S: Scalar>(&self, x: &[S]) -> S {
        let (mu, sigma, nu) = t_from_unconstrained(x);
        let pre = t_logpdf_prefix(mu, sigma, nu);
        let total = blocked_sum(self.scores.len(), |i| pre.logpdf(S::from_f64(self.scores[i])));
        -total / S::from_f64(self.scores.len() as f64)
    }

    fn eval_subsampled<S: Scalar>(&self, x: &[S], rho: f64, seed: u64) -> S {
        if rho >= 1.0 {
            return self.eval(x);
        }
        let idx = subsample_indices(self.scores.len(), rho, seed);
        let (mu, sigma, nu) = t_from_unconstrained(x);
        let pre = t_logpdf_prefix(mu, sigma, nu);
        let total = blocked_sum(idx.len(), |i| pre.logpdf(S::from_f64(self.scores[idx[i]])));
        -total / S::from_f64(idx.len() as f64)
    }
}

/// Mean negative log-likelihood of a normal-inverse-Gaussian fit, over
/// coordinates `[mu, sqrt(delta), beta, w]` with `alpha = |beta| + w^2`.
pub struct NigNll<'a> {
    pub scores: &'a [f64],
}

impl ScalarObjective for NigNll<'_> {
    fn dim(&self) -> usize {
        4
    }

    fn eval<S: Scalar>(&self, x: &[S]) -> S {
        let (mu, delta, alpha, beta) = nig_from_unconstrained(x);
        let pre = nig_logpdf_prefix(mu, delta, alpha, beta);
        let total = blocked_sum(self.scores.len(), |i| pre.logpdf(S::from_f64(self.scores[i])));
        -total / S::from_f64(self.scores.len() as f64)
    }

    fn eval_subsampled<S: Scalar>(&self, x: &[S], rho: f64, seed: u64) -> S {
        if rho >= 1.0 {
            return self.eval(x);
        }
        let idx = subsample_indices(self.scores.len(), rho, seed);
        let (mu, delta, alpha, beta) = nig_from_unconstrained(x);
        let pre = nig_logpdf_prefix(mu, delta, alpha, beta);
        let total = blocked_sum(idx.len(), |i| pre.logpdf(S::from_f64(self.scores[idx[i]])));
        -total / S::from_f64(idx.len() as f64)
    }
}

fn require(class: &'static str, len: usize, need: usize) -> Result<(), CalibError> {
    if len < need {
        return Err(CalibError::TooFewScores {
            class,
            need,
            got: len,
        });
    }
    Ok(())
}

fn median_and_iqr(xs: &[f64]) -> (f64, f64) {
    let mut v = xs.to_vec();
    v.sort_unstable_by(f64::total_cmp);
    let n = v.len();
    let median = if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    };
    (median, v[3 * n / 4] - v[n / 4])
}

/// Fit Student-T score models to both hypotheses by BFGS, initialized from
/// the Gaussian moments with `nu = 4`.
pub fn fit_t_ml(scores: &LabeledScores, cfg: &BfgsConfig) -> Result<NumericFit, CalibError> {
    scores.validate()?;
    let mut runs = Vec::with_capacity(2);
    let mut params: Vec<StudentTParams> = Vec::with_capacity(2);
    for (class, xs) in [
        ("target", &scores.targets),
        ("non-target", &scores.nontargets),
    ] {
        require(class, xs.len(), 10)?;
        let m = mean(xs);
        let v = ml_variance(xs, m);
        if !(v > 0.0) {
            return Err(CalibError::DegenerateVariance { class });
        }
        let x0 = [m, v.sqrt().sqrt(), 2.0];
        let run = bfgs(&StudentTNll { scores: xs }, &x0, cfg)
            .map_err(|source| CalibError::Optim { class, source })?;
        params.push(
            StudentTParams::constrain(&run.x)
                .map_err(|source| CalibError::BadParams { class, source })?,
        );
        runs.push(run);
    }
    Ok(NumericFit {
        model: CalibratorModel::StudentT {
            mu1: params[0].mu,
            sigma1: params[0].sigma,
            nu1: params[0].nu,
            mu2: params[1].mu,
            sigma2: params[1].sigma,
            nu2: params[1].nu,
        },
        runs,
    })
}

/// Fit normal-inverse-Gaussian score models to both hypotheses by
/// trust-region Newton. The Hessian subsample fraction from `cfg` applies to
/// the non-target fit only; the (small) target class always uses the exact
/// Hessian. A fit driven onto the `alpha = |beta|` boundary is an error.
pub fn fit_nig_ml(
    scores: &LabeledScores,
    cfg: &TrustRegionConfig,
) -> Result<NumericFit, CalibError> {
    scores.validate()?;
    let target_cfg = TrustRegionConfig {
        hessian_subsample: 1.0,
        ..*cfg
    };
    let mut runs = Vec::with_capacity(2);
    let mut params: Vec<NigParams> = Vec::with_capacity(2);
    for (class, xs, class_cfg) in [
        ("target", &scores.targets, &target_cfg),
        ("non-target", &scores.nontargets, cfg),
    ] {
        require(class, xs.len(), 20)?;
        let (med, iqr) = median_and_iqr(xs);
        let mut delta0 = 0.5 * iqr;
        if !(delta0 > 0.0) {
            let v = ml_variance(xs, mean(xs));
            if !(v > 0.0) {
                return Err(CalibError::DegenerateVariance { class });
            }
            delta0 = v.sqrt();
        }
        let x0 = [med, delta0.sqrt(), 0.0, delta0.recip().sqrt()];
        let run = trust_region_newton(&NigNll { scores: xs }, &x0, class_cfg)
            .map_err(|source| CalibError::Optim { class, source })?;
        let w2 = run.x[3] * run.x[3];
        if w2 <= 1e-10 * (run.x[2].abs() + w2) {
            return Err(CalibError::NigBoundaryCollapse { class });
        }
        params.push(
            NigParams::constrain(&run.x)
                .map_err(|source| CalibError::BadParams { class, source })?,
        );
        runs.push(run);
    }
    Ok(NumericFit {
        model: CalibratorModel::Nig {
            mu1: params[0].mu,
            delta1: params[0].delta,
            alpha1: params[0].alpha,
            beta1: params[0].beta,
            mu2: params[1].mu,
            delta2: params[1].delta,
            alpha2: params[1].alpha,
            beta2: params[1].beta,
        },
        runs,
    })
}
