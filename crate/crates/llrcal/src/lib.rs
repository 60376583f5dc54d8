//! Calibration of raw binary-detection scores into log-likelihood-ratios.
//!
//! A detector emits a real score for each trial; under hypothesis `H1` the
//! trial is a target, under `H2` a non-target. This crate turns raw scores
//! into calibrated LLRs `log P(s|H1) / P(s|H2)` and measures how well the
//! result supports Bayes decisions across a range of operating points.
//!
//! Six calibrators are provided:
//!
//! | method         | form of the score-to-LLR map                    | fit        |
//! |----------------|--------------------------------------------------|------------|
//! | `gauss-shared` | linear (two Gaussians, one variance)             | closed form|
//! | `gauss-sep`    | quadratic (two Gaussians, separate variances)    | closed form|
//! | `t`            | log-density ratio of two Student-T fits          | BFGS       |
//! | `nig`          | log-density ratio of two normal-inverse-Gaussian | trust region|
//! | `logreg`       | linear, discriminatively trained                 | BFGS       |
//! | `pav`          | monotone step/interpolated (isotonic regression) | PAV        |
//!
//! Calibration quality is reported as the normalized Bayes error-rate curve:
//! actual cost of thresholding the LLRs at `-x` versus the minimum cost any
//! threshold could have achieved, swept over prior log odds `x`.
//!
//! Start with the `examples/` directory; each example is a runnable tour of
//! one capability:
//!
//! * `generate_scores` – synthetic labeled score generation and file I/O
//! * `gaussian_calibration` – linear vs quadratic Gaussian score-to-LLR maps
//! * `logistic_steering` – the target weight alpha and operating-region trade-offs
//! * `heavy_tail_fit` – Student-T and NIG maximum likelihood, parameter recovery
//! * `pav_calibration` – isotonic calibration and its train-time optimality
//! * `bayes_error_curve` – the y / y' sweep and the rule-of-30 region
//! * `method_comparison` – all six calibrators scored on one skewed dataset
//! * `saddle_escape` – the BFGS and trust-region optimizers on test surfaces
//! * `pipeline` – the batch CLI driven end to end in-process
//!
//! The `llrcal` binary exposes the same pipeline as subcommands (`synth`,
//! `train`, `apply`, `eval`, `compare`).

pub mod calibrate;
pub mod cli;
pub mod data;
pub mod dist;
pub mod evaluate;
pub mod optim;
pub mod rng;
pub mod scalar;
pub mod special;

pub use calibrate::{
    fit_gaussian_separate, fit_gaussian_shared, fit_logreg, fit_nig_ml, fit_pav, fit_t_ml,
    load_model, pav_train_llrs, save_model, CalibratorModel, NumericFit, TargetWeight,
};
pub use data::{generate_synthetic, load_scores, save_scores, LabeledScores, SyntheticSpec};
pub use dist::{GaussianParams, NigParams, StudentTParams};
pub use evaluate::{
    bayes_error_at, bayes_error_curve, doddington_range, min_bayes_error_at, write_curve_csv,
    CurvePoint, LlrSet, OperatingPoint,
};
pub use optim::{BfgsConfig, OptimResult, OptimStatus, TrustRegionConfig};
