//! Batch command-line pipeline: `synth`, `train`, `apply`, `eval`,
//! `compare`.
//!
//! Exit codes: 0 success, 2 usage error (bad flags, before any file is
//! touched), 1 runtime error. Diagnostics go to standard error; outputs are
//! deterministic for fixed inputs, flags and seeds.

use std::ffi::OsString;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::calibrate::{
    fit_gaussian_separate, fit_gaussian_shared, fit_logreg, fit_nig_ml, fit_pav, fit_t_ml,
    load_model, save_model, NumericFit, TargetWeight,
};
use crate::data::{generate_synthetic, load_scores, save_scores, LabeledScores, SyntheticSpec};
use crate::evaluate::{
    bayes_error_curve, doddington_range, write_curve_csv, LlrSet, DEFAULT_GRID_POINTS,
    DEFAULT_X_HI, DEFAULT_X_LO,
};
use crate::optim::{BfgsConfig, TrustRegionConfig};

#[derive(Parser)]
#[command(
    name = "llrcal",
    version,
    about = "Score calibration and Bayes error-rate evaluation"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate synthetic labeled scores from a JSON distribution spec
    Synth {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Fit a calibrator to labeled scores and write the model as JSON
    Train {
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Target weight for gauss-shared and logreg
        #[arg(long)]
        alpha: Option<f64>,
        /// Named target weight: data-prior = T/(T+N), balanced = 0.5, high = 0.92
        #[arg(long, value_enum)]
        alpha_preset: Option<PresetArg>,
        /// Hessian subsample fraction for the nig non-target fit
        #[arg(long)]
        hessian_subsample: Option<f64>,
        /// Subsample seed for the nig fit
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        scores: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Map labeled scores through a trained model to labeled LLRs
    Apply {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        scores: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Bayes error-rate curve of a labeled LLR file
    Eval {
        #[arg(long)]
        llrs: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Restrict the grid to the rule-of-30 operating region
        #[arg(long)]
        doddington: bool,
    },
    /// Actual error rates of several LLR files on one shared grid
    Compare {
        #[arg(long, num_args = 1.., required = true)]
        llrs: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum MethodArg {
    GaussShared,
    GaussSep,
    T,
    Nig,
    Logreg,
    Pav,
}

impl MethodArg {
    fn name(self) -> &'static str {
        match self {
            MethodArg::GaussShared => "gauss-shared",
            MethodArg::GaussSep => "gauss-sep",
            MethodArg::T => "t",
            MethodArg::Nig => "nig",
            MethodArg::Logreg => "logreg",
            MethodArg::Pav => "pav",
        }
    }

    fn takes_alpha(self) -> bool {
        matches!(self, MethodArg::GaussShared | MethodArg::Logreg)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PresetArg {
    DataPrior,
    Balanced,
    High,
}

enum RunError {
    Usage(String),
    Runtime(String),
}

impl<E: std::error::Error> From<E> for RunError {
    fn from(e: E) -> Self {
        RunError::Runtime(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> RunError {
    RunError::Usage(msg.into())
}

/// Parse and execute `argv` (including the program name), returning the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.cmd) {
        Ok(()) => 0,
        Err(RunError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(RunError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn execute(cmd: Cmd) -> Result<(), RunError> {
    match cmd {
        Cmd::Synth { spec, out } => synth(&spec, &out),
        Cmd::Train {
            method,
            alpha,
            alpha_preset,
            hessian_subsample,
            seed,
            scores,
            out,
        } => train(
            method,
            alpha,
            alpha_preset,
            hessian_subsample,
            seed,
            &scores,
            &out,
        ),
        Cmd::Apply { model, scores, out } => apply(&model, &scores, &out),
        Cmd::Eval {
            llrs,
            out,
            doddington,
        } => eval(&llrs, &out, doddington),
        Cmd::Compare { llrs, out } => compare(&llrs, &out),
    }
}

fn synth(spec_path: &Path, out: &Path) -> Result<(), RunError> {
    let text = std::fs::read_to_string(spec_path)
        .map_err(|e| RunError::Runtime(format!("cannot read {}: {e}", spec_path.display())))?;
    let spec: SyntheticSpec = serde_json::from_str(&text)
        .map_err(|e| RunError::Runtime(format!("bad spec {}: {e}", spec_path.display())))?;
    let scores = generate_synthetic(&spec)?;
    save_scores(out, &scores)?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn train(
    method: MethodArg,
    alpha: Option<f64>,
    alpha_preset: Option<PresetArg>,
    hessian_subsample: Option<f64>,
    seed: Option<u64>,
    scores_path: &Path,
    out: &Path,
) -> Result<(), RunError> {
    // flag semantics first; no file is touched on a usage error
    if alpha.is_some() && alpha_preset.is_some() {
        return Err(usage("--alpha and --alpha-preset are mutually exclusive"));
    }
    if (alpha.is_some() || alpha_preset.is_some()) && !method.takes_alpha() {
        return Err(usage(format!(
            "method {} takes no target weight; --alpha/--alpha-preset only apply to gauss-shared and logreg",
            method.name()
        )));
    }
    if let Some(a) = alpha {
        if !(a > 0.0 && a < 1.0) {
            return Err(usage(format!("--alpha {a} outside (0, 1)")));
        }
    }
    if let Some(rho) = hessian_subsample {
        if method != MethodArg::Nig {
            return Err(usage("--hessian-subsample only applies to method nig"));
        }
        if !(rho > 0.0 && rho <= 1.0) {
            return Err(usage(format!("--hessian-subsample {rho} outside (0, 1]")));
        }
    }
    if seed.is_some() && method != MethodArg::Nig {
        return Err(usage("--seed only applies to method nig"));
    }

    let weight = match (alpha, alpha_preset) {
        (Some(a), None) => TargetWeight::Fixed(a),
        (None, Some(PresetArg::DataPrior)) | (None, None) => TargetWeight::DataPrior,
        (None, Some(PresetArg::Balanced)) => TargetWeight::Balanced,
        (None, Some(PresetArg::High)) => TargetWeight::High,
        (Some(_), Some(_)) => unreachable!(),
    };

    let scores = load_scores(scores_path)?;
    let model = match method {
        MethodArg::GaussShared => fit_gaussian_shared(&scores, weight.resolve(&scores)?)?,
        MethodArg::GaussSep => fit_gaussian_separate(&scores)?,
        MethodArg::T => warn_runs(fit_t_ml(&scores, &BfgsConfig::default())?),
        MethodArg::Nig => {
            let cfg = TrustRegionConfig {
                hessian_subsample: hessian_subsample.unwrap_or(1.0),
                subsample_seed: seed.unwrap_or(0),
                ..TrustRegionConfig::default()
            };
            warn_runs(fit_nig_ml(&scores, &cfg)?)
        }
        MethodArg::Logreg => warn_runs(fit_logreg(
            &scores,
            weight.resolve(&scores)?,
            &BfgsConfig::default(),
        )?),
        MethodArg::Pav => fit_pav(&scores)?,
    };
    save_model(out, &model)?;
    Ok(())
}

fn warn_runs(fit: NumericFit) -> crate::calibrate::CalibratorModel {
    for (i, run) in fit.runs.iter().enumerate() {
        if !run.converged() {
            eprintln!(
                "warning: fit run {} ended with status {:?} after {} iterations (gradient norm {:.3e})",
                i, run.status, run.iterations, run.gradient_norm
            );
        }
    }
    fit.model
}

fn apply(model_path: &Path, scores_path: &Path, out: &Path) -> Result<(), RunError> {
    let model = load_model(model_path)?;
    let scores = load_scores(scores_path)?;
    let llrs = model.apply_all(&scores);
    save_scores(out, &LabeledScores::new(llrs.targets, llrs.nontargets)?)?;
    Ok(())
}

fn load_llrs(path: &Path) -> Result<LlrSet, RunError> {
    let raw = load_scores(path)?;
    Ok(LlrSet::new(raw.targets, raw.nontargets)?)
}

fn eval(llrs_path: &Path, out: &Path, doddington: bool) -> Result<(), RunError> {
    let llrs = load_llrs(llrs_path)?;
    let mut curve = bayes_error_curve(&llrs, DEFAULT_X_LO, DEFAULT_X_HI, DEFAULT_GRID_POINTS)?;
    if doddington {
        let (lo, hi) = doddington_range(&llrs)?;
        curve.retain(|pt| lo <= pt.x && pt.x <= hi);
        if curve.is_empty() {
            return Err(RunError::Runtime(format!(
                "rule-of-30 region [{lo}, {hi}] contains no grid point"
            )));
        }
    }
    write_curve_csv(out, &curve)?;
    Ok(())
}

fn compare(llr_paths: &[PathBuf], out: &Path) -> Result<(), RunError> {
    let mut header = String::from("x");
    let mut columns: Vec<Vec<f64>> = Vec::new();
    let mut grid: Vec<f64> = Vec::new();
    for path in llr_paths {
        let llrs = load_llrs(path)?;
        let curve = bayes_error_curve(&llrs, DEFAULT_X_LO, DEFAULT_X_HI, DEFAULT_GRID_POINTS)?;
        if grid.is_empty() {
            grid = curve.iter().map(|pt| pt.x).collect();
        }
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        header.push(',');
        header.push_str(&stem);
        columns.push(curve.iter().map(|pt| pt.y_actual).collect());
    }
    let mut buf = header;
    buf.push('\n');
    for (i, x) in grid.iter().enumerate() {
        buf.push_str(&format!("{x:.16e}"));
        for col in &columns {
            buf.push_str(&format!(",{:.16e}", col[i]));
        }
        buf.push('\n');
    }
    let mut file = std::fs::File::create(out)
        .map_err(|e| RunError::Runtime(format!("cannot write {}: {e}", out.display())))?;
    file.write_all(buf.as_bytes())
        .map_err(|e| RunError::Runtime(format!("cannot write {}: {e}", out.display())))?;
    Ok(())
}
