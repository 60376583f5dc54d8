//! Labeled score sets: file format, validation, synthetic generation.
//!
//! # Score file format
//!
//! One trial per line, `<label> <score>`, whitespace separated, where label
//! is `tgt` (target, hypothesis H1) or `non` (non-target, H2) and the score
//! is a decimal float. Lines that are blank or start with `#` are ignored.
//! Scores are written with shortest round-trip formatting, so save followed
//! by load is bit-exact. LLR files produced by `apply` use the same format
//! with the score column holding the calibrated LLR.
//!
//! # Synthetic specs
//!
//! [`SyntheticSpec`] is a JSON document naming the two class-conditional
//! distributions, the class counts, and a seed:
//!
//! ```json
//! {
//!   "seed": 42,
//!   "num_targets": 1000,
//!   "num_nontargets": 100000,
//!   "target":    { "family": "gaussian", "mu": 4.0, "v": 9.0 },
//!   "nontarget": { "family": "nig", "mu": 0.0, "delta": 1.0, "alpha": 2.0, "beta": 1.0 }
//! }
//! ```
//!
//! Generation is deterministic in the seed: a single xoshiro256++ stream is
//! seeded from `seed`, all targets are drawn first, then all non-targets.

use crate::dist::{DistError, GaussianParams, NigParams, StudentTParams};
use crate::rng::Xoshiro256pp;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DataError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: non-finite score")]
    NonFinite { line: usize },
    #[error("no scores")]
    NoScores,
    #[error("no {class} scores")]
    EmptyClass { class: &'static str },
    #[error("synthetic spec: {0}")]
    InvalidSpec(#[from] DistError),
    #[error("synthetic spec: {0}")]
    BadSpec(String),
}

/// Scores split by ground-truth hypothesis.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LabeledScores {
    pub targets: Vec<f64>,
    pub nontargets: Vec<f64>,
}

impl LabeledScores {
    pub fn new(targets: Vec<f64>, nontargets: Vec<f64>) -> Result<Self, DataError> {
        let s = LabeledScores {
            targets,
            nontargets,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), DataError> {
        if self.targets.is_empty() && self.nontargets.is_empty() {
            return Err(DataError::NoScores);
        }
        if self.targets.is_empty() {
            return Err(DataError::EmptyClass { class: "target" });
        }
        if self.nontargets.is_empty() {
            return Err(DataError::EmptyClass { class: "non-target" });
        }
        for &s in self.targets.iter().chain(&self.nontargets) {
            if !s.is_finite() {
                return Err(DataError::NonFinite { line: 0 });
            }
        }
        Ok(())
    }

    pub fn total(&self) -> usize {
        self.targets.len() + self.nontargets.len()
    }
}

fn io_err(path: &Path, source: std::io::Error) -> DataError {
    DataError::Io {
        path: path.display().to_string(),
        source,
    }
}

/// Parse a score file. Errors carry 1-based line numbers.
pub fn load_scores(path: impl AsRef<Path>) -> Result<LabeledScores, DataError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    parse_scores(&text)
}

pub fn parse_scores(text: &str) -> Result<LabeledScores, DataError> {
    let mut targets = Vec::new();
    let mut nontargets = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut it = trimmed.split_whitespace();
        let label = it.next().unwrap();
        let value = it.next().ok_or_else(|| DataError::Malformed {
            line,
            reason: "expected '<label> <score>'".into(),
        })?;
        if it.next().is_some() {
            return Err(DataError::Malformed {
                line,
                reason: "trailing fields after score".into(),
            });
        }
        let score: f64 = value.parse().map_err(|_| DataError::Malformed {
            line,
            reason: format!("cannot parse score '{value}'"),
        })?;
        if !score.is_finite() {
            return Err(DataError::NonFinite { line });
        }
        match label {
            "tgt" => targets.push(score),
            "non" => nontargets.push(score),
            other => {
                return Err(DataError::Malformed {
                    line,
                    reason: format!("unknown label '{other}' (expected tgt|non)"),
                })
            }
        }
    }
    LabeledScores::new(targets, nontargets)
}

/// Write a score file: all `tgt` lines first, then all `non` lines, values
/// in shortest round-trip decimal form.
pub fn save_scores(path: impl AsRef<Path>, scores: &LabeledScores) -> Result<(), DataError> {
    let path = path.as_ref();
    scores.validate()?;
    let mut out = String::with_capacity(scores.total() * 16);
    for &s in &scores.targets {
        let _ = writeln!(out, "tgt {s}");
    }
    for &s in &scores.nontargets {
        let _ = writeln!(out, "non {s}");
    }
    std::fs::write(path, out).map_err(|e| io_err(path, e))
}

/// One class-conditional score distribution.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    Gaussian(GaussianParams),
    StudentT(StudentTParams),
    Nig(NigParams),
}

impl Family {
    pub fn validate(&self) -> Result<(), DistError> {
        match self {
            Family::Gaussian(p) => p.validate(),
            Family::StudentT(p) => p.validate(),
            Family::Nig(p) => p.validate(),
        }
    }

    /// Draw one score.
    ///
    /// * Gaussian: `mu + sqrt(v) Z`.
    /// * Student-T: `mu + sigma Z / sqrt(X/nu)`, X chi-square with nu dof.
    /// * NIG: variance-mean mixture `mu + beta V + sqrt(V) Z` with
    ///   `V ~ InverseGaussian(delta/gamma, delta^2)`.
    pub fn sample(&self, rng: &mut Xoshiro256pp) -> f64 {
        match *self {
            Family::Gaussian(GaussianParams { mu, v }) => mu + v.sqrt() * rng.next_normal(),
            Family::StudentT(StudentTParams { mu, sigma, nu }) => {
                let z = rng.next_normal();
                let x = rng.next_chi_square(nu);
                mu + sigma * z / (x / nu).sqrt()
            }
            Family::Nig(NigParams {
                mu,
                delta,
                alpha,
                beta,
            }) => {
                let gamma = (alpha * alpha - beta * beta).sqrt();
                let v = rng.next_inverse_gaussian(delta / gamma, delta * delta);
                mu + beta * v + v.sqrt() * rng.next_normal()
            }
        }
    }
}

/// Recipe for a reproducible synthetic score set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SyntheticSpec {
    pub seed: u64,
    pub num_targets: usize,
    pub num_nontargets: usize,
    pub target: Family,
    pub nontarget: Family,
}

impl SyntheticSpec {
    pub fn validate(&self) -> Result<(), DataError> {
        if self.num_targets == 0 {
            return Err(DataError::BadSpec("num_targets must be positive".into()));
        }
        if self.num_nontargets == 0 {
            return Err(DataError::BadSpec("num_nontargets must be positive".into()));
        }
        self.target.validate()?;
        self.nontarget.validate()?;
        Ok(())
    }
}

/// Generate scores per the spec; deterministic in `spec.seed`.
pub fn generate_synthetic(spec: &SyntheticSpec) -> Result<LabeledScores, DataError> {
    spec.validate()?;
    let mut rng = Xoshiro256pp::new(spec.seed);
    let targets = (0..spec.num_targets)
        .map(|_| spec.target.sample(&mut rng))
        .collect();
    let nontargets = (0..spec.num_nontargets)
        .map(|_| spec.nontarget.sample(&mut rng))
        .collect();
    LabeledScores::new(targets, nontargets)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic_file() {
        let text = "# header comment\ntgt 1.25\nnon -0.5\n\nnon 3e-2\n";
        let s = parse_scores(text).unwrap();
        assert_eq!(s.targets, vec![1.25]);
        assert_eq!(s.nontargets, vec![-0.5, 0.03]);
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = parse_scores("tgt 1.0\nbogus abc\n").unwrap_err();
        match err {
            DataError::Malformed { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_scores("tgt abc\nnon 1.0\n").unwrap_err();
        assert!(matches!(err, DataError::Malformed { line: 1, .. }));
        let err = parse_scores("tgt nan\nnon 1.0\n").unwrap_err();
        assert!(matches!(err, DataError::NonFinite { line: 1 }));
        let err = parse_scores("tgt 1.0 extra\n").unwrap_err();
        assert!(matches!(err, DataError::Malformed { line: 1, .. }));
    }

    #[test]
    fn empty_inputs_are_errors() {
        assert!(matches!(parse_scores(""), Err(DataError::NoScores)));
        assert!(matches!(
            parse_scores("# only a comment\n"),
            Err(DataError::NoScores)
        ));
        assert!(matches!(
            parse_scores("tgt 1.0\n"),
            Err(DataError::EmptyClass { class: "non-target" })
        ));
        assert!(matches!(
            parse_scores("non 1.0\n"),
            Err(DataError::EmptyClass { class: "target" })
        ));
    }

    #[test]
    fn save_load_round_trip_bit_exact() {
        let dir = std::env::temp_dir().join("llrcal-data-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("roundtrip.txt");
        let scores = LabeledScores::new(
            vec![1.0 / 3.0, -2.5e-17, 4.0],
            vec![0.1 + 0.2, f64::MIN_POSITIVE, -1e300],
        )
        .unwrap();
        save_scores(&path, &scores).unwrap();
        let back = load_scores(&path).unwrap();
        assert_eq!(back, scores);
    }

    #[test]
    fn save_to_unwritable_path_errors() {
        let scores = LabeledScores::new(vec![1.0], vec![0.0]).unwrap();
        let err = save_scores("/nonexistent-dir/x/scores.txt", &scores).unwrap_err();
        assert!(matches!(err, DataError::Io { .. }));
    }

    #[test]
    fn generation_is_deterministic() {
        let spec = SyntheticSpec {
            seed: 7,
            num_targets: 50,
            num_nontargets: 200,
            target: Family::Gaussian(GaussianParams { mu: 2.0, v: 1.0 }),
            nontarget: Family::StudentT(StudentTParams {
                mu: 0.0,
                sigma: 1.0,
                nu: 3.0,
            }),
        };
        let a = generate_synthetic(&spec).unwrap();
        let b = generate_synthetic(&spec).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.targets.len(), 50);
        assert_eq!(a.nontargets.len(), 200);
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = SyntheticSpec {
            seed: 42,
            num_targets: 10,
            num_nontargets: 20,
            target: Family::Nig(NigParams {
                mu: 0.0,
                delta: 1.0,
                alpha: 2.0,
                beta: 1.0,
            }),
            nontarget: Family::Gaussian(GaussianParams { mu: 0.0, v: 1.0 }),
        };
        let json = serde_json::to_string_pretty(&spec).unwrap();
        assert!(json.contains("\"family\": \"nig\""));
        let back: SyntheticSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
    }

    #[test]
    fn invalid_specs_rejected() {
        let mut spec = SyntheticSpec {
            seed: 1,
            num_targets: 0,
            num_nontargets: 10,
            target: Family::Gaussian(GaussianParams { mu: 0.0, v: 1.0 }),
            nontarget: Family::Gaussian(GaussianParams { mu: 0.0, v: 1.0 }),
        };
        assert!(generate_synthetic(&spec).is_err());
        spec.num_targets = 10;
        spec.target = Family::Nig(NigParams {
            mu: 0.0,
            delta: 1.0,
            alpha: 1.0,
            beta: 2.0,
        });
        assert!(generate_synthetic(&spec).is_err());
    }
}
