//! Normalized Bayes error-rate evaluation of LLR sets.
//!
//! An operating point is a prior log-odds `x`; the Bayes threshold for a
//! well-calibrated LLR is `theta = -x`. The actual cost `y` divides the
//! prior-weighted miss/false-alarm mix at that threshold by the cost of the
//! better default decision, `min(p, 1-p)`; the minimum cost `y'` takes the
//! best threshold in hindsight. A calibration is good where `y` hugs `y'`,
//! and `y'` itself is a property of the scores alone.
//!
//! Counting is exact: both `y` and `y'` are computed from integer miss and
//! false-alarm counts through one shared cost expression, so a system whose
//! LLR thresholds cut the data at the optimal places reproduces `y == y'`
//! bit for bit. Ties `llr == theta` count as rejections everywhere.

use std::io::Write as _;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("no {class} LLRs")]
    EmptyClass { class: &'static str },
    #[error("non-finite LLR in {class} set")]
    NonFinite { class: &'static str },
    #[error("Doddington rule of 30 needs at least 30 {class} trials, got {got}")]
    TooFewTrials { class: &'static str, got: usize },
    #[error("no operating point satisfies the rule of 30")]
    EmptyDoddingtonInterval,
    #[error("bad grid: {0}")]
    BadGrid(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// LLR scores split by ground truth.
#[derive(Clone, Debug, PartialEq)]
pub struct LlrSet {
    pub targets: Vec<f64>,
    pub nontargets: Vec<f64>,
}

impl LlrSet {
    pub fn new(targets: Vec<f64>, nontargets: Vec<f64>) -> Result<Self, EvalError> {
        let set = LlrSet {
            targets,
            nontargets,
        };
        set.validate()?;
        Ok(set)
    }

    pub fn validate(&self) -> Result<(), EvalError> {
        for (class, v) in [("target", &self.targets), ("non-target", &self.nontargets)] {
            if v.is_empty() {
                return Err(EvalError::EmptyClass { class });
            }
            if v.iter().any(|x| !x.is_finite()) {
                return Err(EvalError::NonFinite { class });
            }
        }
        Ok(())
    }
}

/// A prior log-odds `x` with its synthetic prior `p = 1/(1+e^-x)` and Bayes
/// threshold `theta = -x`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OperatingPoint {
    pub x: f64,
    pub p: f64,
    pub theta: f64,
}

impl OperatingPoint {
    pub fn new(x: f64) -> Self {
        OperatingPoint {
            x,
            p: 1.0 / (1.0 + (-x).exp()),
            theta: -x,
        }
    }
}

/// One evaluated grid point of a Bayes error-rate curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvePoint {
    pub x: f64,
    pub p: f64,
    pub y_actual: f64,
    pub y_min: f64,
    pub p_miss: f64,
    pub p_fa: f64,
}

pub const DEFAULT_X_LO: f64 = -10.0;
pub const DEFAULT_X_HI: f64 = 6.0;
pub const DEFAULT_GRID_POINTS: usize = 321;

fn count_le(sorted: &[f64], theta: f64) -> usize {
    sorted.partition_point(|&v| v <= theta)
}

/// Prior-weighted error mix at integer counts, normalized by the default
/// decision. Single source of truth for both `y` and `y'`.
fn normalized_cost(p: f64, miss: usize, t: usize, fa: usize, n: usize) -> f64 {
    let p_miss = miss as f64 / t as f64;
    let p_fa = fa as f64 / n as f64;
    (p * p_miss + (1.0 - p) * p_fa) / p.min(1.0 - p)
}

/// Sorted data plus the convex hull of achievable (miss, fa) count pairs;
/// every prior's optimal threshold lands on a hull vertex.
struct Tallies {
    tgt: Vec<f64>,
    non: Vec<f64>,
    hull: Vec<(usize, usize)>,
}

impl Tallies {
    fn build(llrs: &LlrSet) -> Self {
        let mut tgt = llrs.targets.clone();
        let mut non = llrs.nontargets.clone();
        tgt.sort_unstable_by(f64::total_cmp);
        non.sort_unstable_by(f64::total_cmp);

        // (miss, fa) for every cut position: below all values, then after
        // each distinct pooled value
        let mut cuts: Vec<(usize, usize)> = Vec::new();
        cuts.push((0, non.len()));
        let (mut i, mut j) = (0, 0);
        while i < tgt.len() || j < non.len() {
            let v = match (tgt.get(i), non.get(j)) {
                (Some(&a), Some(&b)) => a.min(b),
                (Some(&a), None) => a,
                (None, Some(&b)) => b,
                (None, None) => unreachable!(),
            };
            while i < tgt.len() && tgt[i] == v {
                i += 1;
            }
            while j < non.len() && non[j] == v {
                j += 1;
            }
            cuts.push((i, non.len() - j));
        }

        // lower convex hull in the (fa, miss) plane; cuts already arrive
        // with fa strictly decreasing and miss non-decreasing, so walk them
        // reversed and keep right turns (integer cross products, exact)
        let mut hull: Vec<(usize, usize)> = Vec::new();
        for &(miss, fa) in cuts.iter().rev() {
            while hull.len() >= 2 {
                let (m1, f1) = hull[hull.len() - 2];
                let (m2, f2) = hull[hull.len() - 1];
                let cross = (f2 as i128 - f1 as i128) * (miss as i128 - m1 as i128)
                    - (m2 as i128 - m1 as i128) * (fa as i128 - f1 as i128);
                if cross <= 0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push((miss, fa));
        }
        Tallies { tgt, non, hull }
    }

    fn counts_at(&self, theta: f64) -> (usize, usize) {
        let miss = count_le(&self.tgt, theta);
        let fa = self.non.len() - count_le(&self.non, theta);
        (miss, fa)
    }

    fn actual(&self, op: OperatingPoint) -> f64 {
        let (miss, fa) = self.counts_at(op.theta);
        normalized_cost(op.p, miss, self.tgt.len(), fa, self.non.len())
    }

    fn minimum(&self, op: OperatingPoint) -> f64 {
        self.best_vertex(op).0
    }

    /// (cost, miss, fa) of the best hull vertex; exact cost ties break
    /// toward the vertex with the larger min(miss, fa).
    fn best_vertex(&self, op: OperatingPoint) -> (f64, usize, usize) {
        let mut best = (f64::INFINITY, 0usize, 0usize);
        for &(miss, fa) in &self.hull {
            let c = normalized_cost(op.p, miss, self.tgt.len(), fa, self.non.len());
            if c < best.0 || (c == best.0 && miss.min(fa) > best.1.min(best.2)) {
                best = (c, miss, fa);
            }
        }
        best
    }
}

/// Fraction of target LLRs at or below `theta`, and of non-target LLRs
/// above it.
pub fn error_rates_at_threshold(llrs: &LlrSet, theta: f64) -> (f64, f64) {
    let mut tgt = llrs.targets.clone();
    let mut non = llrs.nontargets.clone();
    tgt.sort_unstable_by(f64::total_cmp);
    non.sort_unstable_by(f64::total_cmp);
    let miss = count_le(&tgt, theta);
    let fa = non.len() - count_le(&non, theta);
    (miss as f64 / tgt.len() as f64, fa as f64 / non.len() as f64)
}

/// Actual normalized Bayes error rate at prior log-odds `x`, thresholding
/// at `theta = -x`.
pub fn bayes_error_at(llrs: &LlrSet, x: f64) -> f64 {
    Tallies::build(llrs).actual(OperatingPoint::new(x))
}

/// Minimum normalized Bayes error rate at prior log-odds `x` over every
/// possible threshold (including accept-all and reject-all).
pub fn min_bayes_error_at(llrs: &LlrSet, x: f64) -> f64 {
    Tallies::build(llrs).minimum(OperatingPoint::new(x))
}

/// Evaluate `y` and `y'` on a uniform grid of prior log-odds.
pub fn bayes_error_curve(
    llrs: &LlrSet,
    x_lo: f64,
    x_hi: f64,
    n_points: usize,
) -> Result<Vec<CurvePoint>, EvalError> {
    llrs.validate()?;
    if !(x_lo.is_finite() && x_hi.is_finite() && x_lo < x_hi) {
        return Err(EvalError::BadGrid(format!(
            "need finite x_lo < x_hi, got [{x_lo}, {x_hi}]"
        )));
    }
    if n_points < 2 {
        return Err(EvalError::BadGrid(format!(
            "need at least 2 grid points, got {n_points}"
        )));
    }
    let tallies = Tallies::build(llrs);
    let step = (x_hi - x_lo) / (n_points - 1) as f64;
    let mut out = Vec::with_capacity(n_points);
    for i in 0..n_points {
        let x = if i + 1 == n_points {
            x_hi
        } else {
            x_lo + step * i as f64
        };
        let op = OperatingPoint::new(x);
        let (miss, fa) = tallies.counts_at(op.theta);
        out.push(CurvePoint {
            x,
            p: op.p,
            y_actual: normalized_cost(op.p, miss, tallies.tgt.len(), fa, tallies.non.len()),
            y_min: tallies.minimum(op),
            p_miss: miss as f64 / tallies.tgt.len() as f64,
            p_fa: fa as f64 / tallies.non.len() as f64,
        });
    }
    Ok(out)
}

const DODDINGTON_X_LO: f64 = -20.0;
const DODDINGTON_X_HI: f64 = 20.0;
const DODDINGTON_STEP: f64 = 0.01;
const RULE_OF_30: usize = 30;

/// Operating-point interval where the rule of 30 holds: at the minimizing
/// threshold, at least 30 misses and 30 false alarms. Scans x in steps of
/// 0.01 over [-20, 20] and returns the longest contiguous interval.
pub fn doddington_range(llrs: &LlrSet) -> Result<(f64, f64), EvalError> {
    llrs.validate()?;
    for (class, len) in [
        ("target", llrs.targets.len()),
        ("non-target", llrs.nontargets.len()),
    ] {
        if len < RULE_OF_30 {
            return Err(EvalError::TooFewTrials { class, got: len });
        }
    }
    let tallies = Tallies::build(llrs);
    let steps = ((DODDINGTON_X_HI - DODDINGTON_X_LO) / DODDINGTON_STEP).round() as usize;

    let mut best_run: Option<(usize, usize)> = None;
    let mut run_start: Option<usize> = None;
    for i in 0..=steps {
        let x = DODDINGTON_X_LO + DODDINGTON_STEP * i as f64;
        let (_, miss, fa) = tallies.best_vertex(OperatingPoint::new(x));
        let ok = miss >= RULE_OF_30 && fa >= RULE_OF_30;
        if ok && run_start.is_none() {
            run_start = Some(i);
        }
        if (!ok || i == steps) && run_start.is_some() {
            let start = run_start.take().unwrap();
            let end = if ok { i } else { i - 1 };
            if best_run.is_none_or(|(s, e)| end - start > e - s) {
                best_run = Some((start, end));
            }
        }
    }
    let (s, e) = best_run.ok_or(EvalError::EmptyDoddingtonInterval)?;
    Ok((
        DODDINGTON_X_LO + DODDINGTON_STEP * s as f64,
        DODDINGTON_X_LO + DODDINGTON_STEP * e as f64,
    ))
}

/// Write curve points as CSV, 17 significant digits per value.
pub fn write_curve_csv(path: &Path, points: &[CurvePoint]) -> Result<(), EvalError> {
    let io_err = |source| EvalError::Io {
        path: path.display().to_string(),
        source,
    };
    let mut buf = String::from("x,p,y_actual,y_min,p_miss,p_fa\n");
    for pt in points {
        buf.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}\n",
            pt.x, pt.p, pt.y_actual, pt.y_min, pt.p_miss, pt.p_fa
        ));
    }
    let mut file = std::fs::File::create(path).map_err(io_err)?;
    file.write_all(buf.as_bytes()).map_err(io_err)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(t: &[f64], n: &[f64]) -> LlrSet {
        LlrSet::new(t.to_vec(), n.to_vec()).unwrap()
    }

    #[test]
    fn error_rates_tie_counts_as_rejection() {
        let (pm, pf) = error_rates_at_threshold(&set(&[2.0, 2.0], &[-2.0, -2.0]), 0.0);
        assert_eq!((pm, pf), (0.0, 0.0));

        let (pm, pf) = error_rates_at_threshold(&set(&[-1.0, 1.0], &[-1.0, 1.0]), 0.0);
        assert_eq!((pm, pf), (0.5, 0.5));

        let (pm, pf) = error_rates_at_threshold(&set(&[-1.0, 1.0], &[-1.0, 1.0]), 1.0);
        assert_eq!((pm, pf), (1.0, 0.0), "llr == theta rejects");

        let (pm, pf) = error_rates_at_threshold(&set(&[-1.0, 1.0], &[-1.0, 1.0]), -9.0);
        assert_eq!((pm, pf), (0.0, 1.0), "threshold below all accepts all");
    }

    #[test]
    fn bayes_error_hand_counts() {
        assert_eq!(bayes_error_at(&set(&[2.0, 3.0], &[-2.0, -1.0]), 0.0), 0.0);
        let even = set(&[-1.0, 1.0], &[-1.0, 1.0]);
        assert_eq!(bayes_error_at(&even, 0.0), 1.0);
        let x = 9.0f64.ln();
        assert!((bayes_error_at(&even, x) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn min_bayes_error_enumerates_thresholds() {
        assert_eq!(min_bayes_error_at(&set(&[2.0, 3.0], &[0.0, 1.0]), 0.0), 0.0);
        // reversed classes: best is a default decision, cost 0.5 / 0.5
        assert_eq!(min_bayes_error_at(&set(&[0.0], &[1.0]), 0.0), 1.0);
        let s = set(&[-1.0, 1.0, 2.0], &[-2.0, -1.0, 0.5]);
        for x in [-2.0, -0.5, 0.0, 0.7, 3.0] {
            assert!(min_bayes_error_at(&s, x) <= bayes_error_at(&s, x) + 1e-15);
        }
    }

    #[test]
    fn minimum_never_exceeds_default_decision() {
        let s = set(&[0.4, -0.2, 1.7], &[2.0, 0.1, -0.3, 0.9]);
        for i in -40..=40 {
            let y = min_bayes_error_at(&s, i as f64 * 0.25);
            assert!(y <= 1.0 + 1e-15, "y' = {y}");
        }
    }

    #[test]
    fn curve_grid_endpoints_exact() {
        let s = set(&[1.0, 2.0], &[-1.0, 0.5]);
        let c = bayes_error_curve(&s, -10.0, 6.0, 321).unwrap();
        assert_eq!(c.len(), 321);
        assert_eq!(c[0].x, -10.0);
        assert_eq!(c[320].x, 6.0);
        for pt in &c {
            assert!(pt.y_min <= pt.y_actual + 1e-15);
            assert!((pt.p - 1.0 / (1.0 + (-pt.x).exp())).abs() < 1e-15);
        }
    }

    #[test]
    fn y_min_invariant_under_increasing_transform() {
        let s = set(&[0.3, -0.4, 1.2, 0.8], &[-1.0, 0.2, -0.1, 0.6]);
        let warped = LlrSet::new(
            s.targets.iter().map(|v| 2.0 * v + 1.0).collect(),
            s.nontargets.iter().map(|v| 2.0 * v + 1.0).collect(),
        )
        .unwrap();
        let a = bayes_error_curve(&s, -4.0, 4.0, 33).unwrap();
        let b = bayes_error_curve(&warped, -4.0, 4.0, 33).unwrap();
        for (pa, pb) in a.iter().zip(&b) {
            assert_eq!(pa.y_min, pb.y_min);
        }
    }

    #[test]
    fn curve_rejects_bad_grids() {
        let s = set(&[1.0], &[0.0]);
        assert!(bayes_error_curve(&s, 3.0, -3.0, 10).is_err());
        assert!(bayes_error_curve(&s, -3.0, 3.0, 1).is_err());
        assert!(bayes_error_curve(&s, f64::NAN, 3.0, 10).is_err());
    }

    #[test]
    fn doddington_demands_thirty_per_class() {
        let t: Vec<f64> = (0..29).map(|i| i as f64 * 0.1).collect();
        let n: Vec<f64> = (0..100).map(|i| -(i as f64) * 0.1).collect();
        let err = doddington_range(&LlrSet::new(t, n).unwrap()).unwrap_err();
        assert!(matches!(
            err,
            EvalError::TooFewTrials { class: "target", .. }
        ));
    }

    #[test]
    fn doddington_interval_on_overlapping_classes() {
        let mut rng = crate::rng::Xoshiro256pp::new(5);
        let t: Vec<f64> = (0..2000).map(|_| 2.0 * (1.0 + rng.next_normal())).collect();
        let n: Vec<f64> = (0..2000).map(|_| 2.0 * (-1.0 + rng.next_normal())).collect();
        let (lo, hi) = doddington_range(&LlrSet::new(t, n).unwrap()).unwrap();
        assert!(lo < 0.0 && 0.0 < hi, "interval [{lo}, {hi}] straddles 0");
        assert!(hi - lo >= 1.0);
    }

    #[test]
    fn validation_rejects_bad_sets() {
        assert!(LlrSet::new(vec![], vec![1.0]).is_err());
        assert!(LlrSet::new(vec![1.0], vec![]).is_err());
        assert!(LlrSet::new(vec![f64::NAN], vec![1.0]).is_err());
        assert!(LlrSet::new(vec![1.0], vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn csv_writes_expected_header_and_rows() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("curve.csv");
        let s = set(&[1.0, 2.0], &[-1.0, 0.0]);
        let c = bayes_error_curve(&s, -2.0, 2.0, 5).unwrap();
        write_curve_csv(&path, &c).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "x,p,y_actual,y_min,p_miss,p_fa");
        assert_eq!(lines.count(), 5);
        let reread: f64 = text.lines().nth(1).unwrap().split(',').next().unwrap().parse().unwrap();
        assert_eq!(reread, -2.0, "17 significant digits round-trip");
    }
}
