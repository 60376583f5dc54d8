//! Isotonic (pool-adjacent-violators) calibration.
//!
//! Scores are sorted, equal scores pooled (a monotone function cannot
//! separate them), and adjacent blocks merged while their target posteriors
//! violate monotonicity. Posterior comparisons are integer-exact, and equal
//! posteriors are merged too, so the surviving block posteriors are strictly
//! increasing.
//!
//! Two outputs serve two purposes. [`fit_pav`] builds the reusable model:
//! half-count-smoothed block LLRs (bounded even for pure blocks), with a
//! weighted monotone repair because smoothing can reorder blocks of very
//! different sizes. [`pav_train_llrs`] keeps the raw block LLRs
//! `ln(t*N / (n*T))` on the training scores themselves; these are the
//! LLRs for which the actual Bayes error rate meets the minimum at every
//! operating point, exactly.

use super::{CalibError, CalibratorModel};
use crate::data::LabeledScores;
use crate::evaluate::LlrSet;

/// Stand-in for the infinite LLR of a pure block; far outside any
/// operating-point threshold, so decisions are unaffected.
const PURE_BLOCK_LLR: f64 = 1e3;

#[derive(Clone, Copy, Debug)]
struct Block {
    lo: f64,
    hi: f64,
    t: u64,
    n: u64,
}

/// Pool-adjacent-violators over the pooled score sequence. Returned blocks
/// have strictly increasing posteriors t/(t+n) and disjoint ascending score
/// ranges.
fn pav_blocks(scores: &LabeledScores) -> Vec<Block> {
    let mut pairs: Vec<(f64, bool)> = scores
        .targets
        .iter()
        .map(|&s| (s, true))
        .chain(scores.nontargets.iter().map(|&s| (s, false)))
        .collect();
    pairs.sort_unstable_by(|a, b| a.0.total_cmp(&b.0));

    let mut blocks: Vec<Block> = Vec::new();
    let mut i = 0;
    while i < pairs.len() {
        let s = pairs[i].0;
        let (mut t, mut n) = (0u64, 0u64);
        while i < pairs.len() && pairs[i].0 == s {
            if pairs[i].1 {
                t += 1;
            } else {
                n += 1;
            }
            i += 1;
        }
        blocks.push(Block { lo: s, hi: s, t, n });
        while blocks.len() >= 2 {
            let b = blocks[blocks.len() - 1];
            let a = blocks[blocks.len() - 2];
            // posterior violation a.p >= b.p, cross-multiplied in integers
            if a.t * (b.t + b.n) >= b.t * (a.t + a.n) {
                blocks.pop();
                let merged = blocks.last_mut().unwrap();
                merged.hi = b.hi;
                merged.t += b.t;
                merged.n += b.n;
            } else {
                break;
            }
        }
    }
    blocks
}

/// Non-decreasing repair of knot values by weighted pooling; same PAV
/// recursion, on real values.
fn monotone_repair(values: &mut [f64], weights: &[u64]) {
    let mut pooled: Vec<(f64, f64, usize)> = Vec::with_capacity(values.len());
    for (&v, &w) in values.iter().zip(weights) {
        pooled.push((v, w as f64, 1));
        while pooled.len() >= 2 {
            let b = pooled[pooled.len() - 1];
            let a = pooled[pooled.len() - 2];
            if a.0 >= b.0 {
                pooled.pop();
                let last = pooled.last_mut().unwrap();
                last.0 = (a.0 * a.1 + b.0 * b.1) / (a.1 + b.1);
                last.1 = a.1 + b.1;
                last.2 = a.2 + b.2;
            } else {
                break;
            }
        }
    }
    let mut k = 0;
    for (v, _, count) in pooled {
        for _ in 0..count {
            values[k] = v;
            k += 1;
        }
    }
}

/// Fit the isotonic calibrator. Each block contributes a knot at both its
/// endpoint scores (one knot if they coincide), so the fitted map is flat
/// across a block and linear only between adjacent blocks; on the training
/// scores it reproduces the block LLRs exactly. Knot LLRs are
/// `logit(p_tilde) - ln(T/N)` with half-count smoothing
/// `p_tilde = (t + 0.5)/(t + n + 1)`, monotone-repaired.
pub fn fit_pav(scores: &LabeledScores) -> Result<CalibratorModel, CalibError> {
    scores.validate()?;
    let blocks = pav_blocks(scores);
    let log_prior_odds =
        (scores.targets.len() as f64).ln() - (scores.nontargets.len() as f64).ln();
    let mut block_llrs: Vec<f64> = blocks
        .iter()
        .map(|b| {
            let smoothed_odds = (b.t as f64 + 0.5) / (b.n as f64 + 0.5);
            smoothed_odds.ln() - log_prior_odds
        })
        .collect();
    let weights: Vec<u64> = blocks.iter().map(|b| b.t + b.n).collect();
    monotone_repair(&mut block_llrs, &weights);
    let mut knot_scores = Vec::with_capacity(2 * blocks.len());
    let mut llrs = Vec::with_capacity(2 * blocks.len());
    for (b, &llr) in blocks.iter().zip(&block_llrs) {
        knot_scores.push(b.lo);
        llrs.push(llr);
        if b.hi > b.lo {
            knot_scores.push(b.hi);
            llrs.push(llr);
        }
    }
    Ok(CalibratorModel::Pav {
        scores: knot_scores,
        llrs,
    })
}

/// Raw PAV block LLRs of the training scores themselves: each score maps to
/// `ln(t*N / (n*T))` of its block, with pure blocks clamped to
/// [`PURE_BLOCK_LLR`] of the right sign. Evaluating these on any operating
/// point grid reproduces the minimum Bayes error rate exactly.
pub fn pav_train_llrs(scores: &LabeledScores) -> Result<LlrSet, CalibError> {
    scores.validate()?;
    let blocks = pav_blocks(scores);
    let log_prior_odds =
        (scores.targets.len() as f64).ln() - (scores.nontargets.len() as f64).ln();
    let block_llr: Vec<f64> = blocks
        .iter()
        .map(|b| {
            if b.t == 0 {
                -PURE_BLOCK_LLR
            } else if b.n == 0 {
                PURE_BLOCK_LLR
            } else {
                (b.t as f64 / b.n as f64).ln() - log_prior_odds
            }
        })
        .collect();
    let lookup = |s: f64| {
        let i = blocks.partition_point(|b| b.hi < s);
        block_llr[i.min(block_llr.len() - 1)]
    };
    Ok(LlrSet {
        targets: scores.targets.iter().map(|&s| lookup(s)).collect(),
        nontargets: scores.nontargets.iter().map(|&s| lookup(s)).collect(),
    })
}
