//! Scratch harness for locating a criterion-5 generator. Deleted before commit.

use llrcal::calibrate::{
    fit_gaussian_separate, fit_gaussian_shared, fit_logreg, fit_nig_ml, fit_pav, fit_t_ml,
    pav_train_llrs, CalibratorModel, TargetWeight,
};
use llrcal::data::Family;
use llrcal::dist::NigParams;
use llrcal::evaluate::{bayes_error_curve, doddington_range, LlrSet};
use llrcal::optim::{BfgsConfig, TrustRegionConfig};
use llrcal::{generate_synthetic, LabeledScores, SyntheticSpec};
use std::time::Instant;

fn max_gap(llrs: &LlrSet) -> (f64, f64, f64, f64) {
    let (lo, hi) = doddington_range(llrs).unwrap();
    let n = (((hi - lo) / 0.02).round() as usize).max(2) + 1;
    let curve = bayes_error_curve(llrs, lo, hi, n).unwrap();
    let mut worst = f64::NEG_INFINITY;
    let mut at = f64::NAN;
    for pt in &curve {
        if pt.y_actual - pt.y_min > worst {
            worst = pt.y_actual - pt.y_min;
            at = pt.x;
        }
    }
    (worst, at, lo, hi)
}

fn report(name: &str, model: &CalibratorModel, scores: &LabeledScores) -> f64 {
    let llrs = model.apply_all(scores);
    let (worst, at, lo, hi) = max_gap(&llrs);
    println!("  {name:<12} max gap {worst:.4} at x = {at:+.2}   range [{lo:+.2}, {hi:+.2}]");
    worst
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let get = |i: usize, d: f64| args.get(i).map(|s| s.parse().unwrap()).unwrap_or(d);
    // argv: mu1 d1 a1 b1  mu2 d2 a2 b2  T N [skip_nig]
    let (mu1, d1, a1, b1) = (get(1, 3.0), get(2, 6.0), get(3, 0.7), get(4, 0.15));
    let (mu2, d2, a2, b2) = (get(5, 0.0), get(6, 2.0), get(7, 2.0), get(8, 0.3));
    let t_n = get(9, 5000.0) as usize;
    let n_n = get(10, 50_000.0) as usize;
    let skip_nig = get(11, 1.0) != 0.0;
    let seed = get(12, 31.0) as u64;

    let tp = NigParams::new(mu1, d1, a1, b1).unwrap();
    let np = NigParams::new(mu2, d2, a2, b2).unwrap();
    println!(
        "tgt mean {:.2} var {:.2} | non mean {:.2} var {:.2}",
        tp.mean(),
        d1 * a1 * a1 / (a1 * a1 - b1 * b1).powf(1.5),
        np.mean(),
        d2 * a2 * a2 / (a2 * a2 - b2 * b2).powf(1.5),
    );
    let spec = SyntheticSpec {
        seed,
        num_targets: t_n,
        num_nontargets: n_n,
        target: Family::Nig(tp),
        nontarget: Family::Nig(np),
    };
    let scores = generate_synthetic(&spec).unwrap();

    let t0 = Instant::now();
    report("gauss-sep", &fit_gaussian_separate(&scores).unwrap(), &scores);
    let tfit = fit_t_ml(&scores, &BfgsConfig::default()).unwrap();
    for r in &tfit.runs {
        if !r.converged() {
            println!("  (t run: {:?} after {} iters, g {:.1e})", r.status, r.iterations, r.gradient_norm);
        }
    }
    report("t", &tfit.model, &scores);
    if !skip_nig {
        let cfg = TrustRegionConfig::default();
        let nfit = fit_nig_ml(&scores, &cfg).unwrap();
        for r in &nfit.runs {
            if !r.converged() {
                println!("  (nig run: {:?} after {} iters, g {:.1e})", r.status, r.iterations, r.gradient_norm);
            }
        }
        report("nig", &nfit.model, &scores);
    }
    report("pav-model", &fit_pav(&scores).unwrap(), &scores);
    {
        let train = pav_train_llrs(&scores).unwrap();
        let (worst, at, lo, hi) = max_gap(&train);
        println!("  {:<12} max gap {worst:.2e} at x = {at:+.2}   range [{lo:+.2}, {hi:+.2}]", "pav-train");
    }

    let alphas: Vec<f64> = vec![
        0.0002, 0.0005, 0.001, 0.002, 0.005, 0.01, 0.02, 0.05, 0.09, 0.15, 0.25, 0.35, 0.5,
        0.65, 0.75, 0.85, 0.92, 0.97, 0.99,
    ];
    let mut best = (f64::INFINITY, 0.0);
    for &alpha in &alphas {
        let fit = fit_logreg(&scores, alpha, &BfgsConfig::default()).unwrap();
        let llrs = fit.model.apply_all(&scores);
        let (worst, _, _, _) = max_gap(&llrs);
        if worst < best.0 {
            best = (worst, alpha);
        }
    }
    println!("  logreg best  max gap {:.4} at alpha = {}", best.0, best.1);
    let da = TargetWeight::DataPrior.resolve(&scores).unwrap();
    let fit = fit_logreg(&scores, da, &BfgsConfig::default()).unwrap();
    let (worst, at, _, _) = max_gap(&fit.model.apply_all(&scores));
    println!("  logreg d-p   max gap {worst:.4} at x = {at:+.2}");
    println!("  ({:.1?} total)", t0.elapsed());

    // per-x profile of the best-alpha system against the optimum
    let fit = fit_logreg(&scores, best.1, &BfgsConfig::default()).unwrap();
    let CalibratorModel::LinearLogReg { a, b } = fit.model else { unreachable!() };
    println!("\nbest logreg: llr = {a:.3} s + {b:.3}");
    let llrs = fit.model.apply_all(&scores);
    let (lo, hi) = doddington_range(&llrs).unwrap();
    let n = (((hi - lo) / 0.02).round() as usize).max(2) + 1;
    let curve = bayes_error_curve(&llrs, lo, hi, n).unwrap();
    let k = curve.len() / 8;
    println!("  {:>6} {:>8} {:>8} {:>8}", "x", "y", "y'", "gap");
    for pt in curve.iter().step_by(k.max(1)) {
        println!(
            "  {:+6.2} {:8.4} {:8.4} {:8.4}",
            pt.x,
            pt.y_actual,
            pt.y_min,
            pt.y_actual - pt.y_min
        );
    }
}
