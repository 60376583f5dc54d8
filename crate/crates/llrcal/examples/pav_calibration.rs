//! Pool-adjacent-violators calibration.
//!
//! PAV pools scores into blocks with increasing target fraction. The fitted
//! model interpolates smoothed block LLRs; `pav_train_llrs` gives the raw
//! (unsmoothed) training-set mapping, whose thresholded error rate equals
//! the minimum over all thresholds at every operating point.

use llrcal::data::Family;
use llrcal::dist::GaussianParams;
use llrcal::evaluate::{bayes_error_at, min_bayes_error_at};
use llrcal::{fit_pav, generate_synthetic, pav_train_llrs, SyntheticSpec};

fn main() {
    let spec = SyntheticSpec {
        seed: 33,
        num_targets: 2_000,
        num_nontargets: 10_000,
        target: Family::Gaussian(GaussianParams::new(2.0, 2.0).unwrap()),
        nontarget: Family::Gaussian(GaussianParams::new(0.0, 1.0).unwrap()),
    };
    let scores = generate_synthetic(&spec).unwrap();

    let model = fit_pav(&scores).unwrap();
    if let llrcal::CalibratorModel::Pav { scores: knots, llrs } = &model {
        println!("{} knots; first three:", knots.len());
        for (s, l) in knots.iter().zip(llrs).take(3) {
            println!("  score {s:+.4} -> LLR {l:+.4}");
        }
        println!("applied between knots by linear interpolation, clamped outside");
    }
    println!("model.apply(0.0) = {:+.4}", model.apply(0.0));

    let llrs = pav_train_llrs(&scores).unwrap();
    let mut worst = 0.0f64;
    for i in 0..=160 {
        let x = -8.0 + 0.1 * i as f64;
        worst = worst.max(bayes_error_at(&llrs, x) - min_bayes_error_at(&llrs, x));
    }
    println!("train-time max over grid of (y - y') = {worst:.2e}");
}
