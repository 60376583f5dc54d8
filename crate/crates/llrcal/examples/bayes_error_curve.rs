//! The normalized Bayes error-rate curve of one calibrated score set.
//!
//! At each prior log-odds x the LLRs are thresholded at -x; `y` is the
//! normalized cost of that decision and `y'` the best any threshold could
//! do. Well-calibrated LLRs keep y close to y' across the whole sweep.

use llrcal::data::Family;
use llrcal::dist::GaussianParams;
use llrcal::evaluate::{DEFAULT_GRID_POINTS, DEFAULT_X_HI, DEFAULT_X_LO};
use llrcal::{
    bayes_error_curve, doddington_range, fit_gaussian_shared, generate_synthetic, write_curve_csv,
    LlrSet, SyntheticSpec, TargetWeight,
};

fn main() {
    let spec = SyntheticSpec {
        seed: 14,
        num_targets: 5_000,
        num_nontargets: 50_000,
        target: Family::Gaussian(GaussianParams::new(3.0, 4.0).unwrap()),
        nontarget: Family::Gaussian(GaussianParams::new(0.0, 1.0).unwrap()),
    };
    let scores = generate_synthetic(&spec).unwrap();
    let alpha = TargetWeight::DataPrior.resolve(&scores).unwrap();
    let model = fit_gaussian_shared(&scores, alpha).unwrap();
    let mapped = model.apply_all(&scores);
    let llrs = LlrSet::new(mapped.targets, mapped.nontargets).unwrap();

    let curve = bayes_error_curve(&llrs, DEFAULT_X_LO, DEFAULT_X_HI, DEFAULT_GRID_POINTS).unwrap();
    println!("     x     y (actual)   y' (minimum)");
    for pt in curve.iter().step_by(40) {
        println!("{:+6.1}   {:10.4}   {:12.4}", pt.x, pt.y_actual, pt.y_min);
    }

    let (lo, hi) = doddington_range(&llrs).unwrap();
    println!("\nrule-of-30 supported region: [{lo:+.2}, {hi:+.2}]");

    let path = std::env::temp_dir().join("llrcal_example_curve.csv");
    write_curve_csv(&path, &curve).unwrap();
    println!("full curve written to {}", path.display());
}
