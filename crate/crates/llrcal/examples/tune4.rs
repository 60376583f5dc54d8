//! Scratch harness for the alpha-steering geometry. Deleted before commit.

use llrcal::data::Family;
use llrcal::dist::{GaussianParams, NigParams};
use llrcal::evaluate::{bayes_error_at, doddington_range, min_bayes_error_at};
use llrcal::{fit_gaussian_shared, generate_synthetic, CalibratorModel, SyntheticSpec};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let get = |i: usize, d: f64| args.get(i).map(|s| s.parse().unwrap()).unwrap_or(d);
    // argv: mu1 d1 a1 b1  T N seed
    let (mu1, d1, a1, b1) = (get(1, 2.0), get(2, 0.9), get(3, 1.16), get(4, 1.04));
    let t_n = get(5, 10_000.0) as usize;
    let n_n = get(6, 1_000_000.0) as usize;
    let seed = get(7, 41.0) as u64;

    let tp = NigParams::new(mu1, d1, a1, b1).unwrap();
    let g = (a1 * a1 - b1 * b1).sqrt();
    println!(
        "tgt mean {:.3} var {:.3} rates L {:.2} R {:.2} | seed {seed}",
        tp.mean(),
        d1 * a1 * a1 / g.powi(3),
        a1 + b1,
        a1 - b1,
    );
    let spec = SyntheticSpec {
        seed,
        num_targets: t_n,
        num_nontargets: n_n,
        target: Family::Nig(tp),
        nontarget: Family::Gaussian(GaussianParams::new(0.0, 1.0).unwrap()),
    };
    let t0 = Instant::now();
    let scores = generate_synthetic(&spec).unwrap();

    let mean = |xs: &[f64]| xs.iter().sum::<f64>() / xs.len() as f64;
    let var = |xs: &[f64], m: f64| xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / xs.len() as f64;
    let m1 = mean(&scores.targets);
    let m2 = mean(&scores.nontargets);
    println!(
        "empirical: m1 {m1:.3} v1 {:.3} | m2 {m2:.3} v2 {:.3}",
        var(&scores.targets, m1),
        var(&scores.nontargets, m2)
    );

    let low = fit_gaussian_shared(&scores, 0.0007).unwrap();
    let high = fit_gaussian_shared(&scores, 0.92).unwrap();
    for (name, model) in [("low  0.0007", &low), ("high 0.92 ", &high)] {
        let CalibratorModel::GaussianShared { mu1, mu2, v } = model else { unreachable!() };
        let llrs = model.apply_all(&scores);
        let (lo, hi) = doddington_range(&llrs).unwrap();
        let ym6 = bayes_error_at(&llrs, -6.0);
        let yp3 = bayes_error_at(&llrs, 3.0);
        println!(
            "  {name}: v {v:.3} slope {:.3} | range [{lo:+.2}, {hi:+.2}] | y(-6) {ym6:.4} (y' {:.4}) y(+3) {yp3:.4} (y' {:.4})",
            (mu1 - mu2) / v,
            min_bayes_error_at(&llrs, -6.0),
            min_bayes_error_at(&llrs, 3.0),
        );
    }
    println!("  ({:.1?})", t0.elapsed());

    let llrs = low.apply_all(&scores);
    let mut tgt = llrs.targets.clone();
    let mut non = llrs.nontargets.clone();
    tgt.sort_unstable_by(f64::total_cmp);
    non.sort_unstable_by(f64::total_cmp);
    for xi in [-7.2, -7.0, -6.8, -6.3, 2.7, 2.9, 3.0, 3.1, 3.3, 3.5] {
        let p = 1.0 / (1.0 + (-xi as f64).exp());
        let mut best = (f64::INFINITY, 0usize, 0usize);
        let mut cand: Vec<f64> = tgt.iter().chain(non.iter()).copied().collect();
        cand.push(f64::NEG_INFINITY);
        cand.sort_unstable_by(f64::total_cmp);
        cand.dedup();
        let mut mi = 0usize;
        let mut fi = 0usize;
        for &th in &cand {
            while mi < tgt.len() && tgt[mi] <= th {
                mi += 1;
            }
            while fi < non.len() && non[fi] <= th {
                fi += 1;
            }
            let (miss, fa) = (mi, non.len() - fi);
            let c = (p * miss as f64 / tgt.len() as f64
                + (1.0 - p) * fa as f64 / non.len() as f64)
                / p.min(1.0 - p);
            if c < best.0 {
                best = (c, miss, fa);
            }
        }
        println!("  x {xi:+.1}: y' {:.4} miss {} fa {}", best.0, best.1, best.2);
    }
}
