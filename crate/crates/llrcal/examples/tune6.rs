//! Scratch harness for ML parameter recovery margins. Deleted before commit.

use llrcal::data::Family;
use llrcal::dist::{NigParams, StudentTParams};
use llrcal::{fit_nig_ml, fit_t_ml, generate_synthetic, CalibratorModel, SyntheticSpec};
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    for seed in [211u64, 212, 213] {
        let spec = SyntheticSpec {
            seed,
            num_targets: 100_000,
            num_nontargets: 100_000,
            target: Family::StudentT(StudentTParams::new(1.0, 1.3, 5.0).unwrap()),
            nontarget: Family::StudentT(StudentTParams::new(-0.5, 1.0, 3.5).unwrap()),
        };
        let scores = generate_synthetic(&spec).unwrap();
        let fit = fit_t_ml(&scores, &Default::default()).unwrap();
        let CalibratorModel::StudentT { mu1, sigma1, nu1, mu2, sigma2, nu2 } = fit.model else {
            unreachable!()
        };
        let truth = [1.0, 1.3, 5.0, -0.5, 1.0, 3.5];
        let est = [mu1, sigma1, nu1, mu2, sigma2, nu2];
        let rel: Vec<f64> = truth
            .iter()
            .zip(&est)
            .map(|(t, e)| if *t == 0.0 { e.abs() } else { (e - t).abs() / t.abs() })
            .collect();
        println!(
            "t   seed {seed}: est {est:.3?} rel {:?}",
            rel.iter().map(|r| format!("{r:.3}")).collect::<Vec<_>>()
        );
    }
    println!("t fits: {:.1?}", t0.elapsed());

    let t1 = Instant::now();
    for seed in [211u64, 212, 213] {
        let spec = SyntheticSpec {
            seed,
            num_targets: 100_000,
            num_nontargets: 100_000,
            target: Family::Nig(NigParams::new(0.6, 1.4, 1.6, 0.5).unwrap()),
            nontarget: Family::Nig(NigParams::new(-0.8, 1.0, 1.2, -0.35).unwrap()),
        };
        let scores = generate_synthetic(&spec).unwrap();
        let fit = fit_nig_ml(&scores, &llrcal::TrustRegionConfig { hessian_subsample: 0.25, ..Default::default() }).unwrap();
        let CalibratorModel::Nig {
            mu1,
            delta1,
            alpha1,
            beta1,
            mu2,
            delta2,
            alpha2,
            beta2,
        } = fit.model
        else {
            unreachable!()
        };
        let truth = [0.6, 1.4, 1.6, 0.5, -0.8, 1.0, 1.2, -0.35];
        let est = [mu1, delta1, alpha1, beta1, mu2, delta2, alpha2, beta2];
        let rel: Vec<f64> = truth
            .iter()
            .zip(&est)
            .map(|(t, e)| (e - t).abs() / t.abs())
            .collect();
        println!(
            "nig seed {seed}: est {est:.3?} rel {:?}",
            rel.iter().map(|r| format!("{r:.3}")).collect::<Vec<_>>()
        );
    }
    println!("nig fits: {:.1?} | total {:.1?}", t1.elapsed(), t0.elapsed());
}
