//! Monte-Carlo checks of the synthetic samplers against analytic moments
//! and quadrature tail probabilities.

mod common;

use common::integrate_split;
use llrcal::data::Family;
use llrcal::dist::{nig_logpdf, GaussianParams, NigParams, StudentTParams};
use llrcal::rng::Xoshiro256pp;
use llrcal::{generate_synthetic, SyntheticSpec};

const N: usize = 200_000;

fn draws(fam: Family, seed: u64) -> Vec<f64> {
    let mut rng = Xoshiro256pp::new(seed);
    (0..N).map(|_| fam.sample(&mut rng)).collect()
}

fn mean_var(v: &[f64]) -> (f64, f64) {
    let m = v.iter().sum::<f64>() / v.len() as f64;
    let var = v.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / v.len() as f64;
    (m, var)
}

#[test]
fn gaussian_sampler_moments() {
    let v = draws(Family::Gaussian(GaussianParams::new(2.0, 4.0).unwrap()), 1);
    let (m, var) = mean_var(&v);
    assert!((m - 2.0).abs() < 0.02, "mean {m}");
    assert!((var - 4.0).abs() < 0.06, "var {var}");
}

#[test]
fn student_t_sampler_moments() {
    // var = sigma^2 nu / (nu - 2)
    let v = draws(Family::StudentT(StudentTParams::new(1.0, 1.5, 8.0).unwrap()), 2);
    let (m, var) = mean_var(&v);
    assert!((m - 1.0).abs() < 0.02, "mean {m}");
    let want = 1.5 * 1.5 * 8.0 / 6.0;
    assert!((var - want).abs() < 0.1, "var {var} want {want}");
}

#[test]
fn nig_sampler_moments() {
    // mean = mu + delta beta / gamma, var = delta alpha^2 / gamma^3
    let (mu, delta, alpha, beta) = (0.5, 1.2, 1.5, 0.6);
    let p = NigParams::new(mu, delta, alpha, beta).unwrap();
    assert!((p.mean() - 0.5 - 1.2 * 0.6 / (1.5f64 * 1.5 - 0.36).sqrt()).abs() < 1e-12);
    let v = draws(Family::Nig(p), 3);
    let (m, var) = mean_var(&v);
    let gamma = (alpha * alpha - beta * beta).sqrt();
    let want_var = delta * alpha * alpha / (gamma * gamma * gamma);
    assert!((m - p.mean()).abs() < 0.02, "mean {m} want {}", p.mean());
    assert!((var - want_var).abs() < 0.08, "var {var} want {want_var}");
}

#[test]
fn nig_sampler_tail_probabilities_match_quadrature() {
    let (mu, delta, alpha, beta) = (0.0, 0.8, 1.2, -0.7);
    let v = draws(Family::Nig(NigParams::new(mu, delta, alpha, beta).unwrap()), 4);
    let lo = mu - 80.0 / (alpha - beta.abs()) - 10.0 * delta;
    for q in [-3.0, -1.0, 0.0, 0.5, 2.0] {
        let want = integrate_split(
            |s| nig_logpdf(s, mu, delta, alpha, beta).exp(),
            lo,
            q,
            &[mu - delta, mu, mu + delta],
            1e-10,
        );
        let got = v.iter().filter(|&&s| s <= q).count() as f64 / N as f64;
        assert!(
            (got - want).abs() < 5e-3,
            "P(X <= {q}): empirical {got:.4} vs quadrature {want:.4}"
        );
    }
}

#[test]
fn student_t_sampler_tail_probabilities_match_quadrature() {
    use llrcal::dist::t_logpdf;
    let (mu, sigma, nu) = (0.3, 1.1, 3.0);
    let v = draws(Family::StudentT(StudentTParams::new(mu, sigma, nu).unwrap()), 5);
    for q in [-2.0, 0.0, 1.0, 3.0] {
        // tan substitution from the left edge
        let hi = ((q - mu) / sigma).atan();
        let want = integrate_split(
            |u| {
                let t = u.tan();
                t_logpdf(mu + sigma * t, mu, sigma, nu).exp() * sigma * (1.0 + t * t)
            },
            -std::f64::consts::FRAC_PI_2 + 1e-12,
            hi,
            &[0.0],
            1e-10,
        );
        let got = v.iter().filter(|&&s| s <= q).count() as f64 / N as f64;
        assert!(
            (got - want).abs() < 5e-3,
            "P(X <= {q}): empirical {got:.4} vs quadrature {want:.4}"
        );
    }
}

proptest::proptest! {
    #[test]
    fn spec_json_round_trips(
        seed in proptest::prelude::any::<u64>(),
        t in 1usize..100_000,
        n in 1usize..100_000,
        fam_t in family_strategy(),
        fam_n in family_strategy(),
    ) {
        let spec = SyntheticSpec {
            seed,
            num_targets: t,
            num_nontargets: n,
            target: fam_t,
            nontarget: fam_n,
        };
        let text = serde_json::to_string_pretty(&spec).unwrap();
        let back: SyntheticSpec = serde_json::from_str(&text).unwrap();
        proptest::prop_assert_eq!(back, spec);
    }
}

fn family_strategy() -> impl proptest::strategy::Strategy<Value = Family> {
    use proptest::prelude::*;
    let finite = -1e6f64..1e6;
    let pos = 1e-6f64..1e6;
    prop_oneof![
        (finite.clone(), pos.clone())
            .prop_map(|(mu, v)| Family::Gaussian(GaussianParams::new(mu, v).unwrap())),
        (finite.clone(), pos.clone(), pos.clone()).prop_map(|(mu, sigma, nu)| {
            Family::StudentT(StudentTParams::new(mu, sigma, nu).unwrap())
        }),
        (finite, pos.clone(), pos, -0.99f64..0.99).prop_map(|(mu, delta, alpha, b)| {
            Family::Nig(NigParams::new(mu, delta, alpha, b * alpha).unwrap())
        }),
    ]
}

#[test]
fn generate_synthetic_is_deterministic_and_ordered() {
    let spec = SyntheticSpec {
        seed: 99,
        num_targets: 50,
        num_nontargets: 70,
        target: Family::Gaussian(GaussianParams::new(1.0, 1.0).unwrap()),
        nontarget: Family::StudentT(StudentTParams::new(0.0, 1.0, 5.0).unwrap()),
    };
    let a = generate_synthetic(&spec).unwrap();
    let b = generate_synthetic(&spec).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.targets.len(), 50);
    assert_eq!(a.nontargets.len(), 70);
}
