//! Shared helpers for the integration tests: quadrature, brute-force
//! oracles, and finite differences.

#![allow(dead_code)]

pub mod bessel_table;

/// Adaptive Simpson integration of `f` over `[a, b]` to absolute tolerance
/// `tol`, with recursion depth capped at 60.
pub fn integrate<F: Fn(f64) -> f64 + Copy>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
    }
    fn rec<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        m: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (left, lm, flm) = simpson(f, a, fa, m, fm);
        let (right, rm, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        rec(f, a, fa, m, fm, left, lm, flm, 0.5 * tol, depth - 1)
            + rec(f, m, fm, b, fb, right, rm, frm, 0.5 * tol, depth - 1)
    }
    let (fa, fb) = (f(a), f(b));
    let (whole, m, fm) = simpson(&f, a, fa, b, fb);
    rec(&f, a, fa, b, fb, whole, m, fm, tol, 60)
}

/// Integrate with explicit interior split points (landmarks), so sharp peaks
/// between them are not missed by the first Simpson probe.
pub fn integrate_split<F: Fn(f64) -> f64 + Copy>(
    f: F,
    a: f64,
    b: f64,
    landmarks: &[f64],
    tol: f64,
) -> f64 {
    let mut cuts = vec![a];
    for &l in landmarks {
        if l > a && l < b {
            cuts.push(l);
        }
    }
    cuts.push(b);
    cuts.sort_by(f64::total_cmp);
    cuts.windows(2)
        .map(|w| integrate(f, w[0], w[1], tol / (cuts.len() - 1) as f64))
        .sum()
}

/// Central finite-difference gradient.
pub fn fd_gradient<F: Fn(&[f64]) -> f64>(f: F, x: &[f64], h: f64) -> Vec<f64> {
    let mut g = vec![0.0; x.len()];
    let mut xp = x.to_vec();
    for i in 0..x.len() {
        xp[i] = x[i] + h;
        let up = f(&xp);
        xp[i] = x[i] - h;
        let dn = f(&xp);
        xp[i] = x[i];
        g[i] = (up - dn) / (2.0 * h);
    }
    g
}

/// Central finite-difference Hessian-vector product via two gradient
/// evaluations at `x +- h v`.
pub fn fd_hvp<F: Fn(&[f64]) -> Vec<f64>>(grad: F, x: &[f64], v: &[f64], h: f64) -> Vec<f64> {
    let xp: Vec<f64> = x.iter().zip(v).map(|(xi, vi)| xi + h * vi).collect();
    let xm: Vec<f64> = x.iter().zip(v).map(|(xi, vi)| xi - h * vi).collect();
    let gp = grad(&xp);
    let gm = grad(&xm);
    gp.iter().zip(&gm).map(|(p, m)| (p - m) / (2.0 * h)).collect()
}

/// Exact minimum of the weighted least-squares isotonic regression by brute
/// force: every way of cutting the (pre-sorted, pooled-by-score) sequence
/// into level blocks, keeping only monotone level assignments. Values are
/// target fractions with weights; feasible only for tiny inputs.
///
/// Returns the fitted value per input position.
pub fn brute_force_isotonic(values: &[f64], weights: &[f64]) -> Vec<f64> {
    let n = values.len();
    assert!(n <= 12, "exhaustive search only for tiny inputs");
    assert_eq!(n, weights.len());
    let mut best: Option<(f64, Vec<f64>)> = None;
    // enumerate block partitions by bitmask of "cut after position i"
    for mask in 0..(1u32 << (n - 1)) {
        let mut fit = vec![0.0; n];
        let mut start = 0usize;
        let mut prev_level = f64::NEG_INFINITY;
        let mut cost = 0.0;
        let mut feasible = true;
        for end in 0..n {
            let is_cut = end + 1 == n || mask & (1 << end) != 0;
            if !is_cut {
                continue;
            }
            let w: f64 = weights[start..=end].iter().sum();
            let level = values[start..=end]
                .iter()
                .zip(&weights[start..=end])
                .map(|(v, wi)| v * wi)
                .sum::<f64>()
                / w;
            if level < prev_level - 1e-12 {
                feasible = false;
                break;
            }
            for k in start..=end {
                fit[k] = level;
                cost += weights[k] * (values[k] - level) * (values[k] - level);
            }
            prev_level = level;
            start = end + 1;
        }
        if !feasible {
            continue;
        }
        match &best {
            Some((c, _)) if *c <= cost => {}
            _ => best = Some((cost, fit)),
        }
    }
    best.unwrap().1
}
