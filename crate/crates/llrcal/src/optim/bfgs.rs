//! BFGS with a strong Wolfe line search.

use super::{BfgsConfig, Objective, OptimError, OptimResult, OptimStatus};

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

struct LineSearchHit {
    alpha: f64,
    f: f64,
    grad: Vec<f64>,
}

/// Strong Wolfe search along `p` from `x`: sufficient decrease with `c1`,
/// curvature with `c2`. Bracketing doubles the step; the zoom phase is plain
/// bisection, giving up after 50 halvings.
fn wolfe_search<O: Objective + ?Sized>(
    obj: &O,
    x: &[f64],
    p: &[f64],
    f0: f64,
    g0_dot_p: f64,
    cfg: &BfgsConfig,
) -> Option<LineSearchHit> {
    let probe = |alpha: f64| -> (f64, Vec<f64>, f64) {
        let xa: Vec<f64> = x.iter().zip(p).map(|(xi, pi)| xi + alpha * pi).collect();
        let (f, g) = obj.value_and_gradient(&xa);
        let dphi = dot(&g, p);
        (f, g, dphi)
    };
    let armijo = |alpha: f64, f: f64| f <= f0 + cfg.wolfe_c1 * alpha * g0_dot_p;
    let curvature = |dphi: f64| dphi.abs() <= cfg.wolfe_c2 * g0_dot_p.abs();

    let mut lo = 0.0;
    let mut f_lo = f0;
    let mut alpha = 1.0;
    let mut hi = None;

    // bracket: grow until the minimum is straddled or Wolfe holds outright
    for _ in 0..60 {
        let (f, g, dphi) = probe(alpha);
        if !armijo(alpha, f) || (f >= f_lo && lo > 0.0) || !f.is_finite() {
            hi = Some(alpha);
            break;
        }
        if curvature(dphi) {
            return Some(LineSearchHit { alpha, f, grad: g });
        }
        if dphi >= 0.0 {
            hi = Some(lo);
            lo = alpha;
            f_lo = f;
            break;
        }
        lo = alpha;
        f_lo = f;
        alpha *= 2.0;
    }
    let mut hi = hi?;

    // zoom by bisection
    for _ in 0..50 {
        let mid = 0.5 * (lo + hi);
        let (f, g, dphi) = probe(mid);
        if !armijo(mid, f) || f >= f_lo || !f.is_finite() {
            hi = mid;
            continue;
        }
        if curvature(dphi) {
            return Some(LineSearchHit {
                alpha: mid,
                f,
                grad: g,
            });
        }
        if dphi * (hi - lo) >= 0.0 {
            hi = lo;
        }
        lo = mid;
        f_lo = f;
    }
    None
}

/// Minimize `obj` from `x0`. The inverse Hessian approximation starts at the
/// identity, is rescaled once after the first step, and skips updates whose
/// curvature `y . s` is not safely positive, so it stays positive definite.
pub fn bfgs<O: Objective + ?Sized>(
    obj: &O,
    x0: &[f64],
    cfg: &BfgsConfig,
) -> Result<OptimResult, OptimError> {
    cfg.validate()?;
    let d = obj.dim();
    if x0.len() != d {
        return Err(OptimError::DimensionMismatch {
            want: d,
            got: x0.len(),
        });
    }
    if x0.iter().any(|v| !v.is_finite()) {
        return Err(OptimError::NonFiniteObjective);
    }

    let mut x = x0.to_vec();
    let (mut f, mut g) = obj.value_and_gradient(&x);
    if !f.is_finite() || g.iter().any(|v| !v.is_finite()) {
        return Err(OptimError::NonFiniteObjective);
    }

    // inverse Hessian approximation, row-major
    let mut h: Vec<Vec<f64>> = (0..d)
        .map(|i| (0..d).map(|j| f64::from(u8::from(i == j))).collect())
        .collect();
    let mut first_update_done = false;

    let finish = |x: Vec<f64>, f: f64, g: &[f64], iterations: usize, status: OptimStatus| {
        Ok(OptimResult {
            x,
            f,
            gradient_norm: norm(g),
            iterations,
            status,
            min_hessian_eigenvalue: None,
            saddle_escapes: 0,
        })
    };

    for iter in 0..cfg.max_iterations {
        if norm(&g) <= cfg.gradient_tol * (1.0 + f.abs()) {
            return finish(x, f, &g, iter, OptimStatus::Converged);
        }

        // p = -H g, reset to steepest descent if numerics broke descent
        let mut p: Vec<f64> = h.iter().map(|row| -dot(row, &g)).collect();
        if dot(&p, &g) >= 0.0 {
            for (pi, gi) in p.iter_mut().zip(&g) {
                *pi = -gi;
            }
            for (i, row) in h.iter_mut().enumerate() {
                for (j, v) in row.iter_mut().enumerate() {
                    *v = f64::from(u8::from(i == j));
                }
            }
        }

        let g0_dot_p = dot(&g, &p);
        let Some(hit) = wolfe_search(obj, &x, &p, f, g0_dot_p, cfg) else {
            return finish(x, f, &g, iter, OptimStatus::LineSearchFailure);
        };

        let s: Vec<f64> = p.iter().map(|pi| hit.alpha * pi).collect();
        let y: Vec<f64> = hit.grad.iter().zip(&g).map(|(gn, go)| gn - go).collect();
        for (xi, si) in x.iter_mut().zip(&s) {
            *xi += si;
        }
        f = hit.f;
        g = hit.grad;

        let ys = dot(&y, &s);
        if ys > 1e-12 * norm(&y) * norm(&s) {
            if !first_update_done {
                let scale = ys / dot(&y, &y);
                if scale.is_finite() && scale > 0.0 {
                    for (i, row) in h.iter_mut().enumerate() {
                        for (j, v) in row.iter_mut().enumerate() {
                            *v = if i == j { scale } else { 0.0 };
                        }
                    }
                }
                first_update_done = true;
            }
            // H <- (I - r s y') H (I - r y s') + r s s',  r = 1/ys
            let r = 1.0 / ys;
            let hy: Vec<f64> = h.iter().map(|row| dot(row, &y)).collect();
            let yhy = dot(&y, &hy);
            for i in 0..d {
                for j in 0..d {
                    h[i][j] += -r * (s[i] * hy[j] + hy[i] * s[j])
                        + r * r * yhy * s[i] * s[j]
                        + r * s[i] * s[j];
                }
            }
        }
    }
    finish(x, f, &g, cfg.max_iterations, OptimStatus::MaxIter)
}
