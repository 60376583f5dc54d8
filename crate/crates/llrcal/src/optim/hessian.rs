//! Hessian-vector products and dense Hessian assembly.

use super::{Objective, OptimError, ScalarObjective, COMPLEX_STEP};
use crate::scalar::Dual;
use num_complex::Complex64;

/// Core of the forward-over-complex Hessian-vector product: evaluate `eval`
/// over `Dual<Complex64>` where the complex imaginary part carries the
/// direction `v` (step 1e-150) and the dual part selects the coordinate.
/// Row `j` of the result is `Im(d eval / d x_j) / h = (H v)_j`.
pub(super) fn hvp_with<F>(x: &[f64], v: &[f64], eval: F) -> Vec<f64>
where
    F: Fn(&[Dual<Complex64>]) -> Dual<Complex64>,
{
    assert_eq!(x.len(), v.len());
    let mut z: Vec<Dual<Complex64>> = x
        .iter()
        .zip(v)
        .map(|(&xk, &vk)| Dual::constant(Complex64::new(xk, COMPLEX_STEP * vk)))
        .collect();
    let mut out = vec![0.0; x.len()];
    for (j, o) in out.iter_mut().enumerate() {
        z[j].der = Complex64::new(1.0, 0.0);
        *o = eval(&z).der.im / COMPLEX_STEP;
        z[j].der = Complex64::new(0.0, 0.0);
    }
    out
}

/// Directional derivative of the gradient along `v`: the exact
/// Hessian-vector product of a generic-scalar objective.
pub fn hvp_forward<O: ScalarObjective + ?Sized>(obj: &O, x: &[f64], v: &[f64]) -> Vec<f64> {
    hvp_with(x, v, |z| obj.eval(z))
}

/// Assemble the full (symmetrized) Hessian from `dim` Hessian-vector
/// products against unit vectors. With `rho < 1` the products may be taken
/// on a deterministic data subsample chosen from `seed`; `rho = 1` is exact
/// and bit-reproducible regardless of `seed`.
pub fn build_hessian<O: Objective + ?Sized>(
    obj: &O,
    x: &[f64],
    rho: f64,
    seed: u64,
) -> Result<Vec<Vec<f64>>, OptimError> {
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(OptimError::BadSubsample(rho));
    }
    let d = obj.dim();
    if x.len() != d {
        return Err(OptimError::DimensionMismatch {
            want: d,
            got: x.len(),
        });
    }
    let mut cols = Vec::with_capacity(d);
    let mut e = vec![0.0; d];
    for j in 0..d {
        e[j] = 1.0;
        cols.push(obj.hvp_subsampled(x, &e, rho, seed));
        e[j] = 0.0;
    }
    let mut h = vec![vec![0.0; d]; d];
    for i in 0..d {
        for j in 0..d {
            h[i][j] = 0.5 * (cols[j][i] + cols[i][j]);
        }
    }
    Ok(h)
}
