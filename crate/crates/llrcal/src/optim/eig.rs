//! Dense symmetric eigendecomposition by cyclic Jacobi rotations.
//!
//! The matrices here are tiny (calibration objectives have at most a handful
//! of parameters), so the quadratically convergent Jacobi sweep is plenty and
//! keeps the crate free of linear-algebra dependencies.

use super::OptimError;

/// Eigendecomposition of a symmetric matrix.
///
/// Returns `(eigenvalues, eigenvectors)` with eigenvalues ascending and
/// `eigenvectors[k]` the unit-norm eigenvector paired with `eigenvalues[k]`,
/// so `A v_k = lambda_k v_k`. Input must be square and symmetric within
/// `1e-10` (scaled by the largest element).
pub fn eig_sym(a: &[Vec<f64>]) -> Result<(Vec<f64>, Vec<Vec<f64>>), OptimError> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(OptimError::NotSquare);
    }
    let mut maxabs = 0.0f64;
    for row in a {
        for &x in row {
            maxabs = maxabs.max(x.abs());
        }
    }
    let sym_tol = 1e-10 * maxabs.max(1.0);
    for i in 0..n {
        for j in (i + 1)..n {
            if (a[i][j] - a[j][i]).abs() > sym_tol {
                return Err(OptimError::NotSymmetric);
            }
        }
    }
    if n == 0 {
        return Ok((vec![], vec![]));
    }

    let mut m: Vec<Vec<f64>> = a.to_vec();
    // accumulated rotations; columns of `v` become the eigenvectors
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }

    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += m[i][j] * m[i][j];
            }
        }
        if off.sqrt() <= 1e-15 * maxabs.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p][q];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[k][p];
                    let mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p][k];
                    let mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i][i].partial_cmp(&m[j][j]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| m[i][i]).collect();
    let eigenvectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| (0..n).map(|row| v[row][col]).collect())
        .collect();
    Ok((eigenvalues, eigenvectors))
}
