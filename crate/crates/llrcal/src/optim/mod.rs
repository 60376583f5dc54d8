//! Smooth unconstrained minimization: BFGS, trust-region Newton with saddle
//! escape, exact Hessian-vector products, and a small dense symmetric
//! eigensolver.
//!
//! Objectives come in two layers. [`ScalarObjective`] is a function written
//! generically over [`Scalar`]; implementing it buys the full [`Objective`]
//! surface for free, with gradients from forward-mode dual numbers and
//! Hessian-vector products from a complex-step pass over that gradient
//! (machine-precision, no subtractive cancellation; step `1e-150`).
//!
//! Data-backed objectives may override [`ScalarObjective::eval_subsampled`]
//! to evaluate on a deterministic `rho`-fraction subsample; the optimizer
//! exploits that to cheapen per-iteration Hessians on large score sets while
//! always checking final curvature on the full data.
//!
//! Summations over score sets use a fixed-order blocked scheme (4096-element
//! blocks, pairwise combination), so results are reproducible regardless of
//! how the work might be scheduled.

mod bfgs;
mod eig;
mod hessian;
mod trust_region;

pub use bfgs::bfgs;
pub use eig::eig_sym;
pub use hessian::{build_hessian, hvp_forward};
pub use trust_region::{escape_saddle, trust_region_newton};

use crate::rng::Xoshiro256pp;
use crate::scalar::{Dual, Scalar};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum OptimError {
    #[error("bad optimizer config: {0}")]
    BadConfig(String),
    #[error("dimension mismatch: objective has {want} coordinates, point has {got}")]
    DimensionMismatch { want: usize, got: usize },
    #[error("objective is non-finite at the starting point")]
    NonFiniteObjective,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is asymmetric beyond tolerance 1e-10")]
    NotSymmetric,
    #[error("subsample fraction {0} outside (0, 1]")]
    BadSubsample(f64),
    #[error(
        "saddle escape precondition violated: min eigenvalue {lambda_min:e} is not below {threshold:e}"
    )]
    SaddlePrecondition { lambda_min: f64, threshold: f64 },
    #[error("saddle escape found no decrease after 40 backtracks in either direction")]
    NoDecreaseFound,
}

/// A function of several reals, written once over generic scalars.
pub trait ScalarObjective {
    fn dim(&self) -> usize;

    fn eval<S: Scalar>(&self, x: &[S]) -> S;

    /// Like [`eval`](Self::eval) but with any expensive per-datum sums taken
    /// over a `rho`-fraction subsample chosen deterministically from `seed`
    /// and rescaled to an unbiased estimate. The default ignores the request.
    fn eval_subsampled<S: Scalar>(&self, x: &[S], rho: f64, seed: u64) -> S {
        let _ = (rho, seed);
        self.eval(x)
    }
}

/// The interface the minimizers run against.
pub trait Objective {
    fn dim(&self) -> usize;
    fn value(&self, x: &[f64]) -> f64;
    fn gradient(&self, x: &[f64]) -> Vec<f64>;

    fn value_and_gradient(&self, x: &[f64]) -> (f64, Vec<f64>) {
        (self.value(x), self.gradient(x))
    }

    /// Exact Hessian-vector product.
    fn hvp(&self, x: &[f64], v: &[f64]) -> Vec<f64>;

    /// Hessian-vector product on a deterministic subsample; `rho = 1` must
    /// be bit-identical to [`hvp`](Self::hvp).
    fn hvp_subsampled(&self, x: &[f64], v: &[f64], rho: f64, seed: u64) -> Vec<f64> {
        let _ = (rho, seed);
        self.hvp(x, v)
    }
}

const COMPLEX_STEP: f64 = 1e-150;

impl<T: ScalarObjective> Objective for T {
    fn dim(&self) -> usize {
        ScalarObjective::dim(self)
    }

    fn value(&self, x: &[f64]) -> f64 {
        self.eval(x)
    }

    fn gradient(&self, x: &[f64]) -> Vec<f64> {
        self.value_and_gradient(x).1
    }

    fn value_and_gradient(&self, x: &[f64]) -> (f64, Vec<f64>) {
        let d = ScalarObjective::dim(self);
        let mut grad = vec![0.0; d];
        let mut val = 0.0;
        let mut z: Vec<Dual<f64>> = x.iter().map(|&xk| Dual::constant(xk)).collect();
        for (j, g) in grad.iter_mut().enumerate() {
            z[j].der = 1.0;
            let out = self.eval(&z);
            z[j].der = 0.0;
            *g = out.der;
            val = out.val;
        }
        (val, grad)
    }

    fn hvp(&self, x: &[f64], v: &[f64]) -> Vec<f64> {
        hessian::hvp_with(x, v, |z| self.eval(z))
    }

    fn hvp_subsampled(&self, x: &[f64], v: &[f64], rho: f64, seed: u64) -> Vec<f64> {
        if rho >= 1.0 {
            return self.hvp(x, v);
        }
        hessian::hvp_with(x, v, |z| self.eval_subsampled(z, rho, seed))
    }
}

/// How a minimization run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OptimStatus {
    /// First-order (and, where checked, second-order) conditions met.
    Converged,
    /// Iteration budget exhausted; also reported when the objective is
    /// decreasing without bound.
    MaxIter,
    /// Converged after at least one deliberate move off a saddle point.
    EscapedSaddleThenConverged,
    /// The one-dimensional search (Wolfe line search, or the trust-region
    /// radius / saddle-escape backtracking) could make no further progress.
    LineSearchFailure,
}

/// Outcome of a minimization.
#[derive(Clone, Debug)]
pub struct OptimResult {
    pub x: Vec<f64>,
    pub f: f64,
    pub gradient_norm: f64,
    pub iterations: usize,
    pub status: OptimStatus,
    /// Smallest eigenvalue of the most recently built Hessian, if any was
    /// built (trust-region runs always build one at convergence).
    pub min_hessian_eigenvalue: Option<f64>,
    /// Number of saddle-escape moves taken.
    pub saddle_escapes: usize,
}

impl OptimResult {
    pub fn converged(&self) -> bool {
        matches!(
            self.status,
            OptimStatus::Converged | OptimStatus::EscapedSaddleThenConverged
        )
    }
}

/// BFGS settings. Convergence is declared when the gradient norm falls to
/// `gradient_tol * (1 + |f|)`.
#[derive(Clone, Copy, Debug)]
pub struct BfgsConfig {
    pub gradient_tol: f64,
    pub max_iterations: usize,
    pub wolfe_c1: f64,
    pub wolfe_c2: f64,
}

impl Default for BfgsConfig {
    fn default() -> Self {
        BfgsConfig {
            gradient_tol: 1e-8,
            max_iterations: 500,
            wolfe_c1: 1e-4,
            wolfe_c2: 0.9,
        }
    }
}

impl BfgsConfig {
    pub(crate) fn validate(&self) -> Result<(), OptimError> {
        if !(self.gradient_tol > 0.0 && self.gradient_tol.is_finite()) {
            return Err(OptimError::BadConfig("gradient_tol must be positive".into()));
        }
        if self.max_iterations == 0 {
            return Err(OptimError::BadConfig("max_iterations must be positive".into()));
        }
        if !(0.0 < self.wolfe_c1 && self.wolfe_c1 < self.wolfe_c2 && self.wolfe_c2 < 1.0) {
            return Err(OptimError::BadConfig(
                "Wolfe constants need 0 < c1 < c2 < 1".into(),
            ));
        }
        Ok(())
    }
}

/// Trust-region Newton settings.
#[derive(Clone, Copy, Debug)]
pub struct TrustRegionConfig {
    pub gradient_tol: f64,
    pub max_iterations: usize,
    pub initial_radius: f64,
    /// Fraction of the data used for per-iteration Hessian-vector products;
    /// 1.0 means exact. The convergence-time curvature check always uses 1.0.
    pub hessian_subsample: f64,
    pub subsample_seed: u64,
    /// Eigenvalues below this are treated as escapable negative curvature.
    pub curvature_threshold: f64,
}

impl Default for TrustRegionConfig {
    fn default() -> Self {
        TrustRegionConfig {
            gradient_tol: 1e-8,
            max_iterations: 500,
            initial_radius: 1.0,
            hessian_subsample: 1.0,
            subsample_seed: 0,
            curvature_threshold: -1e-8,
        }
    }
}

impl TrustRegionConfig {
    pub(crate) fn validate(&self) -> Result<(), OptimError> {
        if !(self.gradient_tol > 0.0 && self.gradient_tol.is_finite()) {
            return Err(OptimError::BadConfig("gradient_tol must be positive".into()));
        }
        if self.max_iterations == 0 {
            return Err(OptimError::BadConfig("max_iterations must be positive".into()));
        }
        if !(self.initial_radius > 0.0 && self.initial_radius.is_finite()) {
            return Err(OptimError::BadConfig("initial_radius must be positive".into()));
        }
        if !(self.hessian_subsample > 0.0 && self.hessian_subsample <= 1.0) {
            return Err(OptimError::BadSubsample(self.hessian_subsample));
        }
        if !self.curvature_threshold.is_finite() || self.curvature_threshold > 0.0 {
            return Err(OptimError::BadConfig(
                "curvature_threshold must be finite and non-positive".into(),
            ));
        }
        Ok(())
    }
}

/// Deterministic sum of `term(0..n)`: sequential within 4096-element blocks,
/// pairwise combination of block sums. The fixed shape makes results
/// independent of any internal parallel scheduling and keeps rounding error
/// logarithmic in `n`.
pub fn blocked_sum<S: Scalar>(n: usize, term: impl Fn(usize) -> S) -> S {
    const BLOCK: usize = 4096;
    let zero = S::from_f64(0.0);
    if n == 0 {
        return zero;
    }
    let mut partials: Vec<S> = Vec::with_capacity(n.div_ceil(BLOCK));
    let mut start = 0;
    while start < n {
        let end = (start + BLOCK).min(n);
        let mut acc = zero;
        for i in start..end {
            acc = acc + term(i);
        }
        partials.push(acc);
        start = end;
    }
    while partials.len() > 1 {
        let mut next = Vec::with_capacity(partials.len().div_ceil(2));
        for pair in partials.chunks(2) {
            next.push(if pair.len() == 2 {
                pair[0] + pair[1]
            } else {
                pair[0]
            });
        }
        partials = next;
    }
    partials[0]
}

/// Choose `max(1, round(rho * n))` distinct indices in `0..n`, deterministic
/// in `seed`, returned sorted so downstream sums have a fixed order.
pub fn subsample_indices(n: usize, rho: f64, seed: u64) -> Vec<usize> {
    assert!(rho > 0.0 && rho <= 1.0, "rho must be in (0, 1]");
    let k = (((rho * n as f64).round() as usize).max(1)).min(n);
    let mut rng = Xoshiro256pp::new(seed);
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = i + (rng.next_u64() % (n - i) as u64) as usize;
        idx.swap(i, j);
    }
    idx.truncate(k);
    idx.sort_unstable();
    idx
}
