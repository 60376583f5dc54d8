//! The optimizer stack on hand-picked surfaces.
//!
//! BFGS handles the smooth well-conditioned case; the trust-region Newton
//! method certifies curvature at convergence and pushes through saddle
//! points along the most negative eigendirection.

use llrcal::optim::{bfgs, trust_region_newton, BfgsConfig, ScalarObjective, TrustRegionConfig};
use llrcal::scalar::Scalar;

struct Rosenbrock;
impl ScalarObjective for Rosenbrock {
    fn dim(&self) -> usize {
        2
    }
    fn eval<S: Scalar>(&self, x: &[S]) -> S {
        let a = S::from_f64(1.0) - x[0];
        let b = x[1] - x[0] * x[0];
        a * a + S::from_f64(100.0) * b * b
    }
}

// f(x, y) = x^4/4 - x^2/2 + y^2/2 has a saddle at the origin and two minima
struct DoubleWell;
impl ScalarObjective for DoubleWell {
    fn dim(&self) -> usize {
        2
    }
    fn eval<S: Scalar>(&self, x: &[S]) -> S {
        let x2 = x[0] * x[0];
        x2 * x2 * S::from_f64(0.25) - x2 * S::from_f64(0.5)
            + x[1] * x[1] * S::from_f64(0.5)
    }
}

struct PureSaddle;
impl ScalarObjective for PureSaddle {
    fn dim(&self) -> usize {
        2
    }
    fn eval<S: Scalar>(&self, x: &[S]) -> S {
        x[0] * x[0] - x[1] * x[1]
    }
}

fn main() {
    let r = bfgs(&Rosenbrock, &[-1.2, 1.0], &BfgsConfig::default()).unwrap();
    println!(
        "bfgs on rosenbrock:        {:?} in {} iterations, x = ({:.6}, {:.6})",
        r.status, r.iterations, r.x[0], r.x[1]
    );

    let cfg = TrustRegionConfig::default();
    let r = trust_region_newton(&DoubleWell, &[0.0, 0.0], &cfg).unwrap();
    println!(
        "trust region, double well: {:?} after {} saddle escape(s), x = ({:+.4}, {:+.4}), f = {:.4}",
        r.status, r.saddle_escapes, r.x[0], r.x[1], r.f
    );

    let budget = TrustRegionConfig {
        max_iterations: 50,
        ..cfg
    };
    let r = trust_region_newton(&PureSaddle, &[0.0, 0.0], &budget).unwrap();
    println!(
        "trust region, x^2 - y^2:   {:?} with {} escape(s); unbounded below, ran to f = {:.3e}",
        r.status, r.saddle_escapes, r.f
    );
}
