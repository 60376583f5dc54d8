//! Score distribution families and their log-densities.
//!
//! Three families model class-conditional score distributions: Gaussian,
//! Student-T (symmetric heavy tails), and normal-inverse-Gaussian (heavy
//! tails plus skew). Log-densities are generic over [`Scalar`], so the same
//! code yields values, forward-mode gradients, and complex-step derivatives.
//!
//! Maximum-likelihood fitting runs in unconstrained coordinates. Positive
//! parameters are carried as square roots (`v = u^2`), and the NIG cone
//! `alpha > |beta|` as `(beta, w)` with `alpha = |beta| + w^2`. Squaring maps
//! keep gradients usable far from the optimum, where exponentials would
//! saturate.

use crate::scalar::Scalar;
use crate::special::{bessel_k1_scaled, ln_gamma, LN_PI};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DistError {
    #[error("invalid {family} parameters: {reason}")]
    InvalidParams {
        family: &'static str,
        reason: String,
    },
    #[error("non-finite unconstrained coordinate")]
    NonFiniteCoordinate,
    #[error("unconstrained vector has length {got}, expected {want}")]
    WrongLength { want: usize, got: usize },
    #[error("NIG boundary: w = 0 collapses the shape cone (alpha = |beta|)")]
    NigBoundary,
}

const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// Gaussian with mean `mu` and variance `v`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaussianParams {
    pub mu: f64,
    pub v: f64,
}

/// Student-T with location `mu`, scale `sigma`, and degrees of freedom `nu`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StudentTParams {
    pub mu: f64,
    pub sigma: f64,
    pub nu: f64,
}

/// Normal-inverse-Gaussian with location `mu`, scale `delta`, tail weight
/// `alpha`, and skew `beta`; requires `alpha > |beta|`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NigParams {
    pub mu: f64,
    pub delta: f64,
    pub alpha: f64,
    pub beta: f64,
}

fn invalid(family: &'static str, reason: impl Into<String>) -> DistError {
    DistError::InvalidParams {
        family,
        reason: reason.into(),
    }
}

impl GaussianParams {
    pub fn new(mu: f64, v: f64) -> Result<Self, DistError> {
        let p = GaussianParams { mu, v };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), DistError> {
        if !(self.mu.is_finite() && self.v.is_finite()) {
            return Err(invalid("gaussian", "non-finite parameter"));
        }
        if self.v <= 0.0 {
            return Err(invalid("gaussian", format!("variance {} <= 0", self.v)));
        }
        Ok(())
    }

    pub fn logpdf(&self, s: f64) -> f64 {
        gauss_logpdf(s, self.mu, self.v)
    }

    /// Coordinates `[mu, sqrt(v)]`.
    pub fn unconstrain(&self) -> Vec<f64> {
        vec![self.mu, self.v.sqrt()]
    }

    pub fn constrain(u: &[f64]) -> Result<Self, DistError> {
        check_coords(u, 2)?;
        let (mu, v) = gaussian_from_unconstrained(u);
        GaussianParams::new(mu, v)
    }
}

impl StudentTParams {
    pub fn new(mu: f64, sigma: f64, nu: f64) -> Result<Self, DistError> {
        let p = StudentTParams { mu, sigma, nu };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), DistError> {
        if !(self.mu.is_finite() && self.sigma.is_finite() && self.nu.is_finite()) {
            return Err(invalid("student-t", "non-finite parameter"));
        }
        if self.sigma <= 0.0 {
            return Err(invalid("student-t", format!("scale {} <= 0", self.sigma)));
        }
        if self.nu <= 0.0 {
            return Err(invalid(
                "student-t",
                format!("degrees of freedom {} <= 0", self.nu),
            ));
        }
        Ok(())
    }

    pub fn logpdf(&self, s: f64) -> f64 {
        t_logpdf(s, self.mu, self.sigma, self.nu)
    }

    /// Coordinates `[mu, sqrt(sigma), sqrt(nu)]`.
    pub fn unconstrain(&self) -> Vec<f64> {
        vec![self.mu, self.sigma.sqrt(), self.nu.sqrt()]
    }

    pub fn constrain(u: &[f64]) -> Result<Self, DistError> {
        check_coords(u, 3)?;
        let (mu, sigma, nu) = t_from_unconstrained(u);
        StudentTParams::new(mu, sigma, nu)
    }
}

impl NigParams {
    pub fn new(mu: f64, delta: f64, alpha: f64, beta: f64) -> Result<Self, DistError> {
        let p = NigParams {
            mu,
            delta,
            alpha,
            beta,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), DistError> {
        let all_finite = self.mu.is_finite()
            && self.delta.is_finite()
            && self.alpha.is_finite()
            && self.beta.is_finite();
        if !all_finite {
            return Err(invalid("nig", "non-finite parameter"));
        }
        if self.delta <= 0.0 {
            return Err(invalid("nig", format!("scale delta {} <= 0", self.delta)));
        }
        if self.alpha <= self.beta.abs() {
            return Err(invalid(
                "nig",
                format!("requires alpha > |beta|, got alpha {} beta {}", self.alpha, self.beta),
            ));
        }
        Ok(())
    }

    pub fn logpdf(&self, s: f64) -> f64 {
        nig_logpdf(s, self.mu, self.delta, self.alpha, self.beta)
    }

    /// Mean of the distribution: `mu + delta beta / gamma`.
    pub fn mean(&self) -> f64 {
        let gamma = (self.alpha * self.alpha - self.beta * self.beta).sqrt();
        self.mu + self.delta * self.beta / gamma
    }

    /// Coordinates `[mu, sqrt(delta), beta, w]` with `alpha = |beta| + w^2`.
    pub fn unconstrain(&self) -> Vec<f64> {
        vec![
            self.mu,
            self.delta.sqrt(),
            self.beta,
            (self.alpha - self.beta.abs()).sqrt(),
        ]
    }

    pub fn constrain(u: &[f64]) -> Result<Self, DistError> {
        check_coords(u, 4)?;
        if u[3] == 0.0 {
            return Err(DistError::NigBoundary);
        }
        let (mu, delta, alpha, beta) = nig_from_unconstrained(u);
        NigParams::new(mu, delta, alpha, beta)
    }
}

fn check_coords(u: &[f64], want: usize) -> Result<(), DistError> {
    if u.len() != want {
        return Err(DistError::WrongLength { want, got: u.len() });
    }
    if u.iter().any(|c| !c.is_finite()) {
        return Err(DistError::NonFiniteCoordinate);
    }
    Ok(())
}

/// `(mu, v)` from `[mu, r]` with `v = r^2`.
pub fn gaussian_from_unconstrained<S: Scalar>(u: &[S]) -> (S, S) {
    (u[0], u[1] * u[1])
}

/// `(mu, sigma, nu)` from `[mu, r_sigma, r_nu]`.
pub fn t_from_unconstrained<S: Scalar>(u: &[S]) -> (S, S, S) {
    (u[0], u[1] * u[1], u[2] * u[2])
}

/// `(mu, delta, alpha, beta)` from `[mu, r_delta, beta, w]`.
pub fn nig_from_unconstrained<S: Scalar>(u: &[S]) -> (S, S, S, S) {
    let beta = u[2];
    let alpha = beta.abs() + u[3] * u[3];
    (u[0], u[1] * u[1], alpha, beta)
}

/// Gaussian log-density.
pub fn gauss_logpdf<S: Scalar>(s: S, mu: S, v: S) -> S {
    let d = s - mu;
    let half = S::from_f64(0.5);
    -half * (S::from_f64(LN_2PI) + v.ln()) - d * d / (S::from_f64(2.0) * v)
}

/// Score-independent pieces of the Student-T log-density, hoisted so a fit
/// over many scores pays the gamma-function cost once:
/// `log f = c - a ln1p(((s - mu) inv_sigma)^2 inv_nu)`.
pub(crate) fn t_logpdf_prefix<S: Scalar>(mu: S, sigma: S, nu: S) -> TPrefix<S> {
    let half = S::from_f64(0.5);
    let half_nu = half * nu;
    let a = half_nu + half;
    let c = ln_gamma(a) - ln_gamma(half_nu) - half * (nu.ln() + S::from_f64(LN_PI)) - sigma.ln();
    TPrefix {
        mu,
        c,
        a,
        inv_sigma: S::from_f64(1.0) / sigma,
        inv_nu: S::from_f64(1.0) / nu,
    }
}

#[derive(Clone, Copy)]
pub(crate) struct TPrefix<S> {
    mu: S,
    c: S,
    a: S,
    inv_sigma: S,
    inv_nu: S,
}

impl<S: Scalar> TPrefix<S> {
    pub(crate) fn logpdf(&self, s: S) -> S {
        let z = (s - self.mu) * self.inv_sigma;
        self.c - self.a * (z * z * self.inv_nu).ln_1p()
    }
}

/// Student-T log-density with location/scale/dof.
pub fn t_logpdf<S: Scalar>(s: S, mu: S, sigma: S, nu: S) -> S {
    t_logpdf_prefix(mu, sigma, nu).logpdf(s)
}

/// Normal-inverse-Gaussian log-density, evaluated through the scaled Bessel
/// function so it stays finite far into the tails:
///
///   log f = log(alpha delta / pi) + delta gamma + beta (s - mu)
///           - alpha q + log(e^{alpha q} K1(alpha q)) - log q,
///   q = sqrt(delta^2 + (s - mu)^2),  gamma = sqrt(alpha^2 - beta^2).
pub fn nig_logpdf<S: Scalar>(s: S, mu: S, delta: S, alpha: S, beta: S) -> S {
    nig_logpdf_prefix(mu, delta, alpha, beta).logpdf(s)
}

/// Score-independent pieces of the NIG log-density.
pub(crate) fn nig_logpdf_prefix<S: Scalar>(mu: S, delta: S, alpha: S, beta: S) -> NigPrefix<S> {
    let gamma = (alpha * alpha - beta * beta).sqrt();
    NigPrefix {
        mu,
        alpha,
        beta,
        c: (alpha * delta).ln() - S::from_f64(LN_PI) + delta * gamma,
        delta_sq: delta * delta,
    }
}

#[derive(Clone, Copy)]
pub(crate) struct NigPrefix<S> {
    mu: S,
    alpha: S,
    beta: S,
    c: S,
    delta_sq: S,
}

impl<S: Scalar> NigPrefix<S> {
    pub(crate) fn logpdf(&self, s: S) -> S {
        let d = s - self.mu;
        let q = (self.delta_sq + d * d).sqrt();
        let aq = self.alpha * q;
        self.c + self.beta * d - aq + (bessel_k1_scaled(aq) / q).ln()
    }
}
