//! Generic differentiable scalars.
//!
//! Every log-density and objective in this crate is written once, generically
//! over [`Scalar`], and can then be evaluated three ways:
//!
//! * plain `f64` for values,
//! * [`num_complex::Complex64`] with an infinitesimal imaginary part
//!   (complex-step differentiation, step sizes down to `1e-150` are fine
//!   because no subtraction of near-equal quantities is involved),
//! * first-order dual numbers [`Dual`] for forward-mode derivatives.
//!
//! The three paths run the same arithmetic, so their real parts agree to
//! machine precision; tests pin the agreement at `1e-12`. Nesting works too:
//! `Dual<Complex64>` gives the complex-step directional derivative of a
//! dual-mode gradient, which is how exact Hessian-vector products are formed.

use num_complex::Complex64;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A real-like scalar supporting the elementary functions the densities need.
///
/// Branch decisions (series cutoffs, `abs`, softplus halves) must be made on
/// the real part only, so that perturbed evaluations follow the same path as
/// the `f64` evaluation they are differentiating.
pub trait Scalar:
    Copy
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_f64(v: f64) -> Self;

    /// Real part of the value (the "primal" for dual numbers).
    fn re(self) -> f64;

    fn ln(self) -> Self;
    fn exp(self) -> Self;
    fn sqrt(self) -> Self;

    fn ln_1p(self) -> Self {
        (Self::from_f64(1.0) + self).ln()
    }

    /// Magnitude with the sign decided by the real part. For real scalars
    /// this is `|x|`; for perturbed scalars it keeps the perturbation attached
    /// so `d|x|/dx = sign(x)` falls out (right-derivative `+1` at zero).
    fn abs(self) -> Self {
        if self.re() < 0.0 {
            -self
        } else {
            self
        }
    }
}

impl Scalar for f64 {
    #[inline]
    fn from_f64(v: f64) -> Self {
        v
    }
    #[inline]
    fn re(self) -> f64 {
        self
    }
    #[inline]
    fn ln(self) -> Self {
        f64::ln(self)
    }
    #[inline]
    fn exp(self) -> Self {
        f64::exp(self)
    }
    #[inline]
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    #[inline]
    fn ln_1p(self) -> Self {
        f64::ln_1p(self)
    }
    #[inline]
    fn abs(self) -> Self {
        f64::abs(self)
    }
}

impl Scalar for Complex64 {
    #[inline]
    fn from_f64(v: f64) -> Self {
        Complex64::new(v, 0.0)
    }
    #[inline]
    fn re(self) -> f64 {
        self.re
    }
    #[inline]
    fn ln(self) -> Self {
        Complex64::ln(self)
    }
    #[inline]
    fn exp(self) -> Self {
        Complex64::exp(self)
    }
    #[inline]
    fn sqrt(self) -> Self {
        Complex64::sqrt(self)
    }
}

/// First-order dual number `val + der * eps` with `eps^2 = 0`.
///
/// Generic over the inner scalar so duals can be stacked on top of the
/// complex-step path (`Dual<Complex64>`) for second-order information.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dual<T> {
    pub val: T,
    pub der: T,
}

pub type Dual64 = Dual<f64>;

impl<T: Scalar> Dual<T> {
    /// A constant: derivative zero.
    pub fn constant(val: T) -> Self {
        Dual {
            val,
            der: T::from_f64(0.0),
        }
    }

    /// The seed for differentiating with respect to this variable.
    pub fn variable(val: T) -> Self {
        Dual {
            val,
            der: T::from_f64(1.0),
        }
    }
}

impl<T: Scalar> Add for Dual<T> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Dual {
            val: self.val + rhs.val,
            der: self.der + rhs.der,
        }
    }
}

impl<T: Scalar> Sub for Dual<T> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Dual {
            val: self.val - rhs.val,
            der: self.der - rhs.der,
        }
    }
}

impl<T: Scalar> Mul for Dual<T> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Dual {
            val: self.val * rhs.val,
            der: self.der * rhs.val + self.val * rhs.der,
        }
    }
}

impl<T: Scalar> Div for Dual<T> {
    type Output = Self;
    #[inline]
    fn div(self, rhs: Self) -> Self {
        let inv = T::from_f64(1.0) / rhs.val;
        Dual {
            val: self.val * inv,
            der: (self.der - self.val * inv * rhs.der) * inv,
        }
    }
}

impl<T: Scalar> Neg for Dual<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Dual {
            val: -self.val,
            der: -self.der,
        }
    }
}

impl<T: Scalar> Scalar for Dual<T> {
    #[inline]
    fn from_f64(v: f64) -> Self {
        Dual::constant(T::from_f64(v))
    }
    #[inline]
    fn re(self) -> f64 {
        self.val.re()
    }
    #[inline]
    fn ln(self) -> Self {
        Dual {
            val: self.val.ln(),
            der: self.der / self.val,
        }
    }
    #[inline]
    fn exp(self) -> Self {
        let e = self.val.exp();
        Dual {
            val: e,
            der: self.der * e,
        }
    }
    #[inline]
    fn sqrt(self) -> Self {
        let r = self.val.sqrt();
        Dual {
            val: r,
            der: self.der / (T::from_f64(2.0) * r),
        }
    }
    #[inline]
    fn ln_1p(self) -> Self {
        Dual {
            val: self.val.ln_1p(),
            der: self.der / (T::from_f64(1.0) + self.val),
        }
    }
}
