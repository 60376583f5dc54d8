//! Seedable, portable random number generation.
//!
//! Synthetic-score streams must be reproducible bit-for-bit from a seed, on
//! any platform and in reimplementations outside Rust. Everything is
//! therefore pinned to named, published algorithms rather than whatever a
//! general-purpose crate happens to ship this year:
//!
//! * state stream: **xoshiro256++** (Blackman & Vigna), seeded by expanding
//!   the 64-bit seed through **SplitMix64**;
//! * uniforms: the top 53 bits mapped to the open interval (0,1) as
//!   `(u >> 11 + 0.5) * 2^-53`;
//! * standard normals: **Box-Muller** (cosine form), consuming exactly two
//!   uniforms per draw;
//! * gamma: **Marsaglia-Tsang** squeeze, with the `U^(1/a)` boost for
//!   shape < 1;
//! * inverse Gaussian: the **Michael-Schucany-Haas** one-root transform.
//!
//! Given the same seed, the sequence of draws for a given call pattern is
//! identical everywhere; tests pin the first outputs of each stream.

/// SplitMix64 step, used only to expand seeds into xoshiro state.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// xoshiro256++ generator.
#[derive(Clone, Debug)]
pub struct Xoshiro256pp {
    s: [u64; 4],
}

impl Xoshiro256pp {
    pub fn new(seed: u64) -> Self {
        let mut sm = seed;
        let s = [
            splitmix64(&mut sm),
            splitmix64(&mut sm),
            splitmix64(&mut sm),
            splitmix64(&mut sm),
        ];
        Xoshiro256pp { s }
    }

    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.s;
        let result = s[0].wrapping_add(s[3]).rotate_left(23).wrapping_add(s[0]);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        result
    }

    /// Uniform on the open interval (0, 1), 53-bit resolution. Never returns
    /// 0 or 1, so logs and inverses downstream are safe.
    pub fn next_uniform(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal draw by Box-Muller (cosine form): two uniforms in,
    /// one normal out.
    pub fn next_normal(&mut self) -> f64 {
        let u1 = self.next_uniform();
        let u2 = self.next_uniform();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }

    /// Gamma(shape, scale = 1) by Marsaglia-Tsang.
    pub fn next_gamma(&mut self, shape: f64) -> f64 {
        assert!(shape > 0.0 && shape.is_finite());
        if shape < 1.0 {
            // boost: G(a) = G(a + 1) * U^(1/a)
            let g = self.next_gamma(shape + 1.0);
            let u = self.next_uniform();
            return g * u.powf(1.0 / shape);
        }
        let d = shape - 1.0 / 3.0;
        let c = 1.0 / (3.0 * d.sqrt());
        loop {
            let x = self.next_normal();
            let v = 1.0 + c * x;
            if v <= 0.0 {
                continue;
            }
            let v = v * v * v;
            let u = self.next_uniform();
            if u.ln() < 0.5 * x * x + d - d * v + d * v.ln() {
                return d * v;
            }
        }
    }

    /// Chi-square with `nu` degrees of freedom (any positive real).
    pub fn next_chi_square(&mut self, nu: f64) -> f64 {
        2.0 * self.next_gamma(0.5 * nu)
    }

    /// Inverse Gaussian with the given mean and shape, by the
    /// Michael-Schucany-Haas transform: solve the smaller root of the
    /// chi-square equation, then pick a root with the size-biased coin.
    pub fn next_inverse_gaussian(&mut self, mean: f64, shape: f64) -> f64 {
        assert!(mean > 0.0 && shape > 0.0);
        let z = self.next_normal();
        let y = z * z;
        let x = mean + mean * mean * y / (2.0 * shape)
            - mean / (2.0 * shape) * (4.0 * mean * shape * y + mean * mean * y * y).sqrt();
        let u = self.next_uniform();
        if u * (mean + x) <= mean {
            x
        } else {
            mean * mean / x
        }
    }
}
