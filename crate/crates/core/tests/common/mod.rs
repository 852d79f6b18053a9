#![allow(dead_code)]

use lieclosed::groups::Vec3;
use lieclosed::{ExactRational, SquareMatrix};
use num_bigint::BigInt;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(p: i64, d: i64) -> ExactRational {
    ExactRational::new(BigInt::from(p), BigInt::from(d))
}

/// A small nonzero-denominator rational `p/d` with `|p| <= 9`, `1 <= d <= 7`.
pub fn rational(rng: &mut ChaCha8Rng) -> ExactRational {
    q(rng.random_range(-9..=9), rng.random_range(1..=7))
}

pub fn nonzero_rational(rng: &mut ChaCha8Rng) -> ExactRational {
    loop {
        let r = rational(rng);
        if r != q(0, 1) {
            return r;
        }
    }
}

/// Uniform in the ball of radius `r`.
pub fn ball(rng: &mut ChaCha8Rng, r: f64) -> Vec3 {
    loop {
        let v: Vec3 = [
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        ];
        let n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        if n2 <= 1.0 {
            return [r * v[0], r * v[1], r * v[2]];
        }
    }
}

/// A vector of length exactly `len` in a uniformly random direction.
pub fn direction(rng: &mut ChaCha8Rng, len: f64) -> Vec3 {
    loop {
        let v = ball(rng, 1.0);
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 1e-3 {
            return [len * v[0] / n, len * v[1] / n, len * v[2] / n];
        }
    }
}

pub fn complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn complex_matrix(rng: &mut ChaCha8Rng, n: usize) -> SquareMatrix {
    SquareMatrix::from_fn(n, |_, _| complex(rng))
}

pub fn real_matrix(rng: &mut ChaCha8Rng, n: usize) -> SquareMatrix {
    SquareMatrix::from_fn(n, |_, _| Complex64::new(rng.random_range(-1.0..1.0), 0.0))
}

/// `max |x - y| / (1 + max |y|)`-style comparison for scalars.
pub fn rel(x: Complex64, y: Complex64) -> f64 {
    (x - y).norm() / (1.0 + y.norm())
}
