//! Reference implementations used to check everything else.
//!
//! Nothing here touches spectra, projectors or Bell polynomials; each
//! routine evaluates its quantity straight from the definition.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::scalar::Scalar;
use crate::symfun::Alphabet;

/// Default truncation tolerance for [`series_exp`].
pub const DEFAULT_SERIES_TOL: f64 = 1e-13;

/// Largest dimension accepted by [`brute_determinant`].
pub const MAX_BRUTE_DIM: usize = 8;

/// Largest alphabet accepted by [`brute_symmetric`] for elementary functions.
pub const MAX_BRUTE_LETTERS: usize = 12;

/// `e^A` by scaling and squaring around a plain Taylor series.
///
/// `A` is scaled by `2^-s` until its 1-norm is at most `1/2`; terms are
/// summed until the norm of the last one drops below `tol * 2^-s`, then the
/// result is squared `s` times. With the scaled norm at most 1/2 the
/// neglected tail is bounded by twice the last term, so the relative error
/// before squaring is about `tol * 2^-s` and squaring multiplies it by at
/// most `2^s`.
pub fn series_exp(a: &SquareMatrix, tol: f64) -> Result<SquareMatrix> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!("series tolerance must be positive, got {tol}")));
    }
    a.check_finite()?;
    let n = a.dim();
    let norm = a.norm_one();
    let mut s = 0u32;
    while norm / 2f64.powi(s as i32) > 0.5 {
        s += 1;
    }
    let scaled = a.scale_real(2f64.powi(-(s as i32)));
    let threshold = tol * 2f64.powi(-(s as i32));
    let mut sum = SquareMatrix::identity(n);
    let mut term = SquareMatrix::identity(n);
    let mut k = 1usize;
    loop {
        term = (&term * &scaled).scale_real(1.0 / k as f64);
        sum = &sum + &term;
        if term.norm_one() < threshold || k > 200 {
            break;
        }
        k += 1;
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum.check_finite()?;
    Ok(sum)
}

/// Determinant by the signed sum over all permutations.
pub fn brute_determinant(a: &SquareMatrix) -> Result<Complex64> {
    let n = a.dim();
    if n > MAX_BRUTE_DIM {
        return Err(Error::TooLarge(format!(
            "permutation expansion limited to {MAX_BRUTE_DIM}x{MAX_BRUTE_DIM}, got {n}x{n}"
        )));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Complex64::new(0.0, 0.0);
    permute(&mut perm, 0, 1.0, a, &mut total);
    Ok(total)
}

// Recursive transposition enumeration; `parity` tracks the sign.
fn permute(perm: &mut Vec<usize>, start: usize, parity: f64, a: &SquareMatrix, total: &mut Complex64) {
    let n = perm.len();
    if start == n {
        let product = (0..n).fold(Complex64::new(parity, 0.0), |acc, i| acc * a[(i, perm[i])]);
        *total += product;
        return;
    }
    for i in start..n {
        perm.swap(start, i);
        let p = if i == start { parity } else { -parity };
        permute(perm, start + 1, p, a, total);
        perm.swap(start, i);
    }
}

/// Which symmetric function [`brute_symmetric`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetricKind {
    /// Elementary `sigma_j`, by enumerating all `j`-subsets.
    Sigma,
    /// Power sum `s_j`, by raising each letter to the `j`-th power.
    PowerSum,
}

pub fn brute_symmetric<S: Scalar>(kind: SymmetricKind, j: usize, x: &Alphabet<S>) -> Result<S> {
    let letters = x.letters();
    match kind {
        SymmetricKind::PowerSum => {
            let mut total = S::zero();
            for letter in letters {
                let mut p = S::one();
                for _ in 0..j {
                    p = p * letter.clone();
                }
                total = total + p;
            }
            Ok(total)
        }
        SymmetricKind::Sigma => {
            let n = letters.len();
            if n > MAX_BRUTE_LETTERS {
                return Err(Error::TooLarge(format!(
                    "subset enumeration limited to {MAX_BRUTE_LETTERS} letters, got {n}"
                )));
            }
            let mut total = S::zero();
            for mask in 0u32..(1u32 << n) {
                if mask.count_ones() as usize != j {
                    continue;
                }
                let mut word = S::one();
                for (i, letter) in letters.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        word = word * letter.clone();
                    }
                }
                total = total + word;
            }
            Ok(total)
        }
    }
}
