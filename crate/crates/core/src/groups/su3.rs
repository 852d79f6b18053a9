use num_complex::Complex64;

use super::check_finite;
use crate::error::Result;
use crate::matrix::SquareMatrix;
use crate::zmethod::matrix_exp;

/// Coordinates `alpha_1..alpha_8` in the Gell-Mann basis (stored 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Su3Params {
    pub alpha: [f64; 8],
}

impl Su3Params {
    pub fn new(alpha: [f64; 8]) -> Self {
        Su3Params { alpha }
    }

    pub fn element(&self) -> SquareMatrix {
        su3_element(self)
    }
}

const INV_SQRT3: f64 = 0.577_350_269_189_625_8;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The Gell-Mann matrix `lambda_k` for `k` in `1..=8`, normalised so that
/// `tr lambda_j lambda_k = 2 delta_jk`.
pub fn gell_mann(k: usize) -> SquareMatrix {
    let mut alpha = [0.0; 8];
    assert!((1..=8).contains(&k), "Gell-Mann index {k} outside 1..=8");
    alpha[k - 1] = 1.0;
    su3_element(&Su3Params { alpha })
}

/// `W = sum_k alpha_k lambda_k`, hermitian and traceless.
pub fn su3_element(p: &Su3Params) -> SquareMatrix {
    let a = &p.alpha;
    let s = INV_SQRT3;
    let w01 = c(a[0], -a[1]);
    let w02 = c(a[3], -a[4]);
    let w12 = c(a[5], -a[6]);
    SquareMatrix::from_fn(3, |i, j| match (i, j) {
        (0, 0) => c(a[2] + s * a[7], 0.0),
        (1, 1) => c(-a[2] + s * a[7], 0.0),
        (2, 2) => c(-2.0 * s * a[7], 0.0),
        (0, 1) => w01,
        (1, 0) => w01.conj(),
        (0, 2) => w02,
        (2, 0) => w02.conj(),
        (1, 2) => w12,
        _ => w12.conj(),
    })
}

/// `W^2` written out entrywise.
pub fn su3_square(p: &Su3Params) -> SquareMatrix {
    let a = &p.alpha;
    let s = INV_SQRT3;
    let a12 = c(a[0], a[1]);
    let a45 = c(a[3], a[4]);
    let a67 = c(a[5], a[6]);
    let a38 = a[2] + s * a[7];
    let a38s = a[2] - s * a[7];
    let a8 = a[7];
    let m00 = a12.norm_sqr() + a45.norm_sqr() + a38 * a38;
    let m11 = a12.norm_sqr() + a67.norm_sqr() + a38s * a38s;
    let m22 = a45.norm_sqr() + a67.norm_sqr() + 4.0 * a8 * a8 / 3.0;
    let m01 = a45.conj() * a67 + 2.0 * s * a8 * a12.conj();
    let m02 = a38 * a45.conj() + a12.conj() * a67.conj() - 2.0 * s * a8 * a45.conj();
    let m12 = a12 * a45.conj() - a67.conj() * a38;
    SquareMatrix::from_fn(3, |i, j| match (i, j) {
        (0, 0) => c(m00, 0.0),
        (1, 1) => c(m11, 0.0),
        (2, 2) => c(m22, 0.0),
        (0, 1) => m01,
        (1, 0) => m01.conj(),
        (0, 2) => m02,
        (2, 0) => m02.conj(),
        (1, 2) => m12,
        _ => m12.conj(),
    })
}

/// `det W` as a cubic polynomial in the coordinates.
pub fn su3_determinant(p: &Su3Params) -> f64 {
    let x = &p.alpha;
    let sq = |v: f64| v * v;
    2.0 * (x[0] * x[3] * x[5] + x[1] * x[4] * x[5] - x[1] * x[3] * x[6] + x[0] * x[4] * x[6])
        + x[2] * (sq(x[3]) + sq(x[4]) - sq(x[5]) - sq(x[6]))
        + INV_SQRT3
            * (2.0 * (sq(x[0]) + sq(x[1]) + sq(x[2]))
                - sq(x[3])
                - sq(x[4])
                - sq(x[5])
                - sq(x[6])
                - 2.0 * sq(x[7]) / 3.0)
            * x[7]
}

/// `(phi_2, phi_3) = (-sum alpha_k^2, -det W)`; `phi_1 = 0` always.
pub fn su3_invariants(p: &Su3Params) -> (f64, f64) {
    let phi2 = -p.alpha.iter().map(|a| a * a).sum::<f64>();
    (phi2, -su3_determinant(p))
}

/// `exp(i W / 2)`, through the eigenprojectors of `W`.
pub fn su3_exp(p: &Su3Params) -> Result<SquareMatrix> {
    check_finite(&p.alpha, "SU(3)")?;
    matrix_exp(&su3_element(p).scale(c(0.0, 0.5)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{char_poly_invariants, trace_powers};

    fn params() -> Su3Params {
        Su3Params::new([0.3, -1.2, 0.7, 0.45, -0.8, 1.1, 0.25, -0.6])
    }

    #[test]
    fn gell_mann_normalisation() {
        for j in 1..=8 {
            let lj = gell_mann(j);
            assert!(lj.max_abs_diff(&lj.adjoint()) == 0.0);
            assert!(lj.trace().norm() < 1e-15);
            for k in 1..=8 {
                let t = (&lj * &gell_mann(k)).trace();
                let expected = if j == k { 2.0 } else { 0.0 };
                assert!((t - expected).norm() < 1e-15, "tr l{j} l{k} = {t}");
            }
        }
    }

    #[test]
    fn third_coordinate_is_diagonal() {
        let w = su3_element(&Su3Params::new([0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]));
        assert_eq!(w, SquareMatrix::from_real_diagonal(&[1.0, -1.0, 0.0]));
    }

    #[test]
    fn square_and_determinant_match_direct_computation() {
        let p = params();
        let w = su3_element(&p);
        assert!((&w * &w).max_abs_diff(&su3_square(&p)) < 1e-14);
        assert!((w.determinant() - su3_determinant(&p)).norm() < 1e-14);
        let t = trace_powers(&w, 3);
        assert!((t[2] - 3.0 * su3_determinant(&p)).norm() < 1e-13);
    }

    #[test]
    fn invariants_match_trace_formula() {
        let p = params();
        let phi = char_poly_invariants(&su3_element(&p)).unwrap().phi;
        let (phi2, phi3) = su3_invariants(&p);
        assert!(phi[1].norm() < 1e-14);
        assert!((phi[2] - phi2).norm() < 1e-13);
        assert!((phi[3] - phi3).norm() < 1e-13);
    }

    #[test]
    fn exp_of_diagonal_element() {
        let theta = 0.9;
        let g = su3_exp(&Su3Params::new([0.0, 0.0, theta, 0.0, 0.0, 0.0, 0.0, 0.0])).unwrap();
        let half = c(0.0, theta / 2.0).exp();
        let expected = SquareMatrix::from_diagonal(&[half, half.conj(), c(1.0, 0.0)]);
        assert!(g.max_abs_diff(&expected) < 1e-14);
        assert!(su3_exp(&Su3Params::default()).unwrap().max_abs_diff(&SquareMatrix::identity(3)) == 0.0);
    }

    #[test]
    fn exp_is_special_unitary() {
        let g = su3_exp(&params()).unwrap();
        assert!((&g * &g.adjoint()).max_abs_diff(&SquareMatrix::identity(3)) < 1e-13);
        assert!((g.determinant() - 1.0).norm() < 1e-13);
    }
}
