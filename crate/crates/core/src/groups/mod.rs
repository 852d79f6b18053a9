//! Algebra elements and finite transformations for SU(3), Lorentz,
//! Poincare and Galilei.
//!
//! Index conventions: Lorentz matrices use rows and columns 0..=3 with the
//! time direction first; Poincare and Galilei use 0..=4 with the
//! translation column last. The metric is `eta = diag(1, -1, -1, -1)`.

mod galilei;
mod lorentz;
mod poincare;
mod su3;

pub use galilei::{
    galilei_algebra, galilei_assemble, galilei_exp_closed, galilei_exp_polynomial, galilei_powers,
    galilei_quasi_projectors, galilei_reparametrize, rotation_matrix, GalileiElement,
    GalileiParams, GalileiQuasiProjectors,
};
pub use lorentz::{
    lorentz_algebra, lorentz_aux, lorentz_exp_closed, lorentz_exp_hermite, lorentz_generators,
    lorentz_is_degenerate, lorentz_pair_generator, lorentz_powers, lorentz_uv, metric, LorentzAux,
    LorentzParams,
};
pub use poincare::{
    poincare_algebra, poincare_assemble, poincare_aux, poincare_exp_block, poincare_exp_closed,
    poincare_powers, poincare_reparametrize, PoincareAux, PoincareParams,
};
pub use su3::{
    gell_mann, su3_determinant, su3_element, su3_exp, su3_invariants, su3_square, Su3Params,
};

use nalgebra::DMatrix;

use crate::matrix::RealMatrix;

/// A real 3-vector.
pub type Vec3 = [f64; 3];

/// Tolerance on imaginary parts dropped from complex intermediates.
pub const IMAG_RESIDUE_TOL: f64 = 1e-9;

pub(crate) fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn lin(x: f64, a: &Vec3, y: f64, b: &Vec3) -> Vec3 {
    [x * a[0] + y * b[0], x * a[1] + y * b[1], x * a[2] + y * b[2]]
}

pub(crate) fn add(a: &Vec3, b: &Vec3) -> Vec3 {
    lin(1.0, a, 1.0, b)
}

/// `sum_k epsilon_{ijk} v_k` as a 3x3 matrix.
pub(crate) fn levi_civita(v: &Vec3) -> [[f64; 3]; 3] {
    [[0.0, v[2], -v[1]], [-v[2], 0.0, v[0]], [v[1], -v[0], 0.0]]
}

pub(crate) fn check_finite(values: &[f64], what: &str) -> crate::Result<()> {
    if values.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(crate::Error::Domain(format!("{what} parameters must be finite")))
    }
}

/// `sum_n s^n / (2n + m)!` for `m <= 4`: with `r = sqrt(s)` these are
/// `cosh r`, `sinh r / r`, `(cosh r - 1) / s`, `(sinh r / r - 1) / s` and
/// `(cosh r - 1 - s/2) / s^2`. For `s = -w^2` they become the circular
/// functions `cos w`, `sin w / w`, `(1 - cos w)/w^2`, `(w - sin w)/w^3` and
/// `(w^2/2 + cos w - 1)/w^4`.
pub(crate) fn entire(m: usize, s: f64) -> f64 {
    if s.abs() < 1.0 {
        return entire_series(m, s);
    }
    let (c, sc) = if s > 0.0 {
        let r = s.sqrt();
        (r.cosh(), r.sinh() / r)
    } else {
        let r = (-s).sqrt();
        (r.cos(), r.sin() / r)
    };
    match m {
        0 => c,
        1 => sc,
        2 => (c - 1.0) / s,
        3 => (sc - 1.0) / s,
        4 => (c - 1.0 - s / 2.0) / (s * s),
        _ => unreachable!("entire function order {m}"),
    }
}

fn inverse_factorial(k: usize) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc / i as f64)
}

fn entire_series(m: usize, s: f64) -> f64 {
    let mut acc = 0.0;
    let mut power = 1.0;
    for n in 0..30 {
        acc += power * inverse_factorial(2 * n + m);
        power *= s;
    }
    acc
}

/// Divided difference `f[s1, s2]` of [`entire`]`(m, .)`, accurate when the
/// nodes coincide or nearly do. Nodes closer than 1 are expected to have
/// opposite signs or be small, as `U^2 >= 0 >= V^2` always are.
pub(crate) fn entire_divided(m: usize, s1: f64, s2: f64) -> f64 {
    if (s1 - s2).abs() >= 1.0 {
        return (entire(m, s1) - entire(m, s2)) / (s1 - s2);
    }
    // f[s1, s2] = sum_{n >= 1} a_n h_{n-1}(s1, s2), with h the complete
    // homogeneous symmetric polynomial.
    let mut acc = 0.0;
    let mut h = 1.0;
    let mut p1 = 1.0;
    for n in 1..60 {
        acc += inverse_factorial(2 * n + m) * h;
        p1 *= s1;
        h = p1 + s2 * h;
    }
    acc
}

/// `f(s1) I + f[s1, s2] (X - s1 I)`: the interpolant of `f` on the two
/// nodes, evaluated at the matrix `X`.
pub(crate) fn two_node_interpolant(m: usize, s1: f64, s2: f64, x: &RealMatrix) -> RealMatrix {
    let n = x.nrows();
    let slope = entire_divided(m, s1, s2);
    DMatrix::identity(n, n) * (entire(m, s1) - slope * s1) + x * slope
}
