use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{check_finite, cross, dot, levi_civita, lin, two_node_interpolant, Vec3};
use super::IMAG_RESIDUE_TOL;
use crate::error::{Error, Result};
use crate::matrix::{RealMatrix, SquareMatrix};

/// Rotation angles `omega` (radians) and boost rapidities `zeta`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LorentzParams {
    pub omega: Vec3,
    pub zeta: Vec3,
}

impl LorentzParams {
    pub fn algebra(&self) -> SquareMatrix {
        lorentz_algebra(self)
    }

    pub(crate) fn check(&self) -> Result<()> {
        check_finite(&[self.omega, self.zeta].concat(), "Lorentz")
    }
}

/// `eta = diag(1, -1, -1, -1)`.
pub fn metric() -> RealMatrix {
    DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, -1.0, -1.0, -1.0]))
}

pub(crate) fn algebra_real(p: &LorentzParams) -> RealMatrix {
    let (w, z) = (&p.omega, &p.zeta);
    let e = levi_civita(w);
    let mut a = DMatrix::zeros(4, 4);
    for i in 0..3 {
        a[(0, i + 1)] = -z[i];
        a[(i + 1, 0)] = -z[i];
        for j in 0..3 {
            a[(i + 1, j + 1)] = -e[i][j];
        }
    }
    a
}

/// `A = [[0, -zeta^T], [-zeta, -epsilon.omega]]`.
pub fn lorentz_algebra(p: &LorentzParams) -> SquareMatrix {
    SquareMatrix::from_real(&algebra_real(p)).expect("4x4 algebra element")
}

/// Basis dual to the parameters `(omega_1, omega_2, omega_3, zeta_1,
/// zeta_2, zeta_3)`: `A = sum_a p_a J_a`.
pub fn lorentz_generators() -> Vec<SquareMatrix> {
    let mut out = Vec::with_capacity(6);
    for k in 0..3 {
        let mut omega = [0.0; 3];
        omega[k] = 1.0;
        out.push(lorentz_algebra(&LorentzParams { omega, zeta: [0.0; 3] }));
    }
    for k in 0..3 {
        let mut zeta = [0.0; 3];
        zeta[k] = 1.0;
        out.push(lorentz_algebra(&LorentzParams { omega: [0.0; 3], zeta }));
    }
    out
}

/// `J_{alpha beta}` acting on vectors, with entries
/// `eta_{gamma gamma} (eta_{alpha gamma} eta_{beta delta} - eta_{beta gamma} eta_{alpha delta})`.
/// These satisfy
/// `[J_ab, J_cd] = eta_bc J_ad + eta_ad J_bc - eta_bd J_ac - eta_ac J_bd`, and
/// `A = (1/2) omega^{ab} J_ab` with `omega^{0j} = zeta_j` and
/// `omega^{ij} = epsilon_{ijk} omega_k`.
pub fn lorentz_pair_generator(alpha: usize, beta: usize) -> RealMatrix {
    assert!(alpha < 4 && beta < 4, "Lorentz indices run over 0..=3");
    let eta = [1.0, -1.0, -1.0, -1.0];
    let mut j = DMatrix::zeros(4, 4);
    for gamma in 0..4 {
        for delta in 0..4 {
            let lower = (if alpha == gamma && beta == delta { eta[alpha] * eta[beta] } else { 0.0 })
                - (if beta == gamma && alpha == delta { eta[alpha] * eta[beta] } else { 0.0 });
            j[(gamma, delta)] = eta[gamma] * lower;
        }
    }
    j
}

/// Auxiliary invariants and vectors of a Lorentz algebra element.
#[derive(Debug, Clone, PartialEq)]
pub struct LorentzAux {
    /// `omega^2 - zeta^2`.
    pub f1: f64,
    /// `omega . zeta`.
    pub f2: f64,
    /// `U^2 >= 0` and `V^2 <= 0`, the squared roots.
    pub u2: f64,
    pub v2: f64,
    /// Principal square roots: `U` real, `V` imaginary.
    pub u: Complex64,
    pub v: Complex64,
    /// `omega x zeta`.
    pub q: Vec3,
    /// `f1 omega + f2 zeta`.
    pub c: Vec3,
    /// `f1 zeta - f2 omega`.
    pub d: Vec3,
    /// `V^2 zeta + f2 omega`.
    pub x: Vec3,
    /// `U^2 zeta + f2 omega`.
    pub y: Vec3,
    /// `V^2 omega - f2 zeta`.
    pub w_vec: Vec3,
    /// `U^2 omega - f2 zeta`.
    pub z_vec: Vec3,
    /// `zeta_i zeta_j + omega_i omega_j - delta_ij omega^2`.
    pub l: [[f64; 3]; 3],
}

/// `U^2, V^2 = -f1/2 +- sqrt(f1^2/4 + f2^2)`, each evaluated without
/// cancellation using `U^2 V^2 = -f2^2`.
fn squared_roots(f1: f64, f2: f64) -> (f64, f64) {
    let s = (0.25 * f1 * f1 + f2 * f2).sqrt();
    if f1 <= 0.0 {
        let u2 = -0.5 * f1 + s;
        let v2 = if u2 > 0.0 { -f2 * f2 / u2 } else { 0.0 };
        (u2, v2)
    } else {
        let v2 = -0.5 * f1 - s;
        let u2 = -f2 * f2 / v2;
        (u2, v2)
    }
}

pub fn lorentz_aux(p: &LorentzParams) -> LorentzAux {
    let (w, z) = (&p.omega, &p.zeta);
    let f1 = dot(w, w) - dot(z, z);
    let f2 = dot(w, z);
    let (u2, v2) = squared_roots(f1, f2);
    let mut l = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            l[i][j] = z[i] * z[j] + w[i] * w[j] - if i == j { dot(w, w) } else { 0.0 };
        }
    }
    LorentzAux {
        f1,
        f2,
        u2,
        v2,
        u: Complex64::new(u2, 0.0).sqrt(),
        v: Complex64::new(v2, 0.0).sqrt(),
        q: cross(w, z),
        c: lin(f1, w, f2, z),
        d: lin(f1, z, -f2, w),
        x: lin(v2, z, f2, w),
        y: lin(u2, z, f2, w),
        w_vec: lin(v2, w, -f2, z),
        z_vec: lin(u2, w, -f2, z),
        l,
    }
}

/// `(U, V)`: the characteristic roots are `+-U, +-V`.
pub fn lorentz_uv(p: &LorentzParams) -> (Complex64, Complex64) {
    let aux = lorentz_aux(p);
    (aux.u, aux.v)
}

/// `(A^2, A^3)` from their entrywise closed forms.
pub fn lorentz_powers(p: &LorentzParams) -> (RealMatrix, RealMatrix) {
    let aux = lorentz_aux(p);
    let z = &p.zeta;
    let ec = levi_civita(&aux.c);
    let mut a2 = DMatrix::zeros(4, 4);
    let mut a3 = DMatrix::zeros(4, 4);
    a2[(0, 0)] = dot(z, z);
    for i in 0..3 {
        a2[(0, i + 1)] = aux.q[i];
        a2[(i + 1, 0)] = -aux.q[i];
        a3[(0, i + 1)] = aux.d[i];
        a3[(i + 1, 0)] = aux.d[i];
        for j in 0..3 {
            a2[(i + 1, j + 1)] = aux.l[i][j];
            a3[(i + 1, j + 1)] = ec[i][j];
        }
    }
    (a2, a3)
}

/// Whether the roots `U^2` and `V^2` are too close for the closed form.
pub fn lorentz_is_degenerate(aux: &LorentzAux) -> bool {
    (aux.u2 - aux.v2).abs() < 1e-6 * (1.0 + aux.u2.abs() + aux.v2.abs())
}

fn sinhc(z: Complex64) -> Complex64 {
    if z.norm() < 1e-4 {
        let z2 = z * z;
        1.0 + z2 / 6.0 + z2 * z2 / 120.0
    } else {
        z.sinh() / z
    }
}

/// The finite transformation `Lambda = e^A`.
///
/// Uses the projector closed form in `U` and `V`; when `U^2` and `V^2`
/// nearly coincide (so that `omega` and `zeta` are nearly orthogonal and
/// of nearly equal length) it switches to [`lorentz_exp_hermite`].
pub fn lorentz_exp_closed(p: &LorentzParams) -> Result<RealMatrix> {
    p.check()?;
    let aux = lorentz_aux(p);
    if lorentz_is_degenerate(&aux) {
        return Ok(lorentz_exp_hermite(p));
    }
    let z = &p.zeta;
    let zeta2 = dot(z, z);
    let (cu, cv) = (aux.u.cosh(), aux.v.cosh());
    let (su, sv) = (sinhc(aux.u), sinhc(aux.v));
    let d = Complex64::new(aux.u2 - aux.v2, 0.0);
    let ew = levi_civita(&aux.w_vec);
    let ez = levi_civita(&aux.z_vec);
    let mut m = DMatrix::<Complex64>::zeros(4, 4);
    m[(0, 0)] = ((zeta2 - aux.v2) * cu + (aux.u2 - zeta2) * cv) / d;
    for i in 0..3 {
        let common = aux.x[i] * sv - aux.y[i] * su;
        let twist = aux.q[i] * (cv - cu);
        m[(0, i + 1)] = (common - twist) / d;
        m[(i + 1, 0)] = (common + twist) / d;
        for j in 0..3 {
            let delta = if i == j { 1.0 } else { 0.0 };
            m[(i + 1, j + 1)] = ((aux.l[i][j] - delta * aux.v2) * cu
                - (aux.l[i][j] - delta * aux.u2) * cv
                + ew[i][j] * sv
                - ez[i][j] * su)
                / d;
        }
    }
    SquareMatrix::from_nalgebra(m)?
        .to_real(IMAG_RESIDUE_TOL)
        .map_err(|e| Error::Consistency(format!("Lorentz closed form: {e}")))
}

/// `e^A = g(A^2) + A h(A^2)` with `g(s) = cosh sqrt(s)` and
/// `h(s) = sinh sqrt(s) / sqrt(s)` interpolated on the nodes `U^2, V^2`.
///
/// This is the Hermite form of the same projector expansion, written so
/// that it stays exact as `U^2 - V^2 -> 0`; valid for all parameters.
pub fn lorentz_exp_hermite(p: &LorentzParams) -> RealMatrix {
    let aux = lorentz_aux(p);
    let a = algebra_real(p);
    let a2 = &a * &a;
    let even = two_node_interpolant(0, aux.u2, aux.v2, &a2);
    let odd = two_node_interpolant(1, aux.u2, aux.v2, &a2);
    even + &a * odd
}
