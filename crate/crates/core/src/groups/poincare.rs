use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::lorentz::{algebra_real, lorentz_aux, lorentz_exp_closed, lorentz_is_degenerate};
use super::{add, check_finite, cross, dot, levi_civita, lin, two_node_interpolant, Vec3};
use super::{LorentzAux, LorentzParams, IMAG_RESIDUE_TOL};
use crate::error::{Error, Result};
use crate::matrix::{RealMatrix, SquareMatrix};

/// Lorentz parameters plus space translation `a` and time translation `a0`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PoincareParams {
    pub omega: Vec3,
    pub zeta: Vec3,
    pub a: Vec3,
    pub a0: f64,
}

impl PoincareParams {
    pub fn lorentz(&self) -> LorentzParams {
        LorentzParams { omega: self.omega, zeta: self.zeta }
    }

    pub fn algebra(&self) -> SquareMatrix {
        poincare_algebra(self)
    }

    fn check(&self) -> Result<()> {
        check_finite(&[&self.omega[..], &self.zeta, &self.a, &[self.a0]].concat(), "Poincare")
    }
}

/// Vectors entering the translation column of the powers of `A`.
#[derive(Debug, Clone, PartialEq)]
pub struct PoincareAux {
    pub lorentz: LorentzAux,
    /// `omega x a - a0 zeta`.
    pub p: Vec3,
    /// `-omega^2 a + (a.omega) omega + (a.zeta) zeta - a0 (omega x zeta)`.
    pub k: Vec3,
    /// `a x C + a0 D`.
    pub m: Vec3,
}

pub fn poincare_aux(p: &PoincareParams) -> PoincareAux {
    let lorentz = lorentz_aux(&p.lorentz());
    let (w, z, a) = (&p.omega, &p.zeta, &p.a);
    let pv = lin(1.0, &cross(w, a), -p.a0, z);
    let k = [
        lin(-dot(w, w), a, dot(a, w), w),
        lin(dot(a, z), z, -p.a0, &lorentz.q),
    ];
    let m = lin(1.0, &cross(a, &lorentz.c), p.a0, &lorentz.d);
    PoincareAux { p: pv, k: add(&k[0], &k[1]), m, lorentz }
}

fn algebra_real5(p: &PoincareParams) -> RealMatrix {
    let mut out = DMatrix::zeros(5, 5);
    out.view_mut((0, 0), (4, 4)).copy_from(&algebra_real(&p.lorentz()));
    out[(0, 4)] = p.a0;
    for i in 0..3 {
        out[(i + 1, 4)] = p.a[i];
    }
    out
}

/// The 5x5 element `[[A_L, (a0, a)], [0, 0]]`.
pub fn poincare_algebra(p: &PoincareParams) -> SquareMatrix {
    SquareMatrix::from_real(&algebra_real5(p)).expect("5x5 algebra element")
}

fn embed(block: &RealMatrix, top: f64, column: &Vec3) -> RealMatrix {
    let mut out = DMatrix::zeros(5, 5);
    out.view_mut((0, 0), (4, 4)).copy_from(block);
    out[(0, 4)] = top;
    for i in 0..3 {
        out[(i + 1, 4)] = column[i];
    }
    out
}

/// `(A^2, A^3, A^4)` from their entrywise closed forms.
pub fn poincare_powers(p: &PoincareParams) -> (RealMatrix, RealMatrix, RealMatrix) {
    let aux = poincare_aux(p);
    let (l2, l3) = super::lorentz_powers(&p.lorentz());
    let f1 = aux.lorentz.f1;
    let f2 = aux.lorentz.f2;
    let l4 = DMatrix::identity(4, 4) * (f2 * f2) - &l2 * f1;
    let z = &p.zeta;
    (
        embed(&l2, -dot(z, &p.a), &aux.p),
        embed(&l3, -dot(z, &aux.p), &aux.k),
        embed(&l4, dot(&p.a, &aux.lorentz.d), &aux.m),
    )
}

fn closed_form_is_safe(aux: &LorentzAux) -> bool {
    let scale = 1.0 + aux.u2.abs() + aux.v2.abs();
    !lorentz_is_degenerate(aux) && aux.u2.min(-aux.v2) >= 1e-4 * scale
}

/// `e^A` for the Poincare algebra element.
///
/// The closed form divides by `U^2 V^2 (U^2 - V^2)`. When either root is
/// small compared with the overall scale this loses accuracy roughly as
/// `eps / min(U^2, |V^2|)`, so below a relative size of `1e-4` the
/// block form [`poincare_exp_block`] is used instead.
pub fn poincare_exp_closed(p: &PoincareParams) -> Result<RealMatrix> {
    p.check()?;
    let aux = poincare_aux(p);
    let la = &aux.lorentz;
    if !closed_form_is_safe(la) {
        return poincare_exp_block(p);
    }
    let (w, z, a) = (&p.omega, &p.zeta, &p.a);
    let zeta2 = dot(z, z);
    let (u, v) = (la.u, la.v);
    let (u2, v2) = (Complex64::new(la.u2, 0.0), Complex64::new(la.v2, 0.0));
    let (cu, cv) = (u.cosh(), v.cosh());
    // U sinh U and V sinh V, and the mixed products used throughout.
    let u_shu = u * u.sinh();
    let v_shv = v * v.sinh();
    let uv2 = u2 * v2;
    let d = u2 - v2;
    let den = d * uv2;
    let (pv, k, m) = (&aux.p, &aux.k, &aux.m);

    let mut g = DMatrix::<Complex64>::zeros(5, 5);
    g[(4, 4)] = Complex64::new(1.0, 0.0);
    g[(0, 0)] = ((zeta2 - v2) * uv2 * cu - (zeta2 - u2) * uv2 * cv) / den;
    g[(0, 4)] = ((u2 * p.a0 + dot(z, pv)) * u2 * v_shv - (v2 * p.a0 + dot(z, pv)) * v2 * u_shu
        + (0..3)
            .map(|i| a[i] * (la.x[i] * u2 * cv - la.y[i] * v2 * cu - la.f2 * d * w[i]))
            .sum::<Complex64>())
        / den;
    let ez = levi_civita(&la.z_vec);
    let ew = levi_civita(&la.w_vec);
    let f2sq = la.f2 * la.f2;
    for i in 0..3 {
        let common = la.x[i] * u2 * v_shv - la.y[i] * v2 * u_shu;
        let twist = uv2 * la.q[i] * (cu - cv);
        g[(0, i + 1)] = (common + twist) / den;
        g[(i + 1, 0)] = (common - twist) / den;
        g[(i + 1, 4)] = ((k[i] - v2 * a[i]) * v2 * u_shu + (u2 * a[i] - k[i]) * u2 * v_shv
            + (u2 * pv[i] - m[i]) * u2 * cv
            - (v2 * pv[i] - m[i]) * v2 * cu
            + d * (m[i] + la.f1 * pv[i]))
            / den;
        for j in 0..3 {
            let delta = if i == j { f2sq } else { 0.0 };
            g[(i + 1, j + 1)] = ((u2 * la.l[i][j] + delta) * v2 * cu
                - (v2 * la.l[i][j] + delta) * u2 * cv
                - ez[i][j] * v2 * u_shu
                + ew[i][j] * u2 * v_shv)
                / den;
        }
    }
    let mut out = SquareMatrix::from_nalgebra(g)?
        .to_real(IMAG_RESIDUE_TOL)
        .map_err(|e| Error::Consistency(format!("Poincare closed form: {e}")))?;
    for j in 0..4 {
        out[(4, j)] = 0.0;
    }
    out[(4, 4)] = 1.0;
    Ok(out)
}

/// `e^A = [[Lambda, phi1(A_L) b], [0, 1]]` with `b = (a0, a)` and
/// `phi1(t) = (e^t - 1)/t`, the latter interpolated on `U^2, V^2` through
/// its even and odd parts. Valid for all parameters.
pub fn poincare_exp_block(p: &PoincareParams) -> Result<RealMatrix> {
    p.check()?;
    let la = lorentz_aux(&p.lorentz());
    let lambda = lorentz_exp_closed(&p.lorentz())?;
    let a = algebra_real(&p.lorentz());
    let a2 = &a * &a;
    let even = two_node_interpolant(1, la.u2, la.v2, &a2);
    let odd = two_node_interpolant(2, la.u2, la.v2, &a2);
    let b = DVector::from_vec(vec![p.a0, p.a[0], p.a[1], p.a[2]]);
    let t = &even * &b + &a * (&odd * &b);
    Ok(poincare_assemble(&lambda, &[t[0], t[1], t[2], t[3]]))
}

/// `[[Lambda, a], [0, 1]]`.
pub fn poincare_assemble(lambda: &RealMatrix, a: &[f64; 4]) -> RealMatrix {
    let mut g = DMatrix::zeros(5, 5);
    g.view_mut((0, 0), (4, 4)).copy_from(lambda);
    for i in 0..4 {
        g[(i, 4)] = a[i];
    }
    g[(4, 4)] = 1.0;
    g
}

/// Splits `g = [[Lambda, a], [0, 1]]` into `(Lambda, a)`, the homogeneous
/// part and translation of `x' = Lambda x + a`.
pub fn poincare_reparametrize(g: &RealMatrix) -> Result<(RealMatrix, [f64; 4])> {
    if g.nrows() != 5 || g.ncols() != 5 {
        return Err(Error::ShapeMismatch(format!(
            "Poincare element must be 5x5, got {}x{}",
            g.nrows(),
            g.ncols()
        )));
    }
    let tol = 1e-9;
    let last_ok = (0..4).all(|j| g[(4, j)].abs() <= tol) && (g[(4, 4)] - 1.0).abs() <= tol;
    if !last_ok {
        return Err(Error::MalformedGroupElement(
            "last row of a Poincare element must be (0, 0, 0, 0, 1)".into(),
        ));
    }
    let lambda = g.view((0, 0), (4, 4)).into_owned();
    Ok((lambda, [g[(0, 4)], g[(1, 4)], g[(2, 4)], g[(3, 4)]]))
}
