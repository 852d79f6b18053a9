use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{check_finite, cross, dot, entire, levi_civita, lin, Vec3};
use crate::error::{Error, Result};
use crate::matrix::{RealMatrix, SquareMatrix};

/// Rotation angles `omega`, boost velocity `v`, space translation `a` and
/// time translation `a0`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GalileiParams {
    pub omega: Vec3,
    pub v: Vec3,
    pub a: Vec3,
    pub a0: f64,
}

impl GalileiParams {
    pub fn algebra(&self) -> SquareMatrix {
        galilei_algebra(self)
    }

    fn check(&self) -> Result<()> {
        check_finite(&[&self.omega[..], &self.v, &self.a, &[self.a0]].concat(), "Galilei")
    }

    fn omega2(&self) -> f64 {
        dot(&self.omega, &self.omega)
    }
}

fn algebra_real(p: &GalileiParams) -> RealMatrix {
    let e = levi_civita(&p.omega);
    let mut m = DMatrix::zeros(5, 5);
    m[(0, 4)] = p.a0;
    for i in 0..3 {
        m[(i + 1, 0)] = -p.v[i];
        m[(i + 1, 4)] = p.a[i];
        for j in 0..3 {
            m[(i + 1, j + 1)] = -e[i][j];
        }
    }
    m
}

/// The 5x5 element acting on `(t, x, 1)`, with the time row first.
pub fn galilei_algebra(p: &GalileiParams) -> SquareMatrix {
    SquareMatrix::from_real(&algebra_real(p)).expect("5x5 algebra element")
}

fn spatial(m: &mut RealMatrix, col0: &Vec3, col4: &Vec3, block: impl Fn(usize, usize) -> f64) {
    for i in 0..3 {
        m[(i + 1, 0)] = col0[i];
        m[(i + 1, 4)] = col4[i];
        for j in 0..3 {
            m[(i + 1, j + 1)] = block(i, j);
        }
    }
}

/// `(A^2, A^3, A^4)` from their entrywise closed forms. `A^5 = -omega^2 A^3`.
pub fn galilei_powers(p: &GalileiParams) -> (RealMatrix, RealMatrix, RealMatrix) {
    let (w, v, a) = (&p.omega, &p.v, &p.a);
    let w2 = p.omega2();
    let q = cross(w, v);
    let pv = cross(w, a);
    let e = levi_civita(w);
    let outer = |i: usize, j: usize| w[i] * w[j] - if i == j { w2 } else { 0.0 };
    // omega^2 x - (x . omega) omega
    let perp = |x: &Vec3| lin(w2, x, -dot(x, w), w);

    let mut a2 = DMatrix::zeros(5, 5);
    spatial(&mut a2, &lin(-1.0, &q, 0.0, &q), &lin(1.0, &pv, -p.a0, v), outer);
    let mut a3 = DMatrix::zeros(5, 5);
    spatial(&mut a3, &perp(v), &lin(-1.0, &perp(a), -p.a0, &q), |i, j| w2 * e[i][j]);
    let mut a4 = DMatrix::zeros(5, 5);
    spatial(&mut a4, &lin(w2, &q, 0.0, &q), &lin(p.a0, &perp(v), -w2, &pv), |i, j| {
        -w2 * outer(i, j)
    });
    (a2, a3, a4)
}

/// The spatial rotation `e^{-epsilon.omega}` by angle `|omega|` about
/// `omega`, with the convention `R_ij = delta_ij - epsilon_ijk omega_k sin w / w + ...`.
pub fn rotation_matrix(omega: &Vec3) -> RealMatrix {
    let w2 = dot(omega, omega);
    let (sinc, g2) = (entire(1, -w2), entire(2, -w2));
    let e = levi_civita(omega);
    DMatrix::from_fn(3, 3, |i, j| {
        let delta = if i == j { 1.0 } else { 0.0 };
        delta - e[i][j] * sinc + (omega[i] * omega[j] - delta * w2) * g2
    })
}

/// `e^A` entrywise. The coefficient functions are evaluated through their
/// power series for `|omega| < 1`, so the form is valid at `omega = 0`.
pub fn galilei_exp_closed(p: &GalileiParams) -> Result<RealMatrix> {
    p.check()?;
    let (w, v, a) = (&p.omega, &p.v, &p.a);
    let w2 = p.omega2();
    let sinc = entire(1, -w2);
    let g2 = entire(2, -w2);
    let g3 = entire(3, -w2);
    let g4 = entire(4, -w2);
    let vw = cross(v, w);
    let aw = cross(a, w);
    let (v_dot, a_dot) = (dot(v, w), dot(a, w));

    let mut g = DMatrix::zeros(5, 5);
    g[(0, 0)] = 1.0;
    g[(0, 4)] = p.a0;
    g[(4, 4)] = 1.0;
    g.view_mut((1, 1), (3, 3)).copy_from(&rotation_matrix(w));
    for i in 0..3 {
        g[(i + 1, 0)] = -sinc * v[i] - g3 * v_dot * w[i] + g2 * vw[i];
        g[(i + 1, 4)] = sinc * a[i] + g3 * a_dot * w[i] - g2 * aw[i]
            + p.a0 * (g3 * vw[i] - g2 * v[i] - g4 * v_dot * w[i]);
    }
    Ok(g)
}

/// `e^A = I + A + A^2/2 + g3 A^3 + g4 A^4`, the interpolating polynomial
/// of `e^t` on the spectrum `{0, 0, 0, i|omega|, -i|omega|}`.
pub fn galilei_exp_polynomial(p: &GalileiParams) -> Result<RealMatrix> {
    p.check()?;
    let a = algebra_real(p);
    let (a2, a3, a4) = galilei_powers(p);
    let w2 = p.omega2();
    Ok(DMatrix::identity(5, 5) + &a + a2 * 0.5 + a3 * entire(3, -w2) + a4 * entire(4, -w2))
}

/// Eigen- and nilpotent parts of `A` for `omega != 0`: `z10`, `z11`, `z12`
/// belong to the triple eigenvalue 0 (projector, then `A` and `A^2/2`
/// restricted to it), `z4` and `z5` project onto `+i|omega|` and
/// `-i|omega|`.
#[derive(Debug, Clone, PartialEq)]
pub struct GalileiQuasiProjectors {
    pub omega: f64,
    pub z10: SquareMatrix,
    pub z11: SquareMatrix,
    pub z12: SquareMatrix,
    pub z4: SquareMatrix,
    pub z5: SquareMatrix,
}

impl GalileiQuasiProjectors {
    /// `f(0) z10 + f'(0) z11 + f''(0) z12 + f(iw) z4 + f(-iw) z5`.
    pub fn apply(&self, f: [Complex64; 5]) -> SquareMatrix {
        &(&(&(&self.z10 * f[0]) + &(&self.z11 * f[1])) + &(&self.z12 * f[2]))
            + &(&(&self.z4 * f[3]) + &(&self.z5 * f[4]))
    }

    /// The reconstruction `z10 + z11 + z12 + e^{iw} z4 + e^{-iw} z5`.
    pub fn exp(&self) -> SquareMatrix {
        let one = Complex64::new(1.0, 0.0);
        let phase = Complex64::new(0.0, self.omega).exp();
        self.apply([one, one, one, phase, phase.conj()])
    }
}

pub fn galilei_quasi_projectors(p: &GalileiParams) -> Result<GalileiQuasiProjectors> {
    p.check()?;
    let w2 = p.omega2();
    if w2 == 0.0 {
        return Err(Error::Domain(
            "Galilei quasi-projectors need a nonzero rotation".into(),
        ));
    }
    let w = w2.sqrt();
    let (a2, a3, a4) = galilei_powers(p);
    let cplx = |m: &RealMatrix| SquareMatrix::from_real(m).expect("finite powers");
    let a = cplx(&algebra_real(p));
    let (a2, a3, a4) = (cplx(&a2), cplx(&a3), cplx(&a4));
    let id = SquareMatrix::identity(5);
    let tail = &id + &a2.scale_real(1.0 / w2);
    let iw = Complex64::new(0.0, w);
    let w4 = 2.0 * w2 * w2;
    Ok(GalileiQuasiProjectors {
        omega: w,
        z10: &id - &a4.scale_real(1.0 / (w2 * w2)),
        z11: &a * &tail,
        z12: (&a2 * &tail).scale_real(0.5),
        z4: (&a3 * &a.shift(iw)).scale_real(1.0 / w4),
        z5: (&a3 * &a.shift(-iw)).scale_real(1.0 / w4),
    })
}

/// A Galilei transformation `t' = t + a0`, `x' = R x - v' t + a'`.
#[derive(Debug, Clone, PartialEq)]
pub struct GalileiElement {
    pub r: RealMatrix,
    pub v_prime: Vec3,
    pub a_prime: Vec3,
    pub a0: f64,
}

/// Reads `(R, v', a', a0)` off a 5x5 group element, checking that the time
/// row is `(1, 0, 0, 0, a0)` and the last row is `(0, 0, 0, 0, 1)`.
pub fn galilei_reparametrize(g: &RealMatrix) -> Result<GalileiElement> {
    if g.nrows() != 5 || g.ncols() != 5 {
        return Err(Error::ShapeMismatch(format!(
            "Galilei element must be 5x5, got {}x{}",
            g.nrows(),
            g.ncols()
        )));
    }
    let tol = 1e-9;
    let row_ok = |r: usize, expected: [f64; 4]| {
        (0..4).all(|j| (g[(r, j)] - expected[j]).abs() <= tol)
    };
    if !row_ok(0, [1.0, 0.0, 0.0, 0.0]) {
        return Err(Error::MalformedGroupElement(
            "time row of a Galilei element must be (1, 0, 0, 0, a0)".into(),
        ));
    }
    if !row_ok(4, [0.0; 4]) || (g[(4, 4)] - 1.0).abs() > tol {
        return Err(Error::MalformedGroupElement(
            "last row of a Galilei element must be (0, 0, 0, 0, 1)".into(),
        ));
    }
    Ok(GalileiElement {
        r: g.view((1, 1), (3, 3)).into_owned(),
        v_prime: [-g[(1, 0)], -g[(2, 0)], -g[(3, 0)]],
        a_prime: [g[(1, 4)], g[(2, 4)], g[(3, 4)]],
        a0: g[(0, 4)],
    })
}

pub fn galilei_assemble(e: &GalileiElement) -> RealMatrix {
    let mut g = DMatrix::zeros(5, 5);
    g[(0, 0)] = 1.0;
    g[(0, 4)] = e.a0;
    g[(4, 4)] = 1.0;
    g.view_mut((1, 1), (3, 3)).copy_from(&e.r);
    for i in 0..3 {
        g[(i + 1, 0)] = -e.v_prime[i];
        g[(i + 1, 4)] = e.a_prime[i];
    }
    g
}
