//! Dense square complex matrices.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Real dense matrix, used for group elements whose entries are known to be real.
pub type RealMatrix = DMatrix<f64>;

/// An `n x n` matrix of complex doubles with finite entries.
#[derive(Clone, PartialEq)]
pub struct SquareMatrix(DMatrix<Complex64>);

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        Self(DMatrix::zeros(n, n))
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize, usize) -> Complex64) -> Self {
        Self(DMatrix::from_fn(n, n, f))
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, |i, j| if i == j { diag[i] } else { Complex64::new(0.0, 0.0) })
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, |i, j| if i == j { diag[i].into() } else { Complex64::new(0.0, 0.0) })
    }

    /// Builds a matrix from rows, checking that it is square with finite entries.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, cols: row.len() });
            }
        }
        let m = Self::from_fn(n, |i, j| rows[i][j]);
        m.check_finite()?;
        Ok(m)
    }

    /// Builds a matrix from real rows.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn from_real(m: &RealMatrix) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
        }
        let out = Self(m.map(|x| Complex64::new(x, 0.0)));
        out.check_finite()?;
        Ok(out)
    }

    pub fn from_nalgebra(m: DMatrix<Complex64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
        }
        let out = Self(m);
        out.check_finite()?;
        Ok(out)
    }

    pub fn check_finite(&self) -> Result<()> {
        for j in 0..self.dim() {
            for i in 0..self.dim() {
                let z = self.0[(i, j)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn as_nalgebra(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_nalgebra(self) -> DMatrix<Complex64> {
        self.0
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.0[(i, j)]).collect())
            .collect()
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self(&self.0 * c)
    }

    pub fn scale_real(&self, c: f64) -> Self {
        self.scale(Complex64::new(c, 0.0))
    }

    /// `self + c I`.
    pub fn shift(&self, c: Complex64) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim() {
            out.0[(i, i)] += c;
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.dim());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `[I, A, A^2, ..., A^kmax]`.
    pub fn powers(&self, kmax: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(kmax + 1);
        out.push(Self::identity(self.dim()));
        for k in 1..=kmax {
            let next = &out[k - 1] * self;
            out.push(next);
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, z| m.max(z.norm()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in max_abs_diff");
        self.0
            .iter()
            .zip(other.0.iter())
            .fold(0.0, |m, (a, b)| m.max((a - b).norm()))
    }

    /// Induced 1-norm (maximum absolute column sum).
    pub fn norm_one(&self) -> f64 {
        (0..self.dim())
            .map(|j| (0..self.dim()).map(|i| self.0[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Determinant by partial-pivot LU.
    pub fn determinant(&self) -> Complex64 {
        self.0.clone().determinant()
    }

    pub fn try_inverse(&self) -> Option<Self> {
        self.0.clone().try_inverse().map(Self)
    }

    /// Largest absolute imaginary part over all entries.
    pub fn max_imag(&self) -> f64 {
        self.0.iter().fold(0.0, |m, z| m.max(z.im.abs()))
    }

    /// Drops imaginary parts after checking they are below `tol`.
    pub fn to_real(&self, tol: f64) -> Result<RealMatrix> {
        let residue = self.max_imag();
        if residue > tol {
            return Err(Error::Consistency(format!(
                "imaginary residue {residue:.3e} exceeds {tol:.1e}"
            )));
        }
        Ok(self.0.map(|z| z.re))
    }

    /// Real part without any check.
    pub fn re(&self) -> RealMatrix {
        self.0.map(|z| z.re)
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SquareMatrix({}x{})", self.dim(), self.dim())?;
        for i in 0..self.dim() {
            let row: Vec<String> = (0..self.dim())
                .map(|j| {
                    let z = self.0[(i, j)];
                    format!("{:+.6e}{:+.6e}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for SquareMatrix {
    type Output = Complex64;

    fn index(&self, idx: (usize, usize)) -> &Complex64 {
        &self.0[idx]
    }
}

impl IndexMut<(usize, usize)> for SquareMatrix {
    fn index_mut(&mut self, idx: (usize, usize)) -> &mut Complex64 {
        &mut self.0[idx]
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&SquareMatrix> for &SquareMatrix {
            type Output = SquareMatrix;

            fn $method(self, rhs: &SquareMatrix) -> SquareMatrix {
                SquareMatrix(&self.0 $op &rhs.0)
            }
        }

        impl $trait<SquareMatrix> for SquareMatrix {
            type Output = SquareMatrix;

            fn $method(self, rhs: SquareMatrix) -> SquareMatrix {
                SquareMatrix(self.0 $op rhs.0)
            }
        }

        impl $trait<&SquareMatrix> for SquareMatrix {
            type Output = SquareMatrix;

            fn $method(self, rhs: &SquareMatrix) -> SquareMatrix {
                SquareMatrix(self.0 $op &rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Mul<Complex64> for &SquareMatrix {
    type Output = SquareMatrix;

    fn mul(self, rhs: Complex64) -> SquareMatrix {
        self.scale(rhs)
    }
}

impl Mul<Complex64> for SquareMatrix {
    type Output = SquareMatrix;

    fn mul(self, rhs: Complex64) -> SquareMatrix {
        SquareMatrix(self.0 * rhs)
    }
}

impl Neg for &SquareMatrix {
    type Output = SquareMatrix;

    fn neg(self) -> SquareMatrix {
        SquareMatrix(-&self.0)
    }
}

impl Neg for SquareMatrix {
    type Output = SquareMatrix;

    fn neg(self) -> SquareMatrix {
        SquareMatrix(-self.0)
    }
}
