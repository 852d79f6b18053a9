//! Matrix functions through eigenprojectors.
//!
//! For a simple spectrum `F(A) = sum_j F(lambda_j) Z_j` with Lagrange
//! projectors `Z_j`. Repeated eigenvalues are handled by Hermite
//! interpolation: `F(A) = r(A)` where the polynomial `r` of degree `N - 1`
//! matches `F` and its first `m_j - 1` derivatives at each eigenvalue of
//! multiplicity `m_j`.

mod roots;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::invariants::{char_poly_invariants, InvariantVector};
use crate::matrix::SquareMatrix;

/// Relative distance below which [`matrix_function`] treats two computed
/// eigenvalues as one.
pub const NEAR_DEGENERACY: f64 = 1e-6;

/// Eigenvalues with multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub roots: Vec<(Complex64, usize)>,
    pub cluster_tol: f64,
}

impl Spectrum {
    /// Builds a spectrum from explicit values, for callers that know it.
    pub fn new(roots: Vec<(Complex64, usize)>, cluster_tol: f64) -> Result<Self> {
        if roots.iter().any(|r| r.1 == 0) {
            return Err(Error::Domain("multiplicities must be positive".into()));
        }
        Ok(Self { roots, cluster_tol })
    }

    /// Sum of multiplicities.
    pub fn dim(&self) -> usize {
        self.roots.iter().map(|r| r.1).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.roots.iter().all(|r| r.1 == 1)
    }

    pub fn max_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.1).max().unwrap_or(0)
    }

    pub fn values(&self) -> Vec<Complex64> {
        self.roots.iter().map(|r| r.0).collect()
    }

    /// Largest eigenvalue modulus.
    pub fn scale(&self) -> f64 {
        self.roots.iter().map(|r| r.0.norm()).fold(0.0, f64::max)
    }

    /// Merges values closer than `tol` into their multiplicity-weighted mean.
    pub fn merged(&self, tol: f64) -> Spectrum {
        let mut roots = self.roots.clone();
        loop {
            let mut closest: Option<(f64, usize, usize)> = None;
            for i in 0..roots.len() {
                for j in (i + 1)..roots.len() {
                    let d = (roots[i].0 - roots[j].0).norm();
                    if d < tol && closest.is_none_or(|c| d < c.0) {
                        closest = Some((d, i, j));
                    }
                }
            }
            let Some((_, i, j)) = closest else { break };
            let (a, ma) = roots[i];
            let (b, mb) = roots.remove(j);
            let m = ma + mb;
            roots[i] = ((a * ma as f64 + b * mb as f64) / m as f64, m);
        }
        Spectrum { roots, cluster_tol: self.cluster_tol.max(tol) }
    }
}

/// `1e-8 (1 + max |lambda|)`.
pub fn default_cluster_tol(max_abs: f64) -> f64 {
    1e-8 * (1.0 + max_abs)
}

/// Roots of `det(t I - A)`, clustered.
///
/// Roots within `cluster_tol` of each other (default
/// [`default_cluster_tol`]) are merged, and so are roots whose spread is
/// explained by rounding in the polynomial coefficients: an `m`-fold root
/// computed from slightly perturbed coefficients splits by roughly
/// `eps^(1/m)`, far more than any fixed tolerance.
pub fn spectrum_of(a: &SquareMatrix, cluster_tol: Option<f64>) -> Result<Spectrum> {
    let phi = char_poly_invariants(a)?;
    spectrum_from_invariants(a, &phi, cluster_tol)
}

/// As [`spectrum_of`], reusing already computed invariants.
pub fn spectrum_from_invariants(
    a: &SquareMatrix,
    phi: &InvariantVector,
    cluster_tol: Option<f64>,
) -> Result<Spectrum> {
    if phi.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: phi.dim() });
    }
    let raw = roots::polynomial_roots(&phi.phi)?;
    let max_abs = raw.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let tol = cluster_tol.unwrap_or_else(|| default_cluster_tol(max_abs));
    let rho = a.frobenius_norm();
    let roots = roots::cluster_roots(&phi.phi, &raw, tol, rho);
    Ok(Spectrum { roots, cluster_tol: tol })
}

/// Eigenprojectors paired with their eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectorBasis {
    pub projectors: Vec<(Complex64, SquareMatrix)>,
}

/// Worst residuals of the projector relations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectorResiduals {
    /// `max |sum_j Z_j - I|`.
    pub completeness: f64,
    /// `max_j |Z_j^2 - Z_j|`.
    pub idempotence: f64,
    /// `max_{i != j} |Z_i Z_j|`.
    pub orthogonality: f64,
    /// `max_j |tr Z_j - 1|`.
    pub trace: f64,
    /// `max |sum_j lambda_j Z_j - A|`.
    pub reconstruction: f64,
}

impl ProjectorBasis {
    /// `sum_j f(lambda_j) Z_j`.
    pub fn apply(&self, f: impl Fn(Complex64) -> Complex64) -> SquareMatrix {
        let n = self.projectors.first().map_or(0, |p| p.1.dim());
        self.projectors
            .iter()
            .fold(SquareMatrix::zeros(n), |acc, (lambda, z)| &acc + &z.scale(f(*lambda)))
    }

    pub fn residuals(&self, a: &SquareMatrix) -> ProjectorResiduals {
        let n = a.dim();
        let total = self.apply(|_| Complex64::new(1.0, 0.0));
        let mut idempotence = 0.0f64;
        let mut orthogonality = 0.0f64;
        let mut trace = 0.0f64;
        for (i, (_, zi)) in self.projectors.iter().enumerate() {
            idempotence = idempotence.max((zi * zi).max_abs_diff(zi));
            trace = trace.max((zi.trace() - 1.0).norm());
            for (j, (_, zj)) in self.projectors.iter().enumerate() {
                if i != j {
                    orthogonality = orthogonality.max((zi * zj).max_abs());
                }
            }
        }
        ProjectorResiduals {
            completeness: total.max_abs_diff(&SquareMatrix::identity(n)),
            idempotence,
            orthogonality,
            trace,
            reconstruction: self.apply(|l| l).max_abs_diff(a),
        }
    }
}

fn require_simple(sp: &Spectrum) -> Result<()> {
    match sp.roots.iter().find(|r| r.1 > 1) {
        Some(&(value, multiplicity)) => Err(Error::DegenerateSpectrum { value, multiplicity }),
        None => Ok(()),
    }
}

fn check_dims(a: &SquareMatrix, sp: &Spectrum) -> Result<()> {
    if sp.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: sp.dim() });
    }
    Ok(())
}

/// `Z_j = prod_{k != j} (A - lambda_k) / (lambda_j - lambda_k)`.
pub fn projectors_product_form(a: &SquareMatrix, sp: &Spectrum) -> Result<ProjectorBasis> {
    check_dims(a, sp)?;
    require_simple(sp)?;
    let values = sp.values();
    let projectors = values
        .iter()
        .enumerate()
        .map(|(j, &lj)| {
            let z = values
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != j)
                .fold(SquareMatrix::identity(a.dim()), |acc, (_, &lk)| {
                    &acc * &a.shift(-lk).scale((lj - lk).inv())
                });
            (lj, z)
        })
        .collect();
    Ok(ProjectorBasis { projectors })
}

/// Projectors with coefficients built from the invariants `phi`.
///
/// `Z_i = Q_i(A) / Q_i(lambda_i)` where `Q_i(t) = sum_m q_m t^{N-1-m}` and
/// `q_m = sum_{j <= m} lambda_i^{m-j} phi_j`; `Q_i` is the characteristic
/// polynomial with the factor `(t - lambda_i)` divided out. This is the
/// invariant form with numerator and denominator multiplied through by
/// `lambda_i^{N}`, so it carries no negative powers and needs no special
/// case for a zero eigenvalue.
pub fn projectors_from_invariants(
    a: &SquareMatrix,
    sp: &Spectrum,
    phi: &InvariantVector,
) -> Result<ProjectorBasis> {
    check_dims(a, sp)?;
    require_simple(sp)?;
    let n = a.dim();
    if phi.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: phi.dim() });
    }
    let projectors = sp
        .values()
        .into_iter()
        .map(|lambda| {
            let mut q = Vec::with_capacity(n);
            let mut acc = Complex64::new(0.0, 0.0);
            for m in 0..n {
                acc = acc * lambda + phi.phi[m];
                q.push(acc);
            }
            let numerator = q[1..]
                .iter()
                .fold(SquareMatrix::identity(n).scale(q[0]), |m, &qm| (&m * a).shift(qm));
            let denominator = q.iter().fold(Complex64::new(0.0, 0.0), |s, &qm| s * lambda + qm);
            if denominator.norm() == 0.0 {
                return Err(Error::DegenerateSpectrum { value: lambda, multiplicity: 2 });
            }
            Ok((lambda, numerator.scale(denominator.inv())))
        })
        .collect::<Result<_>>()?;
    Ok(ProjectorBasis { projectors })
}

type Evaluator<'a> = Box<dyn Fn(usize, Complex64) -> Option<Complex64> + 'a>;

/// A scalar function together with as many derivatives as it can supply.
pub struct FunctionDescriptor<'a> {
    eval: Evaluator<'a>,
}

impl<'a> FunctionDescriptor<'a> {
    /// `f(order, z)` returns the `order`-th derivative at `z`, or `None` if
    /// that derivative is not available.
    pub fn new(f: impl Fn(usize, Complex64) -> Option<Complex64> + 'a) -> Self {
        Self { eval: Box::new(f) }
    }

    /// A function known only through its values.
    pub fn from_value(f: impl Fn(Complex64) -> Complex64 + 'a) -> Self {
        Self::new(move |order, z| (order == 0).then(|| f(z)))
    }

    pub fn exp() -> Self {
        Self::new(|_, z| Some(z.exp()))
    }

    /// `sum_k coeffs[k] z^k`, with all derivatives.
    pub fn polynomial(coeffs: Vec<Complex64>) -> Self {
        Self::new(move |order, z| {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in (order..coeffs.len()).rev() {
                let falling: f64 = ((k - order + 1)..=k).map(|x| x as f64).product();
                acc = acc * z + coeffs[k] * falling;
            }
            Some(acc)
        })
    }

    pub fn value(&self, z: Complex64) -> Result<Complex64> {
        self.derivative(0, z)
    }

    pub fn derivative(&self, order: usize, z: Complex64) -> Result<Complex64> {
        (self.eval)(order, z).ok_or(Error::UndefinedFunction { order, at: z })
    }
}

// Polynomial basis ((t - center) / scale)^k for the interpolation system.
#[derive(Debug, Clone, Copy)]
struct Basis {
    center: Complex64,
    scale: f64,
}

const MONOMIAL: Basis = Basis { center: Complex64 { re: 0.0, im: 0.0 }, scale: 1.0 };

// Pivot ratio below which an interpolation system is rejected.
const PIVOT_RATIO: f64 = 1e-12;

struct Interpolation {
    basis: Basis,
    lu: nalgebra::LU<Complex64, nalgebra::Dyn, nalgebra::Dyn>,
}

// Row (i, r): r-th derivative of each basis polynomial at root i.
fn confluent_system(sp: &Spectrum, basis: Basis) -> DMatrix<Complex64> {
    let n = sp.dim();
    let mut m = DMatrix::zeros(n, n);
    let mut row = 0;
    for &(lambda, mult) in &sp.roots {
        let x = (lambda - basis.center) / basis.scale;
        for r in 0..mult {
            for k in r..n {
                let falling: f64 = ((k - r + 1)..=k).map(|v| v as f64).product();
                m[(row, k)] = x.powu((k - r) as u32) * falling / basis.scale.powi(r as i32);
            }
            row += 1;
        }
    }
    m
}

fn pivot_ratio(lu: &nalgebra::LU<Complex64, nalgebra::Dyn, nalgebra::Dyn>) -> f64 {
    let u = lu.u();
    let diag: Vec<f64> = (0..u.nrows()).map(|i| u[(i, i)].norm()).collect();
    let max = diag.iter().copied().fold(0.0, f64::max);
    let min = diag.iter().copied().fold(f64::INFINITY, f64::min);
    if max == 0.0 {
        0.0
    } else {
        min / max
    }
}

fn interpolation(sp: &Spectrum) -> Result<Interpolation> {
    let lu = confluent_system(sp, MONOMIAL).lu();
    if pivot_ratio(&lu) >= PIVOT_RATIO {
        return Ok(Interpolation { basis: MONOMIAL, lu });
    }
    // Centre and scale the nodes; this is usually much better conditioned.
    let n = sp.dim() as f64;
    let center = sp.roots.iter().map(|r| r.0 * r.1 as f64).sum::<Complex64>() / n;
    let spread = sp.roots.iter().map(|r| (r.0 - center).norm()).fold(0.0, f64::max);
    let basis = Basis { center, scale: if spread > 0.0 { spread } else { 1.0 } };
    let lu = confluent_system(sp, basis).lu();
    if pivot_ratio(&lu) >= PIVOT_RATIO {
        return Ok(Interpolation { basis, lu });
    }
    Err(Error::SingularInterpolation)
}

// [B^0, B^1, ..., B^{n-1}] with B = (A - center) / scale.
fn basis_powers(a: &SquareMatrix, basis: Basis, n: usize) -> Vec<SquareMatrix> {
    let b = a.shift(-basis.center).scale_real(1.0 / basis.scale);
    b.powers(n.saturating_sub(1))
}

/// `F(A)` by Hermite interpolation on the spectrum `sp`.
///
/// Solves the confluent Vandermonde system for the coefficients of the
/// interpolating polynomial, first in the monomial basis and, if that is
/// numerically singular, in a centred and scaled basis.
pub fn matrix_function_confluent(
    a: &SquareMatrix,
    sp: &Spectrum,
    f: &FunctionDescriptor<'_>,
) -> Result<SquareMatrix> {
    check_dims(a, sp)?;
    let n = a.dim();
    if n == 0 {
        return Ok(SquareMatrix::zeros(0));
    }
    let mut rhs = DVector::zeros(n);
    let mut row = 0;
    for &(lambda, mult) in &sp.roots {
        for r in 0..mult {
            rhs[row] = f.derivative(r, lambda)?;
            row += 1;
        }
    }
    let interp = interpolation(sp)?;
    let coeffs = interp.lu.solve(&rhs).ok_or(Error::SingularInterpolation)?;
    let powers = basis_powers(a, interp.basis, n);
    let out = powers
        .iter()
        .zip(coeffs.iter())
        .fold(SquareMatrix::zeros(n), |acc, (p, &c)| &acc + &p.scale(c));
    out.check_finite()?;
    Ok(out)
}

/// The matrix multiplying `F^{(order)}(eigenvalue)` in the Hermite form
/// `F(A) = sum_{i,r} F^{(r)}(lambda_i) Z_{i,r}`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasiProjector {
    pub eigenvalue: Complex64,
    pub order: usize,
    pub matrix: SquareMatrix,
}

/// All `Z_{i,r}` for a possibly degenerate spectrum. For a simple spectrum
/// these are the eigenprojectors.
pub fn confluent_basis(a: &SquareMatrix, sp: &Spectrum) -> Result<Vec<QuasiProjector>> {
    check_dims(a, sp)?;
    let n = a.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    let interp = interpolation(sp)?;
    let inverse = interp.lu.try_inverse().ok_or(Error::SingularInterpolation)?;
    let powers = basis_powers(a, interp.basis, n);
    let mut out = Vec::with_capacity(n);
    let mut col = 0;
    for &(lambda, mult) in &sp.roots {
        for r in 0..mult {
            let matrix = powers
                .iter()
                .enumerate()
                .fold(SquareMatrix::zeros(n), |acc, (k, p)| &acc + &p.scale(inverse[(k, col)]));
            out.push(QuasiProjector { eigenvalue: lambda, order: r, matrix });
            col += 1;
        }
    }
    Ok(out)
}

/// `F(A)`, choosing the projector sum or the confluent path from the
/// computed spectrum. Eigenvalues closer than [`NEAR_DEGENERACY`] relative
/// to the spectral scale are treated as one multiple eigenvalue.
pub fn matrix_function(a: &SquareMatrix, f: &FunctionDescriptor<'_>) -> Result<SquareMatrix> {
    let sp = spectrum_of(a, None)?;
    let sp = sp.merged(NEAR_DEGENERACY * (1.0 + sp.scale()));
    if sp.is_simple() {
        let basis = projectors_product_form(a, &sp)?;
        let mut out = SquareMatrix::zeros(a.dim());
        for (lambda, z) in &basis.projectors {
            out = &out + &z.scale(f.value(*lambda)?);
        }
        out.check_finite()?;
        Ok(out)
    } else {
        matrix_function_confluent(a, &sp, f)
    }
}

/// `e^A` through [`matrix_function`].
pub fn matrix_exp(a: &SquareMatrix) -> Result<SquareMatrix> {
    matrix_function(a, &FunctionDescriptor::exp())
}
