//! Chern classes and characters of a curvature matrix whose entries are
//! polynomials in commuting 2-forms.
//!
//! With `F` the curvature and `z = i/2pi`,
//!
//! ```text
//! det(I + z F) = sum_k c_k,        tr exp(z F) = sum_k ch_k,
//! ```
//!
//! so `c_k` is the `k`-th elementary function and `k! ch_k` the `k`-th power
//! sum of the alphabet of eigenvalues of `zF`. The two families convert into
//! each other through the Newton relations written with Bell polynomials.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::scalar::{factorial, Scalar, MAX_FACTORIAL};
use crate::symfun::{power_sum_from_sigmas, sigmas_from_power_sums};

/// Exponents of the generators, trailing zeros removed.
pub type Multidegree = Vec<u32>;

/// A polynomial in commuting 2-form generators `x_0, x_1, ...`.
///
/// `max_degree` is the form degree above which products vanish (the
/// dimension of the base manifold); each generator has form degree 2. A
/// polynomial without a bound adopts the bound of whatever it is combined
/// with, so `zero()` and `one()` work as neutral elements.
#[derive(Debug, Clone)]
pub struct FormPolynomial<C = Complex64> {
    terms: BTreeMap<Multidegree, C>,
    max_degree: Option<u32>,
}

fn normalise(mut key: Multidegree) -> Multidegree {
    while key.last() == Some(&0) {
        key.pop();
    }
    key
}

fn form_degree(key: &[u32]) -> u32 {
    2 * key.iter().sum::<u32>()
}

fn meet(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl<C: Scalar> FormPolynomial<C> {
    pub fn constant(c: C) -> Self {
        let mut p = FormPolynomial { terms: BTreeMap::new(), max_degree: None };
        p.insert(Vec::new(), c);
        p
    }

    /// `coeff * prod_i x_i^{exponents[i]}`.
    pub fn monomial(exponents: &[u32], coeff: C) -> Self {
        let mut p = Self::zero();
        p.insert(exponents.to_vec(), coeff);
        p
    }

    /// The generator `x_i`.
    pub fn generator(i: usize) -> Self {
        let mut exponents = vec![0; i + 1];
        exponents[i] = 1;
        Self::monomial(&exponents, C::one())
    }

    /// Sets the truncation bound and drops terms above it.
    pub fn with_max_degree(mut self, max_degree: Option<u32>) -> Self {
        self.max_degree = max_degree;
        self.truncate();
        self
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.max_degree
    }

    /// Nonzero terms in increasing order of multidegree.
    pub fn terms(&self) -> impl Iterator<Item = (&Multidegree, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> C {
        self.terms.get(&normalise(exponents.to_vec())).cloned().unwrap_or_else(C::zero)
    }

    /// Number of generators that appear.
    pub fn generator_count(&self) -> usize {
        self.terms.keys().map(|k| k.len()).max().unwrap_or(0)
    }

    /// Form degrees of the nonzero terms.
    pub fn degrees(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.terms.keys().map(|k| form_degree(k)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Whether every nonzero term has form degree `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|k| form_degree(k) == d)
    }

    /// Evaluates at numeric values of the generators, ignoring truncation.
    /// Missing values count as zero.
    pub fn evaluate(&self, values: &[C]) -> C {
        let mut acc = C::zero();
        'terms: for (key, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in key.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let Some(v) = values.get(i) else { continue 'terms };
                for _ in 0..e {
                    term = term * v.clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Applies `f` to every coefficient.
    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> FormPolynomial<D> {
        let mut out = FormPolynomial { terms: BTreeMap::new(), max_degree: self.max_degree };
        for (k, c) in &self.terms {
            out.insert(k.clone(), f(c));
        }
        out
    }

    fn insert(&mut self, key: Multidegree, c: C) {
        let key = normalise(key);
        if let Some(max) = self.max_degree {
            if form_degree(&key) > max {
                return;
            }
        }
        let total = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !total.is_zero() {
            self.terms.insert(key, total);
        }
    }

    fn truncate(&mut self) {
        if let Some(max) = self.max_degree {
            self.terms.retain(|k, _| form_degree(k) <= max);
        }
    }
}

impl<C: Scalar> PartialEq for FormPolynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<C: Scalar> Zero for FormPolynomial<C> {
    fn zero() -> Self {
        FormPolynomial { terms: BTreeMap::new(), max_degree: None }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Scalar> One for FormPolynomial<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Scalar> Add for FormPolynomial<C> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self.max_degree = meet(self.max_degree, rhs.max_degree);
        self.truncate();
        for (k, c) in rhs.terms {
            self.insert(k, c);
        }
        self
    }
}

impl<C: Scalar> Neg for FormPolynomial<C> {
    type Output = Self;

    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<C: Scalar> Sub for FormPolynomial<C> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Scalar> Mul for FormPolynomial<C> {
    type Output = Self;

    // Exponents add when monomials multiply.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        let mut out = FormPolynomial {
            terms: BTreeMap::new(),
            max_degree: meet(self.max_degree, rhs.max_degree),
        };
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let len = ka.len().max(kb.len());
                let key = (0..len)
                    .map(|i| ka.get(i).copied().unwrap_or(0) + kb.get(i).copied().unwrap_or(0))
                    .collect();
                out.insert(key, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Scalar for FormPolynomial<C> {
    fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    fn div_i64(self, d: i64) -> Self {
        self.map(|c| c.clone().div_i64(d))
    }

    fn mul_i64(self, n: i64) -> Self {
        self.map(|c| c.clone().mul_i64(n))
    }
}

/// Square matrix of form polynomials, stored row-major.
#[derive(Debug, Clone)]
pub struct FormMatrix<C = Complex64> {
    n: usize,
    entries: Vec<FormPolynomial<C>>,
}

impl<C: Scalar> FormMatrix<C> {
    /// Builds an `n x n` matrix; every entry takes the bound `max_degree`.
    pub fn new(n: usize, entries: Vec<FormPolynomial<C>>, max_degree: Option<u32>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::ShapeMismatch(format!(
                "{} entries do not fill a {n}x{n} form matrix",
                entries.len()
            )));
        }
        let entries = entries.into_iter().map(|e| e.with_max_degree(max_degree)).collect();
        Ok(FormMatrix { n, entries })
    }

    pub fn from_fn(
        n: usize,
        max_degree: Option<u32>,
        mut f: impl FnMut(usize, usize) -> FormPolynomial<C>,
    ) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n).with_max_degree(max_degree)).collect();
        FormMatrix { n, entries }
    }

    /// Fiber dimension `N`.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &FormPolynomial<C> {
        &self.entries[i * self.n + j]
    }

    pub fn trace(&self) -> FormPolynomial<C> {
        (0..self.n).fold(FormPolynomial::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn scale(&self, c: &C) -> Self {
        let k = FormPolynomial::constant(c.clone());
        FormMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e.clone() * k.clone()).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: other.n });
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = FormPolynomial::zero();
                for k in 0..n {
                    acc = acc + self.get(i, k).clone() * other.get(k, j).clone();
                }
                entries.push(acc);
            }
        }
        Ok(FormMatrix { n, entries })
    }

    /// `(tr M, tr M^2, ..., tr M^kmax)`.
    pub fn trace_powers(&self, kmax: usize) -> Vec<FormPolynomial<C>> {
        let mut out = Vec::with_capacity(kmax);
        let mut p = self.clone();
        for k in 1..=kmax {
            out.push(p.trace());
            if k < kmax {
                p = p.matmul(self).expect("same dimension");
            }
        }
        out
    }
}

impl<C: Scalar> PartialEq for FormMatrix<C> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries
    }
}

impl FormMatrix<Complex64> {
    /// The numeric matrix obtained by substituting values for the generators.
    pub fn substitute(&self, values: &[Complex64]) -> SquareMatrix {
        SquareMatrix::from_fn(self.n, |i, j| self.get(i, j).evaluate(values))
    }
}

/// `i / 2pi`.
pub fn chern_factor() -> Complex64 {
    Complex64::new(0.0, 1.0 / (2.0 * std::f64::consts::PI))
}

fn check_fiber(n: usize) -> Result<()> {
    if n > MAX_FACTORIAL {
        return Err(Error::TooLarge(format!(
            "fiber dimension {n} exceeds {MAX_FACTORIAL}"
        )));
    }
    Ok(())
}

/// `sigma_k[z F]` for `k = 0..=N`: the coefficients of `det(I + t z F)`.
pub fn invariant_polynomials<C: Scalar>(f: &FormMatrix<C>, z: &C) -> Result<Vec<FormPolynomial<C>>> {
    check_fiber(f.dim())?;
    let traces = f.scale(z).trace_powers(f.dim());
    sigmas_from_power_sums(&traces)
}

/// `c_0, ..., c_N` with `sum_k c_k = det(I + iF/2pi)`.
pub fn chern_classes(f: &FormMatrix) -> Result<Vec<FormPolynomial>> {
    invariant_polynomials(f, &chern_factor())
}

/// `ch_0 = N` and `ch_k = (i/2pi)^k tr F^k / k!` for `k = 1..=N`.
pub fn chern_characters(f: &FormMatrix) -> Result<Vec<FormPolynomial>> {
    check_fiber(f.dim())?;
    let traces = f.scale(&chern_factor()).trace_powers(f.dim());
    let mut out = vec![FormPolynomial::from_i64(f.dim() as i64)];
    for (idx, t) in traces.into_iter().enumerate() {
        out.push(t.div_i64(factorial(idx + 1)?));
    }
    Ok(out)
}

/// `c_0..c_n` from `ch_0..ch_n` through
/// `c_j = (1/j!) sum_m B_{jm}{(-1)^{k-1} (k-1)! k! ch_k}`. `ch_0` is not used.
pub fn classes_from_characters<S: Scalar>(ch: &[S]) -> Result<Vec<S>> {
    if ch.is_empty() {
        return Err(Error::InsufficientCoefficients { needed: 1, got: 0 });
    }
    let power_sums: Vec<S> = ch[1..]
        .iter()
        .enumerate()
        .map(|(idx, c)| Ok(c.clone().mul_i64(factorial(idx + 1)?)))
        .collect::<Result<_>>()?;
    sigmas_from_power_sums(&power_sums)
}

/// `ch_0..ch_n` from `c_0..c_n` through
/// `k! ch_k = ((-1)^{k-1}/(k-1)!) sum_j (-1)^{j-1} (j-1)! B_{kj}{r! c_r}`,
/// with `ch_0 = fiber_dim`. `c_0` is taken to be 1 and not read.
pub fn characters_from_classes<S: Scalar>(c: &[S], fiber_dim: usize) -> Result<Vec<S>> {
    if c.is_empty() {
        return Err(Error::InsufficientCoefficients { needed: 1, got: 0 });
    }
    let mut out = vec![S::from_i64(fiber_dim as i64)];
    for k in 1..c.len() {
        out.push(power_sum_from_sigmas(k, &c[1..])?.div_i64(factorial(k)?));
    }
    Ok(out)
}
