//! Characteristic-polynomial invariants from traces of powers, and the
//! invariant symmetric tensors of a set of generators.

use num_complex::Complex64;
use num_traits::Zero;

use crate::bell::complete_bell_sum;
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::scalar::{factorial, sign, MAX_FACTORIAL};
use crate::symfun::sigmas_from_power_sums;

/// `(tr A, tr A^2, ..., tr A^kmax)`.
pub fn trace_powers(a: &SquareMatrix, kmax: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(kmax);
    let mut p = a.clone();
    for k in 1..=kmax {
        out.push(p.trace());
        if k < kmax {
            p = &p * a;
        }
    }
    out
}

/// Coefficients of `det(t I - A) = sum_j phi_j t^{N-j}`.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantVector {
    pub phi: Vec<Complex64>,
}

impl InvariantVector {
    /// Matrix dimension `N`.
    pub fn dim(&self) -> usize {
        self.phi.len() - 1
    }

    /// `det(t I - A)` by Horner.
    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.phi.iter().fold(Complex64::zero(), |acc, &c| acc * t + c)
    }

    /// `(-1)^N phi_N`.
    pub fn determinant(&self) -> Complex64 {
        self.phi[self.dim()] * sign(self.dim()) as f64
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_FACTORIAL {
        return Err(Error::TooLarge(format!(
            "trace formulas are limited to dimension {MAX_FACTORIAL}, got {n}"
        )));
    }
    Ok(())
}

/// `phi_j = ((-1)^j / j!) sum_m B_{jm}{(-1)^{k-1} (k-1)! tr A^k}` for `j = 0..=N`.
pub fn char_poly_invariants(a: &SquareMatrix) -> Result<InvariantVector> {
    let n = a.dim();
    check_order(n)?;
    let traces = trace_powers(a, n);
    let sigmas = sigmas_from_power_sums(&traces)?;
    let phi = sigmas
        .into_iter()
        .enumerate()
        .map(|(j, s)| s * sign(j) as f64)
        .collect();
    Ok(InvariantVector { phi })
}

/// `det A = (1/N!) sum_m B_{Nm}{(-1)^{k-1} (k-1)! tr A^k}`.
pub fn det_via_bell(a: &SquareMatrix) -> Result<Complex64> {
    let n = a.dim();
    check_order(n)?;
    let g: Vec<Complex64> = trace_powers(a, n)
        .into_iter()
        .enumerate()
        .map(|(idx, t)| Ok(t * (sign(idx) * factorial(idx)?) as f64))
        .collect::<Result<_>>()?;
    Ok(complete_bell_sum(n, &g)? / factorial(n)? as f64)
}

/// Largest order accepted by [`invariant_tensor`].
pub const MAX_TENSOR_ORDER: usize = 4;

/// A fully symmetric tensor of the given order over `dims` generator
/// indices, stored densely in row-major multi-index order.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricTensor {
    order: usize,
    dims: usize,
    entries: Vec<Complex64>,
}

impl SymmetricTensor {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn get(&self, index: &[usize]) -> Complex64 {
        assert_eq!(index.len(), self.order, "multi-index has wrong length");
        self.entries[flat_index(index, self.dims)]
    }

    /// Largest deviation between entries related by an index permutation.
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for (flat, &value) in self.entries.iter().enumerate() {
            let mut idx = unflatten(flat, self.dims, self.order);
            idx.sort_unstable();
            worst = worst.max((value - self.entries[flat_index(&idx, self.dims)]).norm());
        }
        worst
    }
}

fn flat_index(index: &[usize], dims: usize) -> usize {
    index.iter().fold(0, |acc, &i| acc * dims + i)
}

fn unflatten(mut flat: usize, dims: usize, order: usize) -> Vec<usize> {
    let mut idx = vec![0; order];
    for slot in idx.iter_mut().rev() {
        *slot = flat % dims;
        flat /= dims;
    }
    idx
}

// Set partitions of {0, ..., n-1}, blocks listed in increasing order.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new()];
    for element in 0..n {
        let mut next = Vec::new();
        for partition in &out {
            for b in 0..partition.len() {
                let mut p: Vec<Vec<usize>> = partition.clone();
                p[b].push(element);
                next.push(p);
            }
            let mut p = partition.clone();
            p.push(vec![element]);
            next.push(p);
        }
        out = next;
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

// Trace of the product of the generators in `labels`, averaged over all
// orderings.
fn symmetrized_trace(generators: &[SquareMatrix], labels: &[usize]) -> Complex64 {
    let perms = permutations(labels);
    let count = perms.len() as f64;
    let total = perms.iter().fold(Complex64::zero(), |acc, perm| {
        let product = perm[1..]
            .iter()
            .fold(generators[perm[0]].clone(), |m, &g| &m * &generators[g]);
        acc + product.trace()
    });
    total / count
}

/// `eta^(n)_{a_1..a_n}`: the coefficient tensor of `phi_n(omega)` for
/// `A = omega^a J_a`, so that contracting it with `omega^{(x) n}` returns
/// `phi_n`. Traces of generator products are symmetrized over the indices
/// they carry.
pub fn invariant_tensor(generators: &[SquareMatrix], order: usize) -> Result<SymmetricTensor> {
    if order > MAX_TENSOR_ORDER {
        return Err(Error::TooLarge(format!(
            "invariant tensors are supported up to order {MAX_TENSOR_ORDER}"
        )));
    }
    let dims = generators.len();
    if let Some(first) = generators.first() {
        for g in generators {
            if g.dim() != first.dim() {
                return Err(Error::DimensionMismatch { expected: first.dim(), got: g.dim() });
            }
        }
    }
    let partitions = set_partitions(order);
    let prefactor = sign(order) as f64 / factorial(order)? as f64;
    let mut entries = vec![Complex64::zero(); dims.pow(order as u32)];
    for (flat, entry) in entries.iter_mut().enumerate() {
        let index = unflatten(flat, dims, order);
        let mut total = Complex64::zero();
        for partition in &partitions {
            let mut term = Complex64::new(1.0, 0.0);
            for block in partition {
                let k = block.len();
                let labels: Vec<usize> = block.iter().map(|&slot| index[slot]).collect();
                let c = (sign(k - 1) * factorial(k - 1)?) as f64;
                term *= symmetrized_trace(generators, &labels) * c;
            }
            total += term;
        }
        *entry = total * prefactor;
    }
    Ok(SymmetricTensor { order, dims, entries })
}

/// Flattened `omega^{(x) order}`, the coefficient array contracted against
/// an invariant tensor to recover `phi_order`.
pub fn outer_power(omega: &[Complex64], order: usize) -> Vec<Complex64> {
    let dims = omega.len();
    (0..dims.pow(order as u32))
        .map(|flat| {
            unflatten(flat, dims, order)
                .iter()
                .fold(Complex64::new(1.0, 0.0), |acc, &i| acc * omega[i])
        })
        .collect()
}

/// `sum T^{a_1..a_n} eta_{a_1..a_n}` with `t` flattened row-major.
pub fn contract(t: &[Complex64], eta: &SymmetricTensor) -> Result<Complex64> {
    if t.len() != eta.entries.len() {
        return Err(Error::ShapeMismatch(format!(
            "coefficient array has {} entries, tensor of order {} over {} indices has {}",
            t.len(),
            eta.order,
            eta.dims,
            eta.entries.len()
        )));
    }
    Ok(t.iter().zip(&eta.entries).map(|(a, b)| a * b).sum())
}
