//! Elementary and power-sum symmetric functions of an alphabet, with the
//! Bell-polynomial forms of the Newton identities.

use crate::bell::bell_table;
use crate::error::{Error, Result};
use crate::scalar::{factorial, sign, FieldScalar, Scalar};

/// An ordered list of letters. Order only matters for letter indices; every
/// symmetric quantity is permutation invariant.
#[derive(Debug, Clone, PartialEq)]
pub struct Alphabet<S> {
    letters: Vec<S>,
}

impl<S: Scalar> Alphabet<S> {
    pub fn new(letters: Vec<S>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[S] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The alphabet with letter `i` (0-based) removed.
    pub fn without(&self, i: usize) -> Result<Self> {
        if i >= self.len() {
            return Err(Error::InvalidIndex { index: i, len: self.len() });
        }
        let mut letters = self.letters.clone();
        letters.remove(i);
        Ok(Self { letters })
    }
}

impl<S: Scalar> From<Vec<S>> for Alphabet<S> {
    fn from(letters: Vec<S>) -> Self {
        Self::new(letters)
    }
}

/// `[sigma_0, sigma_1, ..., sigma_N]`, read off the generating function
/// `prod_j (1 + x_j t)`.
pub fn elementary_all<S: Scalar>(x: &Alphabet<S>) -> Vec<S> {
    let mut coeffs = vec![S::one()];
    for letter in x.letters() {
        let mut next = coeffs.clone();
        next.push(S::zero());
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] = next[j + 1].clone() + c.clone() * letter.clone();
        }
        coeffs = next;
    }
    coeffs
}

/// `sigma_j[x]`; zero for `j > N`.
pub fn elementary<S: Scalar>(j: usize, x: &Alphabet<S>) -> S {
    if j > x.len() {
        return S::zero();
    }
    elementary_all(x)[j].clone()
}

/// `s_k[x] = sum_j x_j^k`. `s_0` is taken to be `N`.
pub fn power_sum<S: Scalar>(k: usize, x: &Alphabet<S>) -> S {
    x.letters().iter().fold(S::zero(), |acc, letter| {
        let mut p = S::one();
        for _ in 0..k {
            p = p * letter.clone();
        }
        acc + p
    })
}

/// `sigma_j = (1/j!) sum_m B_{jm}{(-1)^{k-1} (k-1)! s_k}` from `s = [s_1, ..., s_j, ...]`.
pub fn sigma_from_power_sums<S: Scalar>(j: usize, s: &[S]) -> Result<S> {
    if s.len() < j {
        return Err(Error::InsufficientCoefficients { needed: j, got: s.len() });
    }
    let g = newton_arguments(&s[..j])?;
    let table = bell_table(j, &g)?;
    let total = table[j].iter().cloned().fold(S::zero(), |a, b| a + b);
    Ok(total.div_i64(factorial(j)?))
}

/// All of `sigma_0..=sigma_n` from `s = [s_1, ..., s_n]`, sharing one Bell table.
pub fn sigmas_from_power_sums<S: Scalar>(s: &[S]) -> Result<Vec<S>> {
    let n = s.len();
    let g = newton_arguments(s)?;
    let table = bell_table(n, &g)?;
    table
        .iter()
        .enumerate()
        .map(|(j, row)| {
            let total = row.iter().cloned().fold(S::zero(), |a, b| a + b);
            Ok(total.div_i64(factorial(j)?))
        })
        .collect()
}

// (-1)^{k-1} (k-1)! s_k
fn newton_arguments<S: Scalar>(s: &[S]) -> Result<Vec<S>> {
    s.iter()
        .enumerate()
        .map(|(idx, sk)| Ok(sk.clone().mul_i64(sign(idx) * factorial(idx)?)))
        .collect()
}

/// `s_n = ((-1)^{n-1}/(n-1)!) sum_m (-1)^{m-1} (m-1)! B_{nm}{k! sigma_k}`
/// from `sigma = [sigma_1, ..., sigma_n, ...]`.
pub fn power_sum_from_sigmas<S: Scalar>(n: usize, sigma: &[S]) -> Result<S> {
    if n == 0 {
        return Err(Error::Domain("power sums are indexed from 1".into()));
    }
    if sigma.len() < n {
        return Err(Error::InsufficientCoefficients { needed: n, got: sigma.len() });
    }
    let g: Vec<S> = sigma[..n]
        .iter()
        .enumerate()
        .map(|(idx, sk)| Ok(sk.clone().mul_i64(factorial(idx + 1)?)))
        .collect::<Result<_>>()?;
    let table = bell_table(n, &g)?;
    let mut acc = S::zero();
    for m in 1..=n {
        acc = acc + table[n][m].clone().mul_i64(sign(m - 1) * factorial(m - 1)?);
    }
    Ok(acc.mul_i64(sign(n - 1)).div_i64(factorial(n - 1)?))
}

/// `sigma_{k,i}[x]`, the `k`-th elementary function of the alphabet with
/// letter `i` (0-based) removed, via `sum_{j<=k} (-x_i)^{k-j} sigma_j[x]`.
pub fn elementary_missing<S: Scalar>(k: usize, i: usize, x: &Alphabet<S>) -> Result<S> {
    if i >= x.len() {
        return Err(Error::InvalidIndex { index: i, len: x.len() });
    }
    if k >= x.len() {
        return Ok(S::zero());
    }
    let sigmas = elementary_all(x);
    let minus_xi = -x.letters()[i].clone();
    // Horner in (-x_i).
    let mut acc = S::zero();
    for sigma_j in sigmas.iter().take(k + 1) {
        acc = acc * minus_xi.clone() + sigma_j.clone();
    }
    Ok(acc)
}

/// The alphabet `x*` with letters `-1/x_j`.
pub fn reciprocal_alphabet<S: FieldScalar>(x: &Alphabet<S>) -> Result<Alphabet<S>> {
    x.letters()
        .iter()
        .enumerate()
        .map(|(j, letter)| {
            if letter.is_zero() {
                Err(Error::ZeroLetter(j))
            } else {
                Ok(-(S::one() / letter.clone()))
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(Alphabet::new)
}

/// `prod_j (t - x_j)`.
pub fn poly_from_roots<S: Scalar>(x: &Alphabet<S>, t: &S) -> S {
    x.letters()
        .iter()
        .fold(S::one(), |acc, letter| acc * (t.clone() - letter.clone()))
}

/// Coefficients `b_r = (-1)^r sigma_r[x]` of `prod_j (t - x_j) = sum_r b_r t^{N-r}`,
/// highest degree first.
pub fn vieta_coefficients<S: Scalar>(x: &Alphabet<S>) -> Vec<S> {
    elementary_all(x)
        .into_iter()
        .enumerate()
        .map(|(r, s)| s.mul_i64(sign(r)))
        .collect()
}
