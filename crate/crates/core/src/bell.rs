//! Partial Bell polynomials `B_{nk}(g_1, ..., g_{n-k+1})`.
//!
//! `g` is passed as a slice whose element `g[j - 1]` is the Taylor
//! coefficient `g_j` of `g(t) = sum_j g_j t^j / j!`. The partial polynomials
//! are the coefficients in
//!
//! ```text
//! g(t)^k / k! = sum_{n >= k} B_{nk}[g] t^n / n!
//! ```
//!
//! with `B_{n0} = delta_{n0}`. [`bell`] uses the triangular recurrence
//! `B_{nk} = sum_i C(n-1, i-1) g_i B_{n-i, k-1}`; [`bell_oracle`] expands the
//! power series directly and is kept as an independent cross-check.

use crate::error::{Error, Result};
use crate::scalar::{binomial, factorial, Scalar, MAX_FACTORIAL};

fn check_args<S>(n: usize, k: usize, g: &[S]) -> Result<()> {
    if k > n {
        return Err(Error::Domain(format!("B_{{{n},{k}}} requires k <= n")));
    }
    if n > MAX_FACTORIAL {
        return Err(Error::TooLarge(format!("Bell order {n} exceeds {MAX_FACTORIAL}")));
    }
    if k >= 1 && g.len() < n - k + 1 {
        return Err(Error::InsufficientCoefficients { needed: n - k + 1, got: g.len() });
    }
    Ok(())
}

/// Triangle `table[m][j] = B_{mj}[g]` for `0 <= j <= m <= nmax`.
///
/// Requires `g.len() >= nmax` (all entries `B_{m1} = g_m` must be defined).
pub fn bell_table<S: Scalar>(nmax: usize, g: &[S]) -> Result<Vec<Vec<S>>> {
    if nmax > MAX_FACTORIAL {
        return Err(Error::TooLarge(format!("Bell order {nmax} exceeds {MAX_FACTORIAL}")));
    }
    if g.len() < nmax {
        return Err(Error::InsufficientCoefficients { needed: nmax, got: g.len() });
    }
    Ok(triangle(nmax, nmax, g))
}

// Rows 0..=n, columns 0..=min(row, kmax). Entries whose argument list would
// run past the end of `g` are never reached from the requested corner.
fn triangle<S: Scalar>(n: usize, kmax: usize, g: &[S]) -> Vec<Vec<S>> {
    let coeff = |i: usize| -> S { g.get(i - 1).cloned().unwrap_or_else(S::zero) };
    let mut table: Vec<Vec<S>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut row = Vec::with_capacity(m.min(kmax) + 1);
        row.push(if m == 0 { S::one() } else { S::zero() });
        for j in 1..=m.min(kmax) {
            let mut acc = S::zero();
            for i in 1..=(m - j + 1) {
                let prev = &table[m - i];
                if j - 1 < prev.len() {
                    let term = coeff(i) * prev[j - 1].clone();
                    acc = acc + term.mul_i64(binomial(m - 1, i - 1));
                }
            }
            row.push(acc);
        }
        table.push(row);
    }
    table
}

/// `B_{nk}[g]`, exact over any [`Scalar`].
pub fn bell<S: Scalar>(n: usize, k: usize, g: &[S]) -> Result<S> {
    check_args(n, k, g)?;
    if k == 0 {
        return Ok(if n == 0 { S::one() } else { S::zero() });
    }
    let table = triangle(n, k, g);
    Ok(table[n][k].clone())
}

/// `sum_{m=0}^{n} B_{nm}[g]`, without the `1/n!` prefactor of the usual
/// complete Bell polynomial.
pub fn complete_bell_sum<S: Scalar>(n: usize, g: &[S]) -> Result<S> {
    let table = bell_table(n, g)?;
    Ok(table[n].iter().cloned().fold(S::zero(), |a, b| a + b))
}

/// Reference evaluation of `B_{nk}[g]` by raising the truncated series
/// `sum_j g_j t^j / j!` to the `k`-th power and reading off `t^n`.
pub fn bell_oracle<S: Scalar>(n: usize, k: usize, g: &[S]) -> Result<S> {
    check_args(n, k, g)?;
    // power[d] is the coefficient of t^d.
    let mut power = vec![S::zero(); n + 1];
    power[0] = S::one();
    if k > 0 {
        let mut series = vec![S::zero(); n + 1];
        for j in 1..=(n - k + 1) {
            series[j] = g[j - 1].clone().div_i64(factorial(j)?);
        }
        for _ in 0..k {
            let mut next = vec![S::zero(); n + 1];
            for (a, pa) in power.iter().enumerate() {
                if pa.is_zero() {
                    continue;
                }
                for (b, sb) in series.iter().enumerate().take(n + 1 - a).skip(1) {
                    next[a + b] = next[a + b].clone() + pa.clone() * sb.clone();
                }
            }
            power = next;
        }
    }
    Ok(power[n].clone().mul_i64(factorial(n)?).div_i64(factorial(k)?))
}
