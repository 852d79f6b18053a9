//! Polynomial roots for the characteristic polynomial, and clustering of
//! numerically split multiple roots.

use num_complex::Complex64;

use crate::error::{Error, Result};

const EPS: f64 = f64::EPSILON;
const MAX_ITERATIONS: usize = 1000;

/// `p(z)` and `p'(z)` for monic-or-not coefficients, highest degree first.
fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// `sum_j |a_j| |z|^{N-j}`, the scale against which `|p(z)|` is judged.
fn abs_eval(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    coeffs.iter().fold(0.0, |acc, c| acc * r + c.norm())
}

/// `|p(z)|` relative to the larger of the componentwise scale and the
/// normwise scale `sum_j |a_j| max(1, |z|)^{N-j}`. The normwise part lets
/// approximations to a multiple root stop once `p` is at roundoff level,
/// which they would never reach componentwise near `z = 0`.
fn backward_error(coeffs: &[Complex64], z: Complex64) -> f64 {
    let (p, _) = eval_with_derivative(coeffs, z);
    let r = z.norm().max(1.0);
    let normwise = coeffs.iter().fold(0.0, |acc, c| acc * r + c.norm());
    let scale = abs_eval(coeffs, z).max(normwise);
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

/// All roots of `sum_j coeffs[j] t^{N-j}` with `coeffs[0] = 1`, by the
/// Aberth-Ehrlich simultaneous iteration.
pub(crate) fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    // Fujiwara-type bound on the root moduli.
    let bound = (1..=n)
        .map(|j| coeffs[j].norm().powf(1.0 / j as f64))
        .fold(0.0, f64::max);
    if bound == 0.0 {
        return Ok(vec![Complex64::new(0.0, 0.0); n]);
    }
    let center = -coeffs[1] / n as f64;
    let radius = 2.0 * bound;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            center + Complex64::from_polar(radius, angle)
        })
        .collect();
    let tol = 4.0 * n as f64 * EPS;
    let mut done = vec![false; n];
    for _ in 0..MAX_ITERATIONS {
        let mut all_done = true;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (p, dp) = eval_with_derivative(coeffs, z[i]);
            if backward_error(coeffs, z[i]) <= tol {
                done[i] = true;
                continue;
            }
            all_done = false;
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.re.is_finite() && step.im.is_finite() {
                z[i] -= step;
            } else {
                // Derivative vanished; nudge off the critical point.
                z[i] += Complex64::from_polar(radius * 1e-3, i as f64);
            }
        }
        if all_done {
            return Ok(z);
        }
    }
    if z.iter().all(|&zi| backward_error(coeffs, zi) <= 100.0 * tol) {
        Ok(z)
    } else {
        Err(Error::NonConvergence { iterations: MAX_ITERATIONS })
    }
}

/// Taylor coefficients of `p` at `c`: `out[m] = p^{(m)}(c) / m!`.
fn taylor_at(coeffs: &[Complex64], c: Complex64) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let mut work = coeffs.to_vec();
    let mut out = Vec::with_capacity(n + 1);
    for m in 0..=n {
        // Synthetic division of the remaining polynomial by (t - c).
        let len = n + 1 - m;
        for j in 1..len {
            let prev = work[j - 1];
            work[j] += prev * c;
        }
        out.push(work[len - 1]);
    }
    out
}

/// Radius within which roots of a perturbed polynomial scatter around an
/// exact `m`-fold root at `c`, given the coefficient noise of a
/// characteristic polynomial for a matrix of norm `rho`.
///
/// Returns 0 unless the `m` points of spread `r` around `c` look like one
/// split root: near `c` the polynomial must behave like
/// `a_m (t - c)^m` times a factor that is nearly constant on the disk.
fn perturbation_radius(coeffs: &[Complex64], c: Complex64, m: usize, rho: f64, r: f64) -> f64 {
    let n = coeffs.len() - 1;
    let delta = 10.0 * n as f64 * EPS * (c.norm() + 2.0 * rho).powi(n as i32);
    let t = taylor_at(coeffs, c);
    let leading = t[m].norm();
    if leading == 0.0 {
        return 0.0;
    }
    let r = r.max(EPS * (1.0 + c.norm()));
    let higher: f64 = (m + 1..=n).map(|k| t[k].norm() * r.powi((k - m) as i32)).sum();
    if higher >= leading {
        return 0.0;
    }
    let mut binom = 1.0;
    for k in (0..m).rev() {
        // binom = C(m, k)
        binom = binom * (k + 1) as f64 / (m - k) as f64;
        let bound = 2.0 * binom * leading * r.powi((m - k) as i32) + delta;
        if t[k].norm() > bound {
            return 0.0;
        }
    }
    2.0 * (delta / leading).powf(1.0 / m as f64)
}

fn centroid(points: &[Complex64]) -> Complex64 {
    points.iter().sum::<Complex64>() / points.len() as f64
}

fn radius(points: &[Complex64], c: Complex64) -> f64 {
    points.iter().map(|p| (p - c).norm()).fold(0.0, f64::max)
}

/// Newton on `p^{(m-1)}`, for which an `m`-fold root of `p` is simple.
fn refine(coeffs: &[Complex64], start: Complex64, m: usize) -> Complex64 {
    let mut d = coeffs.to_vec();
    for _ in 1..m {
        let deg = d.len() - 1;
        d = d[..deg]
            .iter()
            .enumerate()
            .map(|(j, &c)| c * (deg - j) as f64)
            .collect();
    }
    let mut z = start;
    for _ in 0..30 {
        let (p, dp) = eval_with_derivative(&d, z);
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        if !(step.re.is_finite() && step.im.is_finite()) {
            break;
        }
        z -= step;
        if step.norm() <= 2.0 * EPS * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

/// Groups roots that are numerically one multiple root.
///
/// Two clusters merge when the merged cluster fits inside `cluster_tol`, or
/// inside the scatter radius expected for a multiple root of that order
/// under roundoff in the coefficients. Returns `(value, multiplicity)` with
/// each value refined as a simple root of the appropriate derivative.
pub(crate) fn cluster_roots(
    coeffs: &[Complex64],
    roots: &[Complex64],
    cluster_tol: f64,
    rho: f64,
) -> Vec<(Complex64, usize)> {
    let mut clusters: Vec<Vec<Complex64>> = roots.iter().map(|&r| vec![r]).collect();
    loop {
        let mut pairs = Vec::new();
        for i in 0..clusters.len() {
            for j in (i + 1)..clusters.len() {
                let d = (centroid(&clusters[i]) - centroid(&clusters[j])).norm();
                pairs.push((d, i, j));
            }
        }
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut merged = None;
        for &(_, i, j) in &pairs {
            let mut union = clusters[i].clone();
            union.extend_from_slice(&clusters[j]);
            let c = centroid(&union);
            let r = radius(&union, c);
            let allowed = cluster_tol.max(perturbation_radius(coeffs, c, union.len(), rho, r));
            if r <= allowed {
                merged = Some((i, j, union));
                break;
            }
        }
        match merged {
            Some((i, j, union)) => {
                clusters.remove(j);
                clusters[i] = union;
            }
            None => break,
        }
    }
    let mut out: Vec<(Complex64, usize)> = clusters
        .iter()
        .map(|points| {
            let c = centroid(points);
            let m = points.len();
            let refined = refine(coeffs, c, m);
            let r = radius(points, c);
            let limit = r.max(perturbation_radius(coeffs, c, m, rho, r));
            if (refined - c).norm() <= limit.max(EPS) {
                (refined, m)
            } else {
                (c, m)
            }
        })
        .collect();
    out.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    out
}
