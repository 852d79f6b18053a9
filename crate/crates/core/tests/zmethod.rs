mod common;

use common::{complex, complex_matrix, rng};
use lieclosed::groups::{galilei_algebra, lorentz_algebra, lorentz_aux, GalileiParams, LorentzParams};
use lieclosed::invariants::char_poly_invariants;
use lieclosed::oracle::{series_exp, DEFAULT_SERIES_TOL};
use lieclosed::zmethod::{
    confluent_basis, matrix_exp, matrix_function, matrix_function_confluent,
    projectors_from_invariants, projectors_product_form, spectrum_of, FunctionDescriptor,
    Spectrum,
};
use lieclosed::{Error, SquareMatrix};
use num_complex::Complex64;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn sorted_by_re(sp: &Spectrum) -> Vec<(Complex64, usize)> {
    let mut roots = sp.roots.clone();
    roots.sort_by(|x, y| x.0.re.total_cmp(&y.0.re));
    roots
}

/// `S diag(values) S^-1` with a well-conditioned random `S`.
fn with_spectrum(rng: &mut rand_chacha::ChaCha8Rng, values: &[Complex64]) -> SquareMatrix {
    let n = values.len();
    let s = &SquareMatrix::identity(n) + &complex_matrix(rng, n).scale_real(0.3);
    let s_inv = s.try_inverse().unwrap();
    &(&s * &SquareMatrix::from_diagonal(values)) * &s_inv
}

fn simple_values(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Vec<Complex64> {
    let mut values: Vec<Complex64> = Vec::new();
    while values.len() < n {
        let z = complex(rng).scale(2.0);
        if values.iter().all(|v| (v - z).norm() > 0.2) {
            values.push(z);
        }
    }
    values
}

#[test]
fn spectrum_examples() {
    let sp = spectrum_of(&SquareMatrix::from_real_diagonal(&[1.0, 2.0, 3.0]), None).unwrap();
    let roots = sorted_by_re(&sp);
    assert_eq!(roots.iter().map(|r| r.1).collect::<Vec<_>>(), vec![1, 1, 1]);
    for (r, want) in roots.iter().zip([1.0, 2.0, 3.0]) {
        assert!((r.0 - want).norm() < 1e-12);
    }
    assert!(sp.is_simple());
    assert_eq!(sp.dim(), 3);

    let p = GalileiParams { omega: [0.0, 0.0, 2.0], v: [1.0, 0.0, -0.5], a: [0.2, 0.3, 0.4], a0: 1.0 };
    let sp = spectrum_of(&galilei_algebra(&p), None).unwrap();
    assert_eq!(sp.max_multiplicity(), 3);
    assert_eq!(sp.roots.len(), 3);
}

#[test]
fn diagonal_projectors() {
    let a = SquareMatrix::from_real_diagonal(&[1.0, 2.0]);
    let sp = spectrum_of(&a, None).unwrap();
    let product = projectors_product_form(&a, &sp).unwrap();
    let invariant = projectors_from_invariants(&a, &sp, &char_poly_invariants(&a).unwrap()).unwrap();
    for basis in [&product, &invariant] {
        for (lambda, z) in &basis.projectors {
            let want = if (lambda - 1.0).norm() < 1e-9 { [1.0, 0.0] } else { [0.0, 1.0] };
            assert!(z.max_abs_diff(&SquareMatrix::from_real_diagonal(&want)) < 1e-12);
        }
    }
}

#[test]
fn projector_relations_on_random_simple_spectra() {
    let mut r = rng(61);
    for n in 2..=6 {
        for _ in 0..5 {
            let values = simple_values(&mut r, n);
            let a = with_spectrum(&mut r, &values);
            let sp = spectrum_of(&a, None).unwrap();
            assert!(sp.is_simple());
            let phi = char_poly_invariants(&a).unwrap();
            let product = projectors_product_form(&a, &sp).unwrap();
            let invariant = projectors_from_invariants(&a, &sp, &phi).unwrap();
            let res = product.residuals(&a);
            assert!(res.completeness < 1e-10, "{res:?}");
            assert!(res.idempotence < 1e-9 && res.orthogonality < 1e-9, "{res:?}");
            assert!(res.trace < 1e-9 && res.reconstruction < 1e-10, "{res:?}");
            for ((l1, z1), (l2, z2)) in product.projectors.iter().zip(&invariant.projectors) {
                assert_eq!(l1, l2);
                assert!(z1.max_abs_diff(z2) < 1e-9);
            }
            let powers = a.powers(n - 1);
            for (k, ak) in powers.iter().enumerate() {
                let rebuilt = product.apply(|l| l.powi(k as i32));
                assert!(rebuilt.max_abs_diff(ak) < 1e-9);
            }
            for (lambda, z) in &product.projectors {
                for (k, ak) in powers.iter().enumerate().take(4) {
                    assert!(((ak * z).trace() - lambda.powi(k as i32)).norm() < 1e-8);
                }
            }
        }
    }
}

#[test]
fn lorentz_projectors_in_closed_form() {
    let p = LorentzParams { omega: [0.4, -0.7, 1.0], zeta: [1.2, 0.3, -0.5] };
    let a = lorentz_algebra(&p);
    let aux = lorentz_aux(&p);
    let (u, v) = (aux.u, aux.v);
    let id = SquareMatrix::identity(4);
    let a2 = &a * &a;
    // Z_{+-U} = A (A +- U)(A^2 - V^2) / (2 U^2 (U^2 - V^2)), and U <-> V.
    let closed = |x: Complex64, y: Complex64, sign: f64| {
        let num = &(&a * &a.shift(x * sign)) * &(&a2 - &id.scale(y * y));
        num.scale((x * x * 2.0 * (x * x - y * y)).inv())
    };
    let sp = spectrum_of(&a, None).unwrap();
    let basis = projectors_product_form(&a, &sp).unwrap();
    for (lambda, z) in &basis.projectors {
        let expected = [(u, 1.0), (-u, -1.0), (v, 1.0), (-v, -1.0)]
            .into_iter()
            .find(|(root, _)| (lambda - root).norm() < 1e-9)
            .map(|(root, sign)| if root == u || root == -u { closed(u, v, sign) } else { closed(v, u, sign) })
            .expect("eigenvalue is one of +-U, +-V");
        assert!(z.max_abs_diff(&expected) < 1e-10);
    }
}

#[test]
fn degenerate_spectra_are_rejected_by_the_product_form() {
    let a = SquareMatrix::from_real_diagonal(&[1.0, 1.0, 2.0]);
    let sp = spectrum_of(&a, None).unwrap();
    assert_eq!(sp.max_multiplicity(), 2);
    assert!(matches!(projectors_product_form(&a, &sp), Err(Error::DegenerateSpectrum { .. })));
    let e = matrix_exp(&a).unwrap();
    let want = SquareMatrix::from_real_diagonal(&[1f64.exp(), 1f64.exp(), 2f64.exp()]);
    assert!(e.max_abs_diff(&want) < 1e-12);
}

#[test]
fn matrix_function_examples() {
    let mut r = rng(62);
    let values = simple_values(&mut r, 4);
    let a = with_spectrum(&mut r, &values);
    let identity = FunctionDescriptor::from_value(|z| z);
    assert!(matrix_function(&a, &identity).unwrap().max_abs_diff(&a) < 1e-12);

    let d = SquareMatrix::from_real_diagonal(&[1.0, 2.0, 3.0]);
    let square = FunctionDescriptor::from_value(|z| z * z);
    let out = matrix_function(&d, &square).unwrap();
    assert!(out.max_abs_diff(&SquareMatrix::from_real_diagonal(&[1.0, 4.0, 9.0])) < 1e-12);

    let poly = FunctionDescriptor::polynomial(vec![c(2.0), c(-1.0), c(0.5), c(3.0)]);
    let direct = &(&(&SquareMatrix::identity(4).scale_real(2.0) - &a) + &(&a * &a).scale_real(0.5))
        + &a.pow(3).scale_real(3.0);
    assert!(matrix_function(&a, &poly).unwrap().max_abs_diff(&direct) < 1e-10);

    let no_derivatives = FunctionDescriptor::from_value(|z| z.exp());
    let jordan = SquareMatrix::from_rows(&[vec![c(1.0), c(1.0)], vec![c(0.0), c(1.0)]]).unwrap();
    assert!(matches!(
        matrix_function(&jordan, &no_derivatives),
        Err(Error::UndefinedFunction { order: 1, .. })
    ));
}

#[test]
fn exponential_examples() {
    assert_eq!(matrix_exp(&SquareMatrix::zeros(3)).unwrap(), SquareMatrix::identity(3));
    let d = SquareMatrix::from_real_diagonal(&[2f64.ln(), 3f64.ln()]);
    assert!(matrix_exp(&d).unwrap().max_abs_diff(&SquareMatrix::from_real_diagonal(&[2.0, 3.0])) < 1e-14);

    let nilpotent = SquareMatrix::from_rows(&[vec![c(0.0), c(1.0)], vec![c(0.0), c(0.0)]]).unwrap();
    let sp = spectrum_of(&nilpotent, None).unwrap();
    assert_eq!(sp.roots.len(), 1);
    let e = matrix_function_confluent(&nilpotent, &sp, &FunctionDescriptor::exp()).unwrap();
    assert!(e.max_abs_diff(&(&SquareMatrix::identity(2) + &nilpotent)) < 1e-15);

    let mut r = rng(63);
    for _ in 0..50 {
        let a = complex_matrix(&mut r, 4);
        let a = a.scale_real(3.0 / a.norm_one());
        let oracle = series_exp(&a, DEFAULT_SERIES_TOL).unwrap();
        let rel = matrix_exp(&a).unwrap().max_abs_diff(&oracle) / oracle.max_abs();
        assert!(rel < 1e-10, "relative {rel:.2e}");
    }
}

#[test]
fn confluent_evaluation_with_forced_double_root() {
    let mut r = rng(64);
    for jordan in [false, true] {
        for _ in 0..10 {
            let mut values = simple_values(&mut r, 4);
            values.insert(0, values[0]);
            let s = &SquareMatrix::identity(5) + &complex_matrix(&mut r, 5).scale_real(0.3);
            let mut j = SquareMatrix::from_diagonal(&values);
            if jordan {
                j[(0, 1)] = c(1.0);
            }
            let a = &(&s * &j) * &s.try_inverse().unwrap();
            let oracle = series_exp(&a, DEFAULT_SERIES_TOL).unwrap();
            assert!(matrix_exp(&a).unwrap().max_abs_diff(&oracle) < 1e-8);
            let sp = spectrum_of(&a, None).unwrap().merged(1e-6);
            assert_eq!(sp.max_multiplicity(), 2);
            let confluent = matrix_function_confluent(&a, &sp, &FunctionDescriptor::exp()).unwrap();
            assert!(confluent.max_abs_diff(&oracle) < 1e-8);
        }
    }
}

#[test]
fn galilei_confluent_form() {
    for w in [0.5, 1.0, 2.0, 3.0] {
        let p = GalileiParams { omega: [0.0, w, 0.0], v: [0.4, -1.0, 0.6], a: [1.5, 0.2, -0.8], a0: 0.3 };
        let a = galilei_algebra(&p);
        let sp = spectrum_of(&a, None).unwrap();
        let confluent = matrix_function_confluent(&a, &sp, &FunctionDescriptor::exp()).unwrap();
        let a2 = &a * &a;
        let a3 = &a2 * &a;
        let expected = &(&(&SquareMatrix::identity(5) + &a) + &a2.scale_real(0.5))
            + &(&(&a3 * &a).scale_real((w * w / 2.0 + w.cos() - 1.0) / w.powi(4))
                + &a3.scale_real((w - w.sin()) / w.powi(3)));
        assert!(confluent.max_abs_diff(&expected) < 1e-10);

        let basis = confluent_basis(&a, &sp).unwrap();
        let rebuilt = basis.iter().fold(SquareMatrix::zeros(5), |acc, q| {
            let d = FunctionDescriptor::exp().derivative(q.order, q.eigenvalue).unwrap();
            &acc + &q.matrix.scale(d)
        });
        assert!(rebuilt.max_abs_diff(&expected) < 1e-10);
    }
}

/// `F(A)` from the cofactor expansion of the formal determinant
/// `| F(A) I A A^2 ; F(l_i) 1 l_i l_i^2 |` along its first column.
fn formal_determinant_3x3(a: &SquareMatrix, l: [Complex64; 3], f: impl Fn(Complex64) -> Complex64) -> SquareMatrix {
    let id = SquareMatrix::identity(3);
    let a2 = a * a;
    let det2 = |a: Complex64, b: Complex64, c: Complex64, d: Complex64| a * d - b * c;
    // Minor with the matrix row (I, A, A^2) on top and rows j, k of the alphabet.
    let minor = |j: usize, k: usize| {
        let (x, y) = (l[j], l[k]);
        &(&id.scale(det2(x, x * x, y, y * y)) - &a.scale(det2(c(1.0), x * x, c(1.0), y * y)))
            + &a2.scale(det2(c(1.0), x, c(1.0), y))
    };
    let vandermonde = (l[1] - l[0]) * (l[2] - l[0]) * (l[2] - l[1]);
    // 0 = F(A) V - F(l0) M(1,2) + F(l1) M(0,2) - F(l2) M(0,1).
    let rhs = &(&minor(1, 2).scale(f(l[0])) - &minor(0, 2).scale(f(l[1]))) + &minor(0, 1).scale(f(l[2]));
    rhs.scale(vandermonde.inv())
}

#[test]
fn determinantal_form_matches_projector_sum() {
    let mut r = rng(65);
    for _ in 0..20 {
        let values = simple_values(&mut r, 3);
        let a = with_spectrum(&mut r, &values);
        let sp = spectrum_of(&a, None).unwrap();
        let l = sp.values();
        let formal = formal_determinant_3x3(&a, [l[0], l[1], l[2]], |z| z.exp());
        assert!(formal.max_abs_diff(&matrix_exp(&a).unwrap()) < 1e-10);
        let sine = |z: Complex64| z.sin();
        let formal = formal_determinant_3x3(&a, [l[0], l[1], l[2]], sine);
        let spectral = matrix_function(&a, &FunctionDescriptor::from_value(sine)).unwrap();
        assert!(formal.max_abs_diff(&spectral) < 1e-10);
    }
}
