mod common;

use common::{ball, direction, rng};
use lieclosed::groups::{
    galilei_algebra, galilei_exp_closed, galilei_exp_polynomial, galilei_powers,
    galilei_quasi_projectors, galilei_reparametrize, gell_mann, lorentz_algebra, lorentz_aux,
    lorentz_exp_closed, lorentz_generators, lorentz_powers, lorentz_uv, metric, poincare_algebra,
    poincare_assemble, poincare_aux, poincare_exp_closed, poincare_powers, poincare_reparametrize,
    rotation_matrix, su3_determinant, su3_element, su3_exp, su3_invariants, su3_square,
    GalileiParams, LorentzParams, PoincareParams, Su3Params, Vec3,
};
use lieclosed::invariants::{char_poly_invariants, contract, invariant_tensor, outer_power, trace_powers};
use lieclosed::oracle::{series_exp, DEFAULT_SERIES_TOL};
use lieclosed::zmethod::{matrix_exp, projectors_product_form, spectrum_of};
use lieclosed::{Error, RealMatrix, SquareMatrix};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn cplx(m: &RealMatrix) -> SquareMatrix {
    SquareMatrix::from_real(m).unwrap()
}

fn series(a: &SquareMatrix) -> RealMatrix {
    series_exp(a, DEFAULT_SERIES_TOL).unwrap().re()
}

fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn vec_dev(a: &Vec3, b: &Vec3) -> f64 {
    (0..3).map(|i| (a[i] - b[i]).abs()).fold(0.0, f64::max)
}

fn lorentz_draw(rng: &mut rand_chacha::ChaCha8Rng) -> LorentzParams {
    LorentzParams { omega: ball(rng, 2.0), zeta: ball(rng, 2.0) }
}

fn poincare_draw(rng: &mut rand_chacha::ChaCha8Rng) -> PoincareParams {
    PoincareParams {
        omega: ball(rng, 2.0),
        zeta: ball(rng, 2.0),
        a: ball(rng, 2.0),
        a0: rng.random_range(-2.0..2.0),
    }
}

fn galilei_draw(rng: &mut rand_chacha::ChaCha8Rng, w: f64) -> GalileiParams {
    GalileiParams {
        omega: direction(rng, w),
        v: ball(rng, 2.0),
        a: ball(rng, 2.0),
        a0: rng.random_range(-2.0..2.0),
    }
}

/// Every value in `got` is within `tol` of a distinct value in `want`.
fn same_multiset(got: &[Complex64], want: &[Complex64], tol: f64) -> bool {
    let mut used = vec![false; want.len()];
    got.len() == want.len()
        && got.iter().all(|g| {
            let hit = (0..want.len()).find(|&k| !used[k] && (g - want[k]).norm() < tol);
            hit.map(|k| used[k] = true).is_some()
        })
}

#[test]
fn lorentz_algebra_examples() {
    assert_eq!(lorentz_algebra(&LorentzParams::default()), SquareMatrix::zeros(4));
    let a = lorentz_algebra(&LorentzParams { omega: [0.0; 3], zeta: [1.5, 0.0, 0.0] });
    assert_eq!(a[(0, 1)], c(-1.5));
    assert_eq!(a[(1, 0)], c(-1.5));
    let mut r = rng(11);
    for _ in 0..20 {
        let p = lorentz_draw(&mut r);
        let det = lorentz_algebra(&p).determinant();
        let f2 = dot(&p.omega, &p.zeta);
        assert!((det + f2 * f2).norm() < 1e-12, "det {det} vs -(w.z)^2 {}", -f2 * f2);
    }
}

#[test]
fn lorentz_generators_span_the_algebra() {
    let p = LorentzParams { omega: [0.3, -0.8, 1.2], zeta: [-0.5, 0.4, 0.9] };
    let gens = lorentz_generators();
    let coords = [p.omega[0], p.omega[1], p.omega[2], p.zeta[0], p.zeta[1], p.zeta[2]];
    let sum = gens
        .iter()
        .zip(coords)
        .fold(SquareMatrix::zeros(4), |acc, (g, x)| &acc + &g.scale_real(x));
    assert!(sum.max_abs_diff(&lorentz_algebra(&p)) < 1e-15);
}

#[test]
fn lorentz_power_traces() {
    let mut r = rng(12);
    for _ in 0..50 {
        let p = lorentz_draw(&mut r);
        let (a2, a3) = lorentz_powers(&p);
        let a = lorentz_algebra(&p);
        assert!((&a * &a).max_abs_diff(&cplx(&a2)) < 1e-12);
        assert!((&(&a * &a) * &a).max_abs_diff(&cplx(&a3)) < 1e-12);
        let (w2, z2, f2) = (dot(&p.omega, &p.omega), dot(&p.zeta, &p.zeta), dot(&p.omega, &p.zeta));
        let t = trace_powers(&a, 4);
        assert!((t[1] - 2.0 * (z2 - w2)).norm() < 1e-12);
        assert!(t[2].norm() < 1e-12);
        assert!((t[3] - (4.0 * f2 * f2 + 2.0 * (z2 - w2).powi(2))).norm() < 1e-11);
    }
    let (a2, a3) = lorentz_powers(&LorentzParams::default());
    assert_eq!(a2.amax(), 0.0);
    assert_eq!(a3.amax(), 0.0);
}

#[test]
fn lorentz_invariants_example() {
    let p = LorentzParams { omega: [1.0, 0.0, 0.0], zeta: [2.0, 0.0, 0.0] };
    let phi = char_poly_invariants(&lorentz_algebra(&p)).unwrap().phi;
    assert!(phi[1].norm() < 1e-14 && phi[3].norm() < 1e-14);
    assert!((phi[2] - c(-3.0)).norm() < 1e-13);
    assert!((phi[4] - c(-4.0)).norm() < 1e-13);
    assert!((phi[4] - lorentz_algebra(&p).determinant()).norm() < 1e-13);
}

#[test]
fn lorentz_spectrum_is_plus_minus_u_v() {
    let mut r = rng(13);
    for _ in 0..30 {
        let p = lorentz_draw(&mut r);
        let aux = lorentz_aux(&p);
        assert!((aux.u2 + aux.v2 + aux.f1).abs() < 1e-10);
        assert!((aux.u2 * aux.v2 + aux.f2 * aux.f2).abs() < 1e-10);
        let sp = spectrum_of(&lorentz_algebra(&p), Some(0.0)).unwrap();
        if !sp.is_simple() {
            continue;
        }
        let (u, v) = lorentz_uv(&p);
        assert!(same_multiset(&sp.values(), &[u, -u, v, -v], 1e-9), "{:?} vs {u}, {v}", sp.values());
    }
}

#[test]
fn lorentz_identity_web() {
    let mut r = rng(14);
    for _ in 0..100 {
        let p = lorentz_draw(&mut r);
        let x = lorentz_aux(&p);
        let z = &p.zeta;
        let w = &p.omega;
        let lhs = -x.f1 * dot(z, z) + dot(z, &x.d) - x.u2 * x.v2;
        assert!(lhs.abs() < 1e-10);
        let comb = |s: f64, a: &Vec3, t: f64, b: &Vec3| -> Vec3 {
            [s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2]]
        };
        let neg = |a: &Vec3| -> Vec3 { [-a[0], -a[1], -a[2]] };
        assert!(vec_dev(&comb(x.v2, z, 1.0, &x.d), &neg(&x.y)) < 1e-10);
        assert!(vec_dev(&comb(x.u2, z, 1.0, &x.d), &neg(&x.x)) < 1e-10);
        assert!(vec_dev(&comb(x.v2, w, -1.0, &x.c), &comb(1.0, &x.w_vec, -x.f1, w)) < 1e-10);
        assert!(vec_dev(&comb(1.0, &x.c, -x.u2, w), &comb(x.f1, w, -1.0, &x.z_vec)) < 1e-10);
    }
}

#[test]
fn lorentz_exp_examples() {
    assert_eq!(lorentz_exp_closed(&LorentzParams::default()).unwrap(), DMatrix::identity(4, 4));

    let zeta = 0.85;
    let boost = lorentz_exp_closed(&LorentzParams { omega: [0.0; 3], zeta: [zeta, 0.0, 0.0] }).unwrap();
    let mut expected = DMatrix::identity(4, 4);
    expected[(0, 0)] = zeta.cosh();
    expected[(1, 1)] = zeta.cosh();
    expected[(0, 1)] = -zeta.sinh();
    expected[(1, 0)] = -zeta.sinh();
    assert!((boost - expected).amax() < 1e-14);

    let theta = 1.1;
    let p = LorentzParams { omega: [0.0, 0.0, theta], zeta: [0.0; 3] };
    let rot = lorentz_exp_closed(&p).unwrap();
    let oracle = series(&lorentz_algebra(&p));
    assert!((&rot - &oracle).amax() < 1e-13);
    assert!((rot[(1, 1)] - theta.cos()).abs() < 1e-14);
    assert!((rot[(2, 2)] - theta.cos()).abs() < 1e-14);
    assert!((rot[(1, 2)].abs() - theta.sin()).abs() < 1e-14);
    assert_eq!(rot[(0, 0)], 1.0);
    assert_eq!(rot[(3, 3)], 1.0);
}

#[test]
fn lorentz_small_parameter_limit_is_third_order() {
    let p = LorentzParams { omega: [0.7, -0.2, 1.1], zeta: [0.4, 0.9, -0.5] };
    let defect = |eps: f64| {
        let q = LorentzParams {
            omega: p.omega.map(|x| eps * x),
            zeta: p.zeta.map(|x| eps * x),
        };
        let a = lorentz_algebra(&q).re();
        let taylor = DMatrix::identity(4, 4) + &a + &a * &a * 0.5;
        (lorentz_exp_closed(&q).unwrap() - taylor).amax()
    };
    let ratio = defect(1e-2) / defect(1e-3);
    assert!((700.0..1400.0).contains(&ratio), "ratio {ratio}");
}

#[test]
fn lorentz_metric_and_determinant() {
    let mut r = rng(15);
    let eta = metric();
    for _ in 0..200 {
        let p = lorentz_draw(&mut r);
        let l = lorentz_exp_closed(&p).unwrap();
        assert!((l.transpose() * &eta * &l - &eta).amax() < 1e-9);
        assert!((l.determinant() - 1.0).abs() < 1e-9);
        assert!((&l - series(&lorentz_algebra(&p))).amax() < 1e-10);
    }
}

#[test]
fn poincare_algebra_examples() {
    assert_eq!(poincare_algebra(&PoincareParams::default()), SquareMatrix::zeros(5));
    let mut r = rng(21);
    for _ in 0..30 {
        let p = poincare_draw(&mut r);
        let a = poincare_algebra(&p);
        assert!((0..5).all(|j| a[(4, j)] == c(0.0)));
        let aux = lorentz_aux(&p.lorentz());
        let phi = char_poly_invariants(&a).unwrap().phi;
        let expected = [1.0, 0.0, aux.f1, 0.0, -aux.f2 * aux.f2, 0.0];
        for (k, e) in expected.iter().enumerate() {
            assert!((phi[k] - e).norm() < 1e-11, "phi_{k} = {} vs {e}", phi[k]);
        }
        let t = trace_powers(&a, 4);
        assert!((t[1] + 2.0 * aux.f1).norm() < 1e-12);
        assert!((t[3] - (2.0 * aux.f1 * aux.f1 + 4.0 * aux.f2 * aux.f2)).norm() < 1e-11);
    }
}

#[test]
fn poincare_powers_examples() {
    let (a2, a3, a4) = poincare_powers(&PoincareParams::default());
    assert!(a2.amax() == 0.0 && a3.amax() == 0.0 && a4.amax() == 0.0);
    let mut r = rng(22);
    for _ in 0..30 {
        let p = poincare_draw(&mut r);
        let a = poincare_algebra(&p);
        let (a2, a3, a4) = poincare_powers(&p);
        let n2 = &a * &a;
        assert!(n2.max_abs_diff(&cplx(&a2)) < 1e-12);
        assert!((&n2 * &a).max_abs_diff(&cplx(&a3)) < 1e-12);
        assert!((&n2 * &n2).max_abs_diff(&cplx(&a4)) < 1e-11);

        let aux = poincare_aux(&p);
        let cross = [
            p.omega[1] * p.a[2] - p.omega[2] * p.a[1],
            p.omega[2] * p.a[0] - p.omega[0] * p.a[2],
            p.omega[0] * p.a[1] - p.omega[1] * p.a[0],
        ];
        let pv = [0, 1, 2].map(|i| cross[i] - p.a0 * p.zeta[i]);
        assert!(vec_dev(&aux.p, &pv) < 1e-14);
        let (f1, f2) = (aux.lorentz.f1, aux.lorentz.f2);
        for i in 0..3 {
            for j in 0..3 {
                let delta = if i == j { 1.0 } else { 0.0 };
                let expected = delta * f2 * f2 - f1 * aux.lorentz.l[i][j];
                assert!((a4[(i + 1, j + 1)] - expected).abs() < 1e-11);
            }
        }
    }
}

#[test]
fn poincare_exp_matches_series_and_lorentz_block() {
    assert_eq!(poincare_exp_closed(&PoincareParams::default()).unwrap(), DMatrix::identity(5, 5));
    let mut r = rng(23);
    for _ in 0..200 {
        let p = poincare_draw(&mut r);
        let g = poincare_exp_closed(&p).unwrap();
        assert!((&g - series(&poincare_algebra(&p))).amax() < 1e-9);
        for j in 0..4 {
            assert_eq!(g[(4, j)], 0.0);
        }
        assert_eq!(g[(4, 4)], 1.0);
        let lambda = lorentz_exp_closed(&p.lorentz()).unwrap();
        assert!((g.view((0, 0), (4, 4)) - &lambda).amax() < 1e-9);

        let homogeneous = poincare_exp_closed(&PoincareParams { a: [0.0; 3], a0: 0.0, ..p }).unwrap();
        let mut expected = DMatrix::identity(5, 5);
        expected.view_mut((0, 0), (4, 4)).copy_from(&lambda);
        assert!((homogeneous - expected).amax() < 1e-9);
    }
}

#[test]
fn poincare_zero_eigenvalue_projector() {
    let p = PoincareParams { omega: [0.6, -0.3, 0.9], zeta: [0.2, 1.1, -0.4], a: [0.5, 0.1, -0.7], a0: 0.3 };
    let a = poincare_algebra(&p);
    let aux = lorentz_aux(&p.lorentz());
    let (a2, _, a4) = poincare_powers(&p);
    let uv = aux.u2 * aux.v2;
    let z0 = DMatrix::identity(5, 5) + (a4 - a2 * (aux.u2 + aux.v2)) / uv;
    let sp = spectrum_of(&a, None).unwrap();
    assert!(sp.is_simple());
    let basis = projectors_product_form(&a, &sp).unwrap();
    let (_, zero) = basis.projectors.iter().min_by(|x, y| x.0.norm().total_cmp(&y.0.norm())).unwrap();
    assert!(zero.max_abs_diff(&cplx(&z0)) < 1e-10);
}

#[test]
fn poincare_reparametrize_examples() {
    let (l, t) = poincare_reparametrize(&DMatrix::identity(5, 5)).unwrap();
    assert_eq!(l, DMatrix::identity(4, 4));
    assert_eq!(t, [0.0; 4]);

    let p = PoincareParams { omega: [0.0; 3], zeta: [0.0; 3], a: [0.4, -1.2, 2.0], a0: 0.7 };
    let g = poincare_exp_closed(&p).unwrap();
    let (l, t) = poincare_reparametrize(&g).unwrap();
    assert!((l - DMatrix::identity(4, 4)).amax() < 1e-15);
    let want = [p.a0, p.a[0], p.a[1], p.a[2]];
    let a = poincare_algebra(&p);
    for i in 0..4 {
        assert!((t[i] - want[i]).abs() < 1e-15);
        assert!((a[(i, 4)].re - want[i]).abs() == 0.0);
    }

    let g = poincare_exp_closed(&poincare_draw(&mut rng(24))).unwrap();
    let (l, t) = poincare_reparametrize(&g).unwrap();
    assert_eq!(poincare_assemble(&l, &t), g);
    assert!(matches!(
        poincare_reparametrize(&DMatrix::identity(4, 4)),
        Err(Error::ShapeMismatch(_))
    ));
    let mut bad = g;
    bad[(4, 0)] = 1e-3;
    assert!(matches!(poincare_reparametrize(&bad), Err(Error::MalformedGroupElement(_))));
}

#[test]
fn galilei_algebra_examples() {
    assert_eq!(galilei_algebra(&GalileiParams::default()), SquareMatrix::zeros(5));
    let mut r = rng(31);
    for _ in 0..30 {
        let w = r.random_range(0.1..3.0);
        let p = galilei_draw(&mut r, w);
        let a = galilei_algebra(&p);
        let phi = char_poly_invariants(&a).unwrap().phi;
        let expected = [1.0, 0.0, w * w, 0.0, 0.0, 0.0];
        for (k, e) in expected.iter().enumerate() {
            assert!((phi[k] - e).norm() < 1e-11, "phi_{k} = {}", phi[k]);
        }
        let t = trace_powers(&a, 4);
        assert!((t[1] + 2.0 * w * w).norm() < 1e-12);
        assert!((t[3] - 2.0 * w.powi(4)).norm() < 1e-10);
    }
}

#[test]
fn galilei_spectrum() {
    let p = GalileiParams { omega: [0.0, 0.0, 2.0], v: [0.3, -0.5, 0.8], a: [1.0, 0.2, -0.4], a0: 0.6 };
    let sp = spectrum_of(&galilei_algebra(&p), None).unwrap();
    let mut roots = sp.roots.clone();
    roots.sort_by(|x, y| x.0.im.total_cmp(&y.0.im));
    assert_eq!(roots.iter().map(|r| r.1).collect::<Vec<_>>(), vec![1, 3, 1]);
    let want = [Complex64::new(0.0, -2.0), c(0.0), Complex64::new(0.0, 2.0)];
    for (got, want) in roots.iter().zip(want) {
        assert!((got.0 - want).norm() < 1e-6, "{} vs {want}", got.0);
    }
}

#[test]
fn galilei_powers_examples() {
    let (a2, a3, a4) = galilei_powers(&GalileiParams::default());
    assert!(a2.amax() == 0.0 && a3.amax() == 0.0 && a4.amax() == 0.0);
    let mut r = rng(32);
    for _ in 0..30 {
        let w = r.random_range(0.1..3.0);
        let p = galilei_draw(&mut r, w);
        let a = galilei_algebra(&p).re();
        let (a2, a3, a4) = galilei_powers(&p);
        assert!((&a * &a - &a2).amax() < 1e-12);
        assert!((&a * &a2 - &a3).amax() < 1e-12);
        assert!((&a * &a3 - &a4).amax() < 1e-11);
        assert!((&a * &a4 + &a3 * (w * w)).amax() < 1e-10);
        // A^3 keeps only the rotation block and the translation column.
        for j in 0..5 {
            assert_eq!(a3[(0, j)], 0.0);
            assert_eq!(a3[(4, j)], 0.0);
        }
    }
}

#[test]
fn galilei_exp_forms_agree() {
    let mut r = rng(33);
    for _ in 0..100 {
        let w = r.random_range(0.5..3.0);
        let p = galilei_draw(&mut r, w);
        let a = galilei_algebra(&p);
        let oracle = series(&a);
        let closed = galilei_exp_closed(&p).unwrap();
        let confluent = matrix_exp(&a).unwrap();
        assert!(confluent.max_imag() < 1e-10);
        let confluent = confluent.re();
        assert!((&closed - &oracle).amax() < 1e-10);
        assert!((&confluent - &oracle).amax() < 1e-10);
        assert!((&closed - &confluent).amax() < 1e-10);
        assert!((galilei_exp_polynomial(&p).unwrap() - &oracle).amax() < 1e-10);
        assert!((closed.view((1, 1), (3, 3)) - rotation_matrix(&p.omega)).amax() < 1e-12);
        assert_eq!(closed[(0, 0)], 1.0);
        assert_eq!(closed[(0, 4)], p.a0);
        assert_eq!(closed[(4, 4)], 1.0);
    }
}

#[test]
fn galilei_exp_examples() {
    let p = GalileiParams { omega: [0.0; 3], v: [0.0; 3], a: [0.3, -0.6, 1.2], a0: 0.8 };
    let expected = DMatrix::identity(5, 5) + galilei_algebra(&p).re();
    assert!((galilei_exp_closed(&p).unwrap() - expected).amax() < 1e-15);

    let p = GalileiParams {
        omega: [0.0, 0.0, std::f64::consts::FRAC_PI_2],
        v: [0.7, -0.3, 0.2],
        a: [1.1, 0.4, -0.9],
        a0: -0.5,
    };
    let g = galilei_exp_closed(&p).unwrap();
    assert!((&g - series(&galilei_algebra(&p))).amax() < 1e-10);

    let theta = 0.7;
    let g = galilei_exp_closed(&GalileiParams { omega: [0.0, 0.0, theta], ..p }).unwrap();
    let block = g.view((1, 1), (2, 2));
    assert!((block[(0, 0)] - theta.cos()).abs() < 1e-14);
    assert!((block[(1, 1)] - theta.cos()).abs() < 1e-14);
    assert!((block[(0, 1)].abs() - theta.sin()).abs() < 1e-14);
    assert!((block[(0, 1)] + block[(1, 0)]).abs() < 1e-14);
    assert!((g[(3, 3)] - 1.0).abs() < 1e-14);
}

#[test]
fn galilei_quasi_projector_relations() {
    let mut r = rng(34);
    for _ in 0..30 {
        let w = r.random_range(0.3..3.0);
        let p = galilei_draw(&mut r, w);
        let z = galilei_quasi_projectors(&p).unwrap();
        let id = SquareMatrix::identity(5);
        let tol = 1e-10 * (1.0 + 1.0 / w.powi(4));
        assert!((&(&z.z10 + &z.z4) + &z.z5).max_abs_diff(&id) < tol);
        assert!((&z.z4 * &z.z5).max_abs() < tol);
        assert!((&z.z10 * &z.z10).max_abs_diff(&z.z10) < tol);
        assert!((&z.z12 * &z.z12).max_abs() < tol);
        assert!((&z.z10 * &z.z11).max_abs_diff(&z.z11) < tol);
        assert!((&z.z11 * &z.z12).max_abs() < tol);
        let closed = cplx(&galilei_exp_closed(&p).unwrap());
        assert!(z.exp().max_abs_diff(&closed) < 1e-10);
    }
    assert!(matches!(
        galilei_quasi_projectors(&GalileiParams { v: [1.0, 0.0, 0.0], ..Default::default() }),
        Err(Error::Domain(_))
    ));
}

#[test]
fn galilei_reparametrize_examples() {
    let e = galilei_reparametrize(&DMatrix::identity(5, 5)).unwrap();
    assert_eq!(e.r, DMatrix::identity(3, 3));
    assert_eq!((e.v_prime, e.a_prime, e.a0), ([0.0; 3], [0.0; 3], 0.0));

    let omega = [0.4, -0.9, 0.3];
    let p = GalileiParams { omega, ..Default::default() };
    let e = galilei_reparametrize(&galilei_exp_closed(&p).unwrap()).unwrap();
    assert!((&e.r - series(&galilei_algebra(&p)).view((1, 1), (3, 3))).amax() < 1e-13);
    assert!((e.r - rotation_matrix(&omega)).amax() < 1e-14);
    assert_eq!((e.v_prime, e.a_prime, e.a0), ([0.0; 3], [0.0; 3], 0.0));

    let p = GalileiParams { omega: [0.0; 3], v: [0.5, -0.2, 0.1], a: [0.0; 3], a0: 0.0 };
    let e = galilei_reparametrize(&galilei_exp_closed(&p).unwrap()).unwrap();
    let a = galilei_algebra(&p).re();
    for i in 0..3 {
        assert_eq!(e.v_prime[i], -a[(i + 1, 0)]);
    }
    assert!(matches!(
        galilei_reparametrize(&DMatrix::identity(4, 4)),
        Err(Error::ShapeMismatch(_))
    ));
}

#[test]
fn su3_element_examples() {
    assert_eq!(su3_element(&Su3Params::default()), SquareMatrix::zeros(3));
    let w = su3_element(&Su3Params::new([0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]));
    assert_eq!(w, SquareMatrix::from_real_diagonal(&[1.0, -1.0, 0.0]));
    assert_eq!(su3_invariants(&Su3Params::default()), (0.0, 0.0));
}

fn su3_draw(rng: &mut rand_chacha::ChaCha8Rng) -> Su3Params {
    let mut alpha = [0.0; 8];
    for x in &mut alpha {
        *x = rng.random_range(-2.0..2.0);
    }
    Su3Params::new(alpha)
}

#[test]
fn su3_random_identities() {
    let mut r = rng(41);
    for _ in 0..100 {
        let p = su3_draw(&mut r);
        let w = su3_element(&p);
        assert!(w.max_abs_diff(&w.adjoint()) == 0.0);
        assert!(w.trace().norm() < 1e-15);
        let w2 = &w * &w;
        assert!(w2.max_abs_diff(&su3_square(&p)) < 1e-12);
        let t = trace_powers(&w, 3);
        let det = su3_determinant(&p);
        assert!((t[2] - 3.0 * det).norm() < 1e-10);
        let secular = &(&(&w2 * &w) - &w.scale(t[1] * 0.5)) - &SquareMatrix::identity(3).scale(c(det));
        assert!(secular.max_abs() < 1e-10);
        let (phi2, phi3) = su3_invariants(&p);
        assert!((phi2 + p.alpha.iter().map(|a| a * a).sum::<f64>()).abs() < 1e-12);
        assert!((t[1] * -0.5 - phi2).norm() < 1e-12);
        assert!((phi3 + det).abs() < 1e-12);
    }
}

#[test]
fn su3_exp_examples() {
    assert_eq!(su3_exp(&Su3Params::default()).unwrap(), SquareMatrix::identity(3));
    let theta = 1.3;
    let g = su3_exp(&Su3Params::new([0.0, 0.0, theta, 0.0, 0.0, 0.0, 0.0, 0.0])).unwrap();
    let half = Complex64::new(0.0, theta / 2.0).exp();
    assert!(g.max_abs_diff(&SquareMatrix::from_diagonal(&[half, half.conj(), c(1.0)])) < 1e-14);
    let mut r = rng(42);
    for _ in 0..50 {
        let p = su3_draw(&mut r);
        let g = su3_exp(&p).unwrap();
        let oracle = series_exp(&su3_element(&p).scale(Complex64::new(0.0, 0.5)), DEFAULT_SERIES_TOL).unwrap();
        assert!(g.max_abs_diff(&oracle) < 1e-10);
        assert!((&g * &g.adjoint()).max_abs_diff(&SquareMatrix::identity(3)) < 1e-9);
        assert!((g.determinant() - 1.0).norm() < 1e-9);
    }
}

#[test]
fn su3_invariant_tensors() {
    let gens: Vec<SquareMatrix> = (1..=8).map(gell_mann).collect();
    let eta2 = invariant_tensor(&gens, 2).unwrap();
    for i in 0..8 {
        for j in 0..8 {
            let want = if i == j { -1.0 } else { 0.0 };
            assert!((eta2.get(&[i, j]) - want).norm() < 1e-14);
        }
    }
    let p = Su3Params::new([0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
    assert!((su3_determinant(&p) - 1.0).abs() < 1e-15);
    let eta3 = invariant_tensor(&gens, 3).unwrap();
    let alpha: Vec<Complex64> = p.alpha.iter().map(|&x| c(x)).collect();
    let cubic = contract(&outer_power(&alpha, 3), &eta3).unwrap();
    assert!((cubic - c(-1.0)).norm() < 1e-13);
    let quad = contract(&outer_power(&alpha, 2), &eta2).unwrap();
    assert!((quad - c(su3_invariants(&p).0)).norm() < 1e-13);
}
