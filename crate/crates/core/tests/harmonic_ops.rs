mod common;

use std::f64::consts::PI;

use dcbody::complexspace::{CmBody, PolytopeCm, Support};
use dcbody::diffbody::dc_polytope;
use dcbody::harmonic::{
    build_ortho_q, disk_poly_eval, eigenfunction_check, harmonicity_check, hermitian, kernel_component,
    kernel_component_sampled, multiplier_table, planar_multiplier_check, s3_quadrature, S3Quadrature,
};
use dcbody::planar::{fourier_support, Convention, Polygon2};
use dcbody::Complex;
use rand::Rng;

use common::{rd4, random_polygon, rng, unit4};

/// Composite Simpson on `[0, 1]` with `n` (even) panels.
fn simpson(f: impl Fn(f64) -> f64, n: usize) -> f64 {
    let h = 1.0 / n as f64;
    let inner: f64 = (1..n).map(|i| f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 }).sum();
    (f(0.0) + f(1.0) + inner) * h / 3.0
}

#[test]
fn radial_polynomials_are_orthogonal_under_simpson() {
    for a in 0..=4u32 {
        for b in 0..=4u32 {
            let qs: Vec<_> = (0..=6).map(|d| build_ortho_q(a, b, d).unwrap()).collect();
            for i in 0..qs.len() {
                assert!((qs[i].eval(1.0) - 1.0).abs() < 1e-12);
                for j in 0..i {
                    let ip = simpson(|t| qs[i].eval(t) * qs[j].eval(t) * t.powi(a as i32) * (1.0 - t).powi(b as i32), 4000);
                    assert!(ip.abs() < 1e-10, "a={a} b={b} {i} {j}: {ip}");
                }
            }
        }
    }
    assert!(build_ortho_q(0, 0, 9).is_err());
}

#[test]
fn disk_polynomials_by_hand() {
    let mut r = rng(50);
    for _ in 0..50 {
        let z = Complex::from_polar(r.random_range(0.0..1.0), r.random_range(0.0..6.3));
        let t = z.norm_sqr();
        let close = |a: Complex, b: Complex| (a - b).norm() < 1e-12;
        assert!(close(disk_poly_eval(3, 0, z).unwrap(), z.powu(3)));
        assert!(close(disk_poly_eval(0, 2, z).unwrap(), z.conj().powu(2)));
        assert!(close(disk_poly_eval(1, 1, z).unwrap(), Complex::from(2.0 * t - 1.0)));
        assert!(close(disk_poly_eval(2, 1, z).unwrap(), z * (3.0 * t - 2.0)));
        assert!(close(disk_poly_eval(2, 2, z).unwrap(), Complex::from(6.0 * t * t - 6.0 * t + 1.0)));
        for (k, l) in [(3, 1), (1, 4), (2, 5)] {
            assert!(close(disk_poly_eval(k, l, z.conj()).unwrap(), disk_poly_eval(k, l, z).unwrap().conj()));
            assert!(close(disk_poly_eval(k, l, Complex::from(1.0)).unwrap(), Complex::from(1.0)));
        }
    }
}

#[test]
fn harmonic_extensions() {
    for (k, l) in [(1, 0), (1, 1), (2, 1), (4, 4)] {
        assert!(harmonicity_check(k, l, 1e-4, 9).unwrap() <= 1e-3, "({k},{l})");
    }
}

#[test]
fn quadrature_examples() {
    let q = S3Quadrature::standard();
    let mass = q.integrate(|_| Complex::from(1.0)).re;
    assert!((mass - 2.0 * PI * PI).abs() < 1e-10);
    let e = [1.0, 0.0, 0.0, 0.0];
    let m2 = q.integrate(|v| Complex::from(hermitian(v, &e).norm_sqr())).re / mass;
    assert!((m2 - 0.5).abs() < 1e-12);
    let small = s3_quadrature(16, 16, 16).unwrap();
    for (a, b) in [((1, 0), (0, 1)), ((2, 1), (1, 2)), ((3, 0), (1, 1)), ((2, 2), (1, 1))] {
        let ip = small.integrate(|v| {
            let z = hermitian(v, &e);
            disk_poly_eval(a.0, a.1, z).unwrap() * disk_poly_eval(b.0, b.1, z).unwrap().conj()
        });
        assert!(ip.norm() < 1e-10, "{a:?} {b:?}");
    }
}

#[test]
fn kernels_vanish_on_constants_and_balls() {
    let q = S3Quadrature::standard();
    let mut r = rng(51);
    let ball = CmBody::ball(2, 1.7).unwrap();
    for _ in 0..5 {
        let u = unit4(&mut r);
        assert!(kernel_component(|_| 1.0, 1, 0, &u, &q).unwrap().norm() < 1e-10);
        for (k, l) in [(1, 0), (1, 1), (2, 3), (3, 3)] {
            assert!(kernel_component(|v| ball.support(v), k, l, &u, &q).unwrap().norm() < 1e-10);
        }
    }
}

#[test]
fn table_matches_support_spectrum_of_c() {
    let mut r = rng(52);
    for _ in 0..20 {
        let c = random_polygon(&mut r, 7);
        let t = multiplier_table(&c, 8);
        let hc = fourier_support(&c.clone().into(), 16, Convention::Multiplier).unwrap();
        for k in 0..=8usize {
            for l in 0..=8usize {
                let j = k as i64 - l as i64;
                let want = hc.get(j) * (1.0 - (j * j) as f64);
                assert!((t.get(k, l).unwrap() - want).norm() < 1e-9);
            }
            assert!((t.get(k, k).unwrap() - c.perimeter()).norm() < 1e-12);
        }
    }
}

#[test]
fn eigenfunction_examples() {
    let mut r = rng(53);
    let iv = Polygon2::interval();
    for (k, l) in [(1, 0), (2, 1), (4, 1), (0, 3)] {
        assert!(eigenfunction_check(&iv, k, l, 50, 1).unwrap() < 1e-12);
    }
    for _ in 0..5 {
        let c = random_polygon(&mut r, 6);
        for k in 0..=3 {
            assert!(eigenfunction_check(&c, k, k, 20, 2).unwrap() < 1e-12);
        }
        assert!(eigenfunction_check(&c, 3, 1, 50, 3).unwrap() < 1e-10);
    }
}

#[test]
fn planar_identity_on_random_pairs() {
    let mut r = rng(54);
    for _ in 0..30 {
        let (c, k) = (random_polygon(&mut r, 6), random_polygon(&mut r, 8));
        assert!(planar_multiplier_check(&c, &k.into(), 32).unwrap() <= 1e-8);
    }
}

/// The quadrature of `h_{D_C K}` against the multiplier applied to the
/// quadrature of `h_K`.
#[test]
fn kernel_ratio_on_a_random_polytope() {
    let mut r = rng(55);
    let q = S3Quadrature::standard();
    let k = PolytopeCm::new(2, (0..12).map(|_| rd4(&mut r)).collect()).unwrap();
    let c = Polygon2::rect(-0.5, -0.5, 0.5, 0.5).unwrap();
    let d = dc_polytope(&c, &k.clone().into());
    let (hk, hd) = (q.sample(|v| k.support(v)), q.sample(|v| d.support(v)));
    let table = multiplier_table(&c, 4);
    for _ in 0..10 {
        let u = unit4(&mut r);
        for deg in 0..=4 {
            for kk in 0..=deg {
                let ll = deg - kk;
                let gk = kernel_component_sampled(&hk, kk, ll, &u, &q).unwrap();
                let gd = kernel_component_sampled(&hd, kk, ll, &u, &q).unwrap();
                let want = table.get(kk, ll).unwrap() * gk;
                assert!((gd - want).norm() <= 1e-6 * gd.norm().max(1.0), "({kk},{ll})");
            }
        }
        assert!(kernel_component_sampled(&hd, 1, 0, &u, &q).unwrap().norm() <= 1e-8);
        assert!(kernel_component_sampled(&hd, 0, 1, &u, &q).unwrap().norm() <= 1e-8);
    }
}
