mod common;

use std::f64::consts::{PI, TAU};

use dcbody::complexspace::{
    affine_dim, complex_scale_vec, gjk_contains, lp_contains, project_to_complex_line, CmBody, CompiledBody, Membership,
    OracleTerm, PolytopeCm, Support, SupportOracleCm,
};
use dcbody::Complex;
use rand::Rng;

use common::{grid, rank, rd4, rng, unit4};

fn random_polytope(r: &mut impl Rng, n: usize) -> PolytopeCm {
    PolytopeCm::new(2, (0..n).map(|_| rd4(r)).collect()).unwrap()
}

fn max_dot(verts: &[Vec<f64>], u: &[f64]) -> f64 {
    verts.iter().map(|v| v.iter().zip(u).map(|(a, b)| a * b).sum::<f64>()).fold(f64::NEG_INFINITY, f64::max)
}

/// Complex multiplication done by hand on `(re, im)` pairs.
fn rotate_pairs(v: &[f64], a: Complex) -> Vec<f64> {
    v.chunks(2).flat_map(|p| [a.re * p[0] - a.im * p[1], a.re * p[1] + a.im * p[0]]).collect()
}

fn sorted(p: &PolytopeCm) -> Vec<Vec<f64>> {
    let mut v: Vec<Vec<f64>> = p.vertices().map(|v| v.to_vec()).collect();
    v.sort_by(|a, b| a.iter().zip(b).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal));
    v
}

#[test]
fn complex_scaling_is_a_group_action() {
    let mut r = rng(20);
    for _ in 0..20 {
        let k = random_polytope(&mut r, 12);
        let a = Complex::from_polar(r.random_range(0.5..2.0), r.random_range(0.0..TAU));
        let b = Complex::from_polar(r.random_range(0.5..2.0), r.random_range(0.0..TAU));
        let twice = k.complex_scale(a).complex_scale(b);
        let once = k.complex_scale(a * b);
        for (x, y) in sorted(&twice).iter().zip(sorted(&once)) {
            assert!(x.iter().zip(&y).all(|(p, q)| (p - q).abs() < 1e-12));
        }
    }
    let third = Complex::from_polar(1.0, PI / 3.0);
    let k = random_polytope(&mut r, 8);
    let (a, b) = (k.complex_scale(third).complex_scale(third), k.complex_scale(third * third));
    assert_eq!(sorted(&a).len(), sorted(&b).len());
}

#[test]
fn scaled_support_is_support_at_conjugate_direction() {
    let mut r = rng(21);
    for _ in 0..50 {
        let k = random_polytope(&mut r, 10);
        let verts: Vec<Vec<f64>> = k.vertices().map(|v| v.to_vec()).collect();
        let a = Complex::from_polar(r.random_range(0.2..3.0), r.random_range(0.0..TAU));
        let u = unit4(&mut r);
        let scaled: Vec<Vec<f64>> = verts.iter().map(|v| rotate_pairs(v, a)).collect();
        let want = max_dot(&scaled, &u);
        assert!((k.complex_scale(a).support(&u) - want).abs() < 1e-12);
        assert!((k.support(&complex_scale_vec(&u, a.conj())) - want).abs() < 1e-12);
    }
}

#[test]
fn projection_intertwines_scaling_in_one_dimension() {
    let mut r = rng(22);
    for _ in 0..20 {
        let verts: Vec<Vec<f64>> = (0..7).map(|_| vec![r.random_range(-1.0..1.0), r.random_range(-1.0..1.0)]).collect();
        let k = PolytopeCm::new(1, verts).unwrap();
        let a = Complex::from_polar(r.random_range(0.5..2.0), r.random_range(0.0..TAU));
        let xi = [1.0, 0.0];
        let lhs = project_to_complex_line(&k.complex_scale(a), &xi).unwrap();
        let rhs = project_to_complex_line(&k, &xi).unwrap().rotate_scale(a.conj());
        for t in grid(256) {
            assert!((lhs.support(t) - rhs.support(t)).abs() < 1e-12);
        }
    }
}

#[test]
fn projection_of_the_cube_and_of_orthogonal_segments() {
    let cube = PolytopeCm::cube(2).unwrap();
    let p = project_to_complex_line(&cube, &[1.0, 0.0, 0.0, 0.0]).unwrap();
    assert_eq!(p.len(), 4);
    assert!((p.area() - 1.0).abs() < 1e-12);
    let seg = PolytopeCm::segment(&[0.0; 4], &[0.0, 0.0, 1.0, 0.0]).unwrap();
    assert!(project_to_complex_line(&seg, &[1.0, 0.0, 0.0, 0.0]).unwrap().is_point());
}

#[test]
fn affine_dim_matches_elimination_rank() {
    let mut r = rng(23);
    for target in 0..=4 {
        for _ in 0..5 {
            let basis: Vec<Vec<f64>> = (0..target).map(|_| rd4(&mut r)).collect();
            let shift = rd4(&mut r);
            let verts: Vec<Vec<f64>> = (0..8)
                .map(|_| {
                    let mut v = shift.clone();
                    for b in &basis {
                        let c: f64 = r.random_range(-1.0..1.0);
                        v.iter_mut().zip(b).for_each(|(x, y)| *x += c * y);
                    }
                    v
                })
                .collect();
            let p = PolytopeCm::new(2, verts).unwrap();
            let mean = p.vertex_mean();
            let centred: Vec<Vec<f64>> = p.vertices().map(|v| v.iter().zip(&mean).map(|(a, b)| a - b).collect()).collect();
            assert_eq!(affine_dim(&p, 1e-8), rank(&centred, 1e-8));
            assert_eq!(affine_dim(&p, 1e-8), target);
        }
    }
}

#[test]
fn oracle_support_is_sublinear() {
    let mut r = rng(24);
    let terms = (0..3)
        .map(|_| OracleTerm { s: r.random_range(0.1..2.0), theta: r.random_range(0.0..TAU), base: random_polytope(&mut r, 6).into() })
        .chain([OracleTerm { s: 0.5, theta: 0.0, base: CmBody::ball(2, 0.7).unwrap() }])
        .collect();
    let o = SupportOracleCm::new(2, terms).unwrap();
    for _ in 0..200 {
        let (u1, u2) = (rd4(&mut r), rd4(&mut r));
        let sum: Vec<f64> = u1.iter().zip(&u2).map(|(a, b)| a + b).collect();
        assert!(o.support(&sum) <= o.support(&u1) + o.support(&u2) + 1e-12);
    }
}

#[test]
fn oracle_argmax_attains_support() {
    let mut r = rng(25);
    let terms = (0..4)
        .map(|_| OracleTerm { s: r.random_range(0.1..2.0), theta: r.random_range(0.0..TAU), base: random_polytope(&mut r, 6).into() })
        .collect();
    let o = SupportOracleCm::new(2, terms).unwrap();
    for _ in 0..50 {
        let u = unit4(&mut r);
        let x = o.argmax(&u);
        let hx: f64 = x.iter().zip(&u).map(|(a, b)| a * b).sum();
        assert!((hx - o.support(&u)).abs() < 1e-12);
    }
}

#[test]
fn membership_routes_agree() {
    let mut r = rng(26);
    let terms = (0..3)
        .map(|_| OracleTerm { s: r.random_range(0.3..1.0), theta: r.random_range(0.0..TAU), base: random_polytope(&mut r, 6).into() })
        .collect();
    let o = SupportOracleCm::new(2, terms).unwrap();
    let compiled = CompiledBody::from_oracle(&o);
    let mut checked = 0;
    for _ in 0..150 {
        let x: Vec<f64> = rd4(&mut r).iter().map(|v| v * 2.0).collect();
        if let Some(m) = gjk_contains(&compiled, &x, 1e-9) {
            assert_eq!(matches!(m, Membership::Inside(_)), lp_contains(&o, &x).unwrap());
            checked += 1;
        }
    }
    assert!(checked > 140);
}

#[test]
fn disc_product_is_nearly_circle_invariant() {
    let disc = dcbody::planar::Polygon2::regular(256, 2.0 * (PI / 256.0).sin(), 0.0).unwrap();
    let term = |j| OracleTerm { s: 1.0, theta: 0.0, base: PolytopeCm::polygon_in_line(&disc, 2, j).unwrap().into() };
    let bb = SupportOracleCm::new(2, vec![term(0), term(1)]).unwrap();
    let defect = dcbody::complexspace::s1_invariance_defect(&bb, 16);
    assert!(defect <= 2.0 * (1.0 - (PI / 256.0).cos()));
    let sq = PolytopeCm::from_polygon(&dcbody::planar::Polygon2::rect(-0.5, -0.5, 0.5, 0.5).unwrap());
    assert!(dcbody::complexspace::s1_invariance_defect(&sq, 8) >= 0.2);
}
