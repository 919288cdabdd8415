mod common;

use std::f64::consts::{PI, TAU};

use dcbody::complexspace::{
    apply_complex, apply_complex_adjoint, direction_net, CmBody, OracleTerm, PolytopeCm, Support, SupportOracleCm,
};
use dcbody::diffbody::{
    body_from_measure, commute_m1, convolve_measures, dc_planar, dc_planar_sampled, dc_polytope, dc_segment,
    steiner_centered,
};
use dcbody::planar::{angle_of, area_measure, AtomicMeasure1, Point2, Polygon2, SampledSupport2};
use dcbody::Complex;
use rand::Rng;

use common::{grid, rd4, random_polygon, rng, support_gap, support_max};

fn random_cm(r: &mut impl Rng) -> PolytopeCm {
    PolytopeCm::new(2, (0..9).map(|_| rd4(r)).collect()).unwrap()
}

/// `∑_i s_i h_K(θ − θ_i)` straight from the atoms of `S(C, ·)`.
fn support_by_atoms(c: &Polygon2, k: &Polygon2, theta: f64) -> f64 {
    area_measure(c).atoms().iter().map(|&(t, s)| s * support_max(k.vertices(), theta - t)).sum()
}

#[test]
fn planar_operator_matches_atom_sum() {
    let mut r = rng(30);
    for _ in 0..50 {
        let (c, k) = (random_polygon(&mut r, 6), random_polygon(&mut r, 8));
        let d = dc_planar(&c, &k);
        for t in grid(128) {
            assert!((d.support(t) - support_by_atoms(&c, &k, t)).abs() < 1e-12);
        }
        assert!(d.len() <= c.len() * k.len());
        assert!(d.steiner_point().norm() < 1e-12);
    }
}

#[test]
fn interval_gives_k_minus_k() {
    let mut r = rng(31);
    for _ in 0..50 {
        let k = random_polygon(&mut r, 9);
        let d = dc_planar(&Polygon2::interval(), &k);
        let want = k.minkowski_sum(&k.reflect());
        assert!(d.vertex_distance(&want).unwrap() < 1e-12);
    }
    let t = Polygon2::from_points(&[Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)]).unwrap();
    let d = dc_planar(&Polygon2::interval(), &t);
    assert_eq!(d.len(), 6);
    assert!((d.area() - 3.0).abs() < 1e-12);
}

#[test]
fn operator_commutes_up_to_translation() {
    let mut r = rng(32);
    for _ in 0..50 {
        let (c, k) = (random_polygon(&mut r, 6), random_polygon(&mut r, 8));
        let (a, b) = commute_m1(&c, &k);
        assert!(steiner_centered(&a).hausdorff(&steiner_centered(&b)) < 1e-8);
    }
}

#[test]
fn measure_convolution_reconstructs_the_operator() {
    let mut r = rng(33);
    for _ in 0..50 {
        let (c, k) = (random_polygon(&mut r, 6), random_polygon(&mut r, 8));
        let conv = convolve_measures(&area_measure(&c), &area_measure(&k));
        assert!((conv.total_mass() - c.perimeter() * k.perimeter()).abs() < 1e-9);
        let rebuilt = body_from_measure(&conv).unwrap();
        let direct = steiner_centered(&dc_planar(&c, &k));
        assert!(rebuilt.vertex_distance(&direct).unwrap() < 1e-8);
        let (da, dw) = area_measure(&dc_planar(&c, &k)).atom_distance(&conv).unwrap();
        assert!(da < 1e-9 && dw < 1e-9);
    }
}

#[test]
fn random_closed_measures_round_trip() {
    let mut r = rng(34);
    for _ in 0..50 {
        let mut atoms: Vec<(f64, f64)> = (0..6).map(|_| (r.random_range(0.0..TAU), r.random_range(0.1..1.0))).collect();
        let (sx, sy) = atoms.iter().fold((0.0, 0.0), |(x, y), &(t, w)| (x + w * t.cos(), y + w * t.sin()));
        atoms.push((angle_of(Point2::new(-sx, -sy)), (sx * sx + sy * sy).sqrt()));
        let mu = AtomicMeasure1::new(atoms).unwrap();
        let p = body_from_measure(&mu).unwrap();
        let (da, dw) = area_measure(&p).atom_distance(&mu).unwrap();
        assert!(da < 1e-9 && dw < 1e-9);
        assert!(p.steiner_point().norm() < 1e-12);
    }
}

#[test]
fn complex_homogeneity_in_c2() {
    let mut r = rng(35);
    let net = direction_net(4, 64, 3);
    for _ in 0..10 {
        let c = random_polygon(&mut r, 5);
        let k = random_cm(&mut r);
        let rho = Complex::from_polar(r.random_range(0.5..2.0), r.random_range(0.0..TAU));
        let a = dc_polytope(&c.rotate_scale(rho), &k.clone().into());
        let b = dc_polytope(&c, &k.complex_scale(rho).into());
        let base = dc_polytope(&c, &k.into());
        for u in &net {
            let h = base.support(&dcbody::complexspace::complex_scale_vec(u, rho.conj()));
            assert!((a.support(u) - h).abs() < 1e-10);
            assert!((b.support(u) - h).abs() < 1e-10);
        }
    }
}

#[test]
fn regular_c_gives_rotation_symmetric_bodies() {
    let mut r = rng(36);
    let net = direction_net(4, 64, 4);
    for n in [3, 4, 5, 7] {
        let c = Polygon2::regular(n, 0.4, r.random_range(0.0..TAU)).unwrap();
        let d = dc_polytope(&c, &random_cm(&mut r).into());
        let rot = Complex::from_polar(1.0, -TAU / n as f64);
        for u in &net {
            let v = dcbody::complexspace::complex_scale_vec(u, rot);
            assert!((d.support(u) - d.support(&v)).abs() < 1e-10);
        }
    }
}

#[test]
fn complex_linear_maps_commute_with_the_operator() {
    let mut r = rng(37);
    let net = direction_net(4, 64, 5);
    for _ in 0..10 {
        let t: Vec<Vec<Complex>> = (0..2)
            .map(|_| (0..2).map(|_| Complex::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0))).collect())
            .collect();
        let c = random_polygon(&mut r, 5);
        let k = random_cm(&mut r);
        let tk = PolytopeCm::new(2, k.vertices().map(|v| apply_complex(&t, v)).collect()).unwrap();
        let lhs = dc_polytope(&c, &tk.into());
        let rhs = dc_polytope(&c, &k.into());
        for u in &net {
            assert!((lhs.support(u) - rhs.support(&apply_complex_adjoint(&t, u))).abs() < 1e-10);
        }
    }
}

/// A large square standing in for the half-plane `⟨x, n⟩ ≤ a`.
fn half_plane(normal: f64, a: f64) -> Polygon2 {
    let big = 50.0;
    let sq = Polygon2::rect(-2.0 * big, -big, 0.0, big).unwrap();
    sq.translate(Point2::new(a, 0.0)).rotate_scale(Complex::from_polar(1.0, normal))
}

#[test]
fn valuation_property() {
    let mut r = rng(38);
    for _ in 0..20 {
        let u = random_polygon(&mut r, 10);
        let c = random_polygon(&mut r, 5);
        let phi = r.random_range(0.0..TAU);
        let (lo, hi) = (-0.1, 0.1);
        let k = u.intersect(&half_plane(phi, hi)).unwrap();
        let l = u.intersect(&half_plane(phi + PI, -lo)).unwrap();
        let both = k.intersect(&l).unwrap();
        let lhs = dc_planar(&c, &u).minkowski_sum(&dc_planar(&c, &both));
        let rhs = dc_planar(&c, &k).minkowski_sum(&dc_planar(&c, &l));
        assert!(support_gap(&lhs, &rhs, 256) < 1e-9);
    }
}

#[test]
fn minkowski_additive_and_monotone() {
    let mut r = rng(39);
    for _ in 0..30 {
        let (c, k, l) = (random_polygon(&mut r, 5), random_polygon(&mut r, 6), random_polygon(&mut r, 6));
        let sum = dc_planar(&c, &k.minkowski_sum(&l));
        let split = dc_planar(&c, &k).minkowski_sum(&dc_planar(&c, &l));
        assert!(sum.hausdorff(&split) < 1e-9);

        let mut pts = k.vertices().to_vec();
        pts.extend(common::random_points(&mut r, 3));
        let bigger = Polygon2::from_points(&pts).unwrap();
        let mut cpts = c.vertices().to_vec();
        cpts.extend(common::random_points(&mut r, 3));
        let c_bigger = Polygon2::from_points(&cpts).unwrap();
        let (d, dk, dc) = (dc_planar(&c, &k), dc_planar(&c, &bigger), dc_planar(&c_bigger, &k));
        for t in grid(256) {
            assert!(d.support(t) <= dk.support(t) + 1e-12);
            assert!(d.support(t) <= dc.support(t) + 1e-12);
        }
    }
}

#[test]
fn segment_closed_form_matches_general_route() {
    let mut r = rng(40);
    let net = direction_net(4, 100, 6);
    for _ in 0..10 {
        let c = random_polygon(&mut r, 6);
        let u: Vec<f64> = common::unit4(&mut r);
        let (a, b) = (r.random_range(-1.0..0.0), r.random_range(0.1..1.0));
        let seg = PolytopeCm::segment(&u.iter().map(|x| a * x).collect::<Vec<_>>(), &u.iter().map(|x| b * x).collect::<Vec<_>>()).unwrap();
        let general = dc_polytope(&c, &seg.into());
        let closed = dc_segment(&c, a, b, &u).unwrap();
        for v in &net {
            assert!((general.support(v) - closed.support(v)).abs() < 1e-9);
        }
        let ju = dcbody::complexspace::complex_scale_vec(&u, Complex::new(0.0, 1.0));
        assert!((general.support(&ju) - (b - a) * c.width(0.0)).abs() < 1e-9);
    }
}

#[test]
fn ball_is_scaled_by_length() {
    let mut r = rng(41);
    let c = random_polygon(&mut r, 7);
    let d = dc_polytope(&c, &CmBody::ball(2, 1.0).unwrap());
    for u in direction_net(4, 100, 7) {
        assert!((d.support(&u) - c.perimeter()).abs() < 1e-9);
    }
}

#[test]
fn oracle_inputs_expand_linearly() {
    let mut r = rng(42);
    let c = random_polygon(&mut r, 5);
    let terms = vec![
        OracleTerm { s: 0.7, theta: 1.1, base: random_cm(&mut r).into() },
        OracleTerm { s: 1.3, theta: -0.4, base: CmBody::ball(2, 0.3).unwrap() },
    ];
    let k = SupportOracleCm::new(2, terms).unwrap();
    let d = dcbody::diffbody::dc_oracle(&c, &k);
    let mu = area_measure(&c);
    for u in direction_net(4, 64, 8) {
        let want: f64 = mu
            .atoms()
            .iter()
            .map(|&(t, s)| s * k.support(&dcbody::complexspace::complex_scale_vec(&u, Complex::from_polar(1.0, -t))))
            .sum();
        assert!((d.support(&u) - want).abs() < 1e-10);
    }
}

#[test]
fn sampled_operator_examples() {
    let disc = SampledSupport2::disc(256, 0.6, Point2::zeros()).unwrap();
    let c = Polygon2::regular(8, 0.3, 0.0).unwrap();
    let d = dc_planar_sampled(&c.clone().into(), &disc).unwrap();
    assert!(d.values().iter().all(|h| (h - 0.6 * c.perimeter()).abs() < 1e-12));

    let reuleaux = SampledSupport2::reuleaux_triangle(1024).unwrap();
    let sq = Polygon2::rect(-0.5, -0.5, 0.5, 0.5).unwrap();
    let d = dc_planar_sampled(&sq.into(), &reuleaux).unwrap();
    assert!(d.values().iter().all(|h| (h - 2.0).abs() < 1e-4));
    let off_grid = Polygon2::regular(4, 1.0, 0.1).unwrap();
    assert!(dc_planar_sampled(&off_grid.into(), &reuleaux).is_err());
}
