mod common;

use std::f64::consts::TAU;

use dcbody::planar::{
    area_measure, fourier_support, mixed_area_integral, Convention, PlanarBody, Point2, Polygon2, SampledSupport2,
};
use rand::Rng;

use common::{grid, random_points, random_polygon, rng, support_max};

fn cross(o: Point2, a: Point2, b: Point2) -> f64 {
    (a - o).perp(&(b - o))
}

/// Hull vertices by brute force: a point is extreme iff it lies in no
/// triangle of the other points.
fn brute_force_extreme(points: &[Point2]) -> Vec<Point2> {
    let inside = |p: Point2, a: Point2, b: Point2, c: Point2| {
        let s = [cross(a, b, p), cross(b, c, p), cross(c, a, p)];
        s.iter().all(|&x| x >= 0.0) || s.iter().all(|&x| x <= 0.0)
    };
    let n = points.len();
    (0..n)
        .filter(|&i| {
            !(0..n).any(|a| {
                a != i
                    && (a + 1..n).any(|b| {
                        b != i && (b + 1..n).any(|c| c != i && inside(points[i], points[a], points[b], points[c]))
                    })
            })
        })
        .map(|i| points[i])
        .collect()
}

#[test]
fn hull_matches_brute_force() {
    let mut r = rng(1);
    for _ in 0..10 {
        let pts = random_points(&mut r, 25);
        let hull = Polygon2::from_points(&pts).unwrap();
        let mut expected = brute_force_extreme(&pts);
        let mut got = hull.vertices().to_vec();
        let key = |a: &Point2, b: &Point2| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y));
        expected.sort_by(key);
        got.sort_by(key);
        assert_eq!(got, expected);
    }
}

#[test]
fn points_on_a_circle_are_all_vertices() {
    let mut r = rng(2);
    let pts: Vec<Point2> = (0..100)
        .map(|_| {
            let t: f64 = r.random_range(0.0..TAU);
            Point2::new(t.cos(), t.sin())
        })
        .collect();
    assert_eq!(Polygon2::from_points(&pts).unwrap().len(), 100);
}

/// Clipping oracle: hull of the vertices of each polygon inside the other and
/// all pairwise edge crossings.
fn brute_force_intersection(p: &Polygon2, q: &Polygon2) -> Option<Polygon2> {
    let mut pts: Vec<Point2> = p.vertices().iter().filter(|v| q.contains(**v, 1e-12)).copied().collect();
    pts.extend(q.vertices().iter().filter(|v| p.contains(**v, 1e-12)));
    let edges = |poly: &Polygon2| {
        let v = poly.vertices();
        (0..v.len()).map(|i| (v[i], v[(i + 1) % v.len()])).collect::<Vec<_>>()
    };
    for (a, b) in edges(p) {
        for (c, d) in edges(q) {
            let den = (b - a).perp(&(d - c));
            if den.abs() < 1e-14 {
                continue;
            }
            let t = (c - a).perp(&(d - c)) / den;
            let s = (c - a).perp(&(b - a)) / den;
            if (0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&s) {
                pts.push(a + (b - a) * t);
            }
        }
    }
    (!pts.is_empty()).then(|| Polygon2::from_points(&pts).unwrap())
}

#[test]
fn intersection_matches_clipping_oracle() {
    let mut r = rng(3);
    let mut compared = 0;
    for _ in 0..60 {
        let p = random_polygon(&mut r, 8);
        let q = random_polygon(&mut r, 8).translate(Point2::new(r.random_range(-0.8..0.8), 0.3));
        match (p.intersect(&q), brute_force_intersection(&p, &q)) {
            (Ok(got), Some(want)) if want.area() > 1e-6 => {
                assert!(got.hausdorff(&want) < 1e-9);
                compared += 1;
            }
            (Err(_), None) => {}
            _ => {}
        }
    }
    assert!(compared > 20);
}

#[test]
fn minkowski_sum_is_hull_of_pairwise_sums() {
    let mut r = rng(4);
    for _ in 0..50 {
        let p = random_polygon(&mut r, 7);
        let q = random_polygon(&mut r, 7);
        let sums: Vec<Point2> = p.vertices().iter().flat_map(|a| q.vertices().iter().map(move |b| a + b)).collect();
        let oracle = Polygon2::from_points(&sums).unwrap();
        let got = p.minkowski_sum(&q);
        assert!(got.vertex_distance(&oracle).unwrap() < 1e-12);
        assert!((got.perimeter() - p.perimeter() - q.perimeter()).abs() < 1e-12);
    }
}

#[test]
fn mixed_area_matches_area_identity() {
    let mut r = rng(5);
    for _ in 0..50 {
        let k = random_polygon(&mut r, 9);
        let c = random_polygon(&mut r, 6);
        let direct: f64 = area_measure(&c).atoms().iter().map(|&(t, s)| s * support_max(k.vertices(), t)).sum();
        let identity = k.minkowski_sum(&c).area() - k.area() - c.area();
        let got = mixed_area_integral(&k.clone().into(), &c.clone().into()).unwrap();
        assert!((got - identity).abs() < 1e-9);
        assert!((got - direct).abs() < 1e-12);
    }
}

#[test]
fn sampled_disc_mixed_area() {
    let d = SampledSupport2::disc(1024, 1.0, Point2::zeros()).unwrap();
    let got = mixed_area_integral(&d.clone().into(), &d.into()).unwrap();
    assert!((got - TAU).abs() < 1e-6);
}

#[test]
fn closure_and_mass() {
    let mut r = rng(6);
    for _ in 0..100 {
        let p = random_polygon(&mut r, 12);
        let mu = area_measure(&p);
        assert!(mu.closure_defect() < 1e-9);
        assert!((mu.total_mass() - p.perimeter()).abs() < 1e-12);
    }
}

#[test]
fn support_is_sublinear_on_the_grid() {
    let mut r = rng(7);
    let bodies = [
        SampledSupport2::reuleaux_triangle(256).unwrap(),
        SampledSupport2::from_polygon(&random_polygon(&mut r, 8), 256).unwrap(),
    ];
    for s in &bodies {
        let n = s.n();
        for i in 0..n {
            for j in 0..n {
                if (i + j) % 2 == 1 {
                    continue;
                }
                let (a, b) = (s.angle(i), s.angle(j));
                let mid = s.values()[((i + j) / 2) % n];
                let lhs = s.values()[i] + s.values()[j];
                assert!(lhs >= 2.0 * ((a - b) / 2.0).cos() * mid - 1e-9, "{i} {j}");
            }
        }
    }
}

#[test]
fn sampled_polygon_support_matches_vertices_on_the_grid() {
    let mut r = rng(8);
    let p = random_polygon(&mut r, 10);
    let s = SampledSupport2::from_polygon(&p, 512).unwrap();
    for (k, t) in grid(512).enumerate() {
        assert!((s.values()[k] - support_max(p.vertices(), t)).abs() < 1e-12);
    }
    assert!(s.convexity_defect() < 1e-9);
}

#[test]
fn spectra_of_real_functions_are_conjugate_symmetric() {
    let mut r = rng(9);
    for _ in 0..20 {
        let p: PlanarBody = random_polygon(&mut r, 8).into();
        let sp = fourier_support(&p, 32, Convention::Raw).unwrap();
        assert!(sp.conjugate_symmetry_defect() < 1e-12);
    }
}

/// Truncating at `J = n/4` reproduces `h_P + ε` only to the rate allowed by
/// the `j^{−2}` decay of a polygon spectrum; the error shrinks as `J` grows.
#[test]
fn fourier_truncation_error_decays() {
    let mut r = rng(10);
    let p = random_polygon(&mut r, 6).minkowski_sum(&Polygon2::regular(64, 0.01, 0.0).unwrap());
    let body: PlanarBody = p.clone().into();
    let err = |j: usize| {
        let sp = fourier_support(&body, j, Convention::Raw).unwrap();
        grid(1024).map(|t| (sp.reconstruct(t) - p.support(t)).abs()).fold(0.0, f64::max)
    };
    let (coarse, fine) = (err(64), err(256));
    assert!(fine < coarse / 2.0, "{coarse} {fine}");
    assert!(fine < 5e-3);
}

#[test]
fn rigid_motions_transform_support_functions() {
    let mut r = rng(11);
    for _ in 0..50 {
        let p = random_polygon(&mut r, 8);
        let phi = r.random_range(0.0..TAU);
        let t = Point2::new(0.3, -0.7);
        let q = p.rotate_scale(dcbody::Complex::from_polar(1.0, phi)).translate(t);
        assert!(q.is_lex_start());
        for theta in grid(64) {
            let want = support_max(p.vertices(), theta - phi) + t.x * theta.cos() + t.y * theta.sin();
            assert!((q.support(theta) - want).abs() < 1e-12);
        }
    }
}

#[test]
fn reuleaux_is_not_a_disc() {
    let r = SampledSupport2::reuleaux_triangle(1024).unwrap();
    let sp = fourier_support(&r.into(), 16, Convention::Raw).unwrap();
    let top = (1..=16).map(|j| sp.get(j).norm()).fold(0.0, f64::max);
    assert!(top > 0.01);
}
