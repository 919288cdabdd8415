//! Seeded test bodies: random planar pairs and certified bodies in `ℂ²`.

use std::f64::consts::{PI, TAU};

use nalgebra::{DMatrix, Matrix4};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complexspace::{gaussian, random_unit, CmBody, PolytopeCm};
use crate::diffbody::body_from_measure;
use crate::planar::{AtomicMeasure1, PlanarBody, Point2, Polygon2, SampledSupport2};
use crate::{Complex, Result};

/// Convex hull of 3 to `max_points` uniform points in `[−1, 1]²`, rejecting
/// hulls with area below `0.05`.
pub fn random_polygon<R: Rng>(rng: &mut R, max_points: usize) -> Polygon2 {
    loop {
        let n = rng.random_range(3..=max_points.max(3));
        let pts: Vec<Point2> = (0..n)
            .map(|_| Point2::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        if let Ok(p) = Polygon2::from_points(&pts) {
            if p.area() > 0.05 {
                return p;
            }
        }
    }
}

/// A polygon with `edges` edges whose outer normals are multiples of
/// `2π/grid`, Steiner-centered, with perimeter in `[1, 3]`.
pub fn grid_aligned_polygon<R: Rng>(rng: &mut R, edges: usize, grid: usize) -> Polygon2 {
    assert!((3..=grid).contains(&edges));
    loop {
        let mut idx: Vec<usize> = Vec::with_capacity(edges);
        while idx.len() < edges {
            let j = rng.random_range(0..grid);
            if !idx.contains(&j) {
                idx.push(j);
            }
        }
        let angles: Vec<f64> = idx.iter().map(|&j| TAU * j as f64 / grid as f64).collect();
        // free weights on atoms 2.., closure fixes the first two
        let (c0, s0) = (angles[0].cos(), angles[0].sin());
        let (c1, s1) = (angles[1].cos(), angles[1].sin());
        let det = c0 * s1 - c1 * s0;
        if det.abs() < 1e-3 {
            continue;
        }
        for _ in 0..64 {
            let mut w = vec![0.0; edges];
            let (mut rx, mut ry) = (0.0, 0.0);
            for j in 2..edges {
                w[j] = rng.random_range(0.1..1.0);
                rx -= w[j] * angles[j].cos();
                ry -= w[j] * angles[j].sin();
            }
            w[0] = (rx * s1 - c1 * ry) / det;
            w[1] = (c0 * ry - s0 * rx) / det;
            let total: f64 = w.iter().sum();
            if w.iter().all(|&x| x > 0.05 * total) {
                let target = rng.random_range(1.0..3.0);
                let atoms = angles.iter().zip(&w).map(|(&t, &x)| (t, x * target / total)).collect();
                let mu = AtomicMeasure1::new(atoms).expect("positive atoms");
                if let Ok(p) = body_from_measure(&mu) {
                    return p;
                }
            }
        }
    }
}

/// `(C, K)` pairs of random polygons.
pub fn planar_corpus(seed: u64, count: usize) -> Vec<(Polygon2, Polygon2)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (random_polygon(&mut rng, 7), random_polygon(&mut rng, 9)))
        .collect()
}

/// A body in `ℂ²` with analytically known volume, minimal width, diameter
/// and circumradius.
#[derive(Debug, Clone)]
pub struct CertifiedBody {
    pub label: String,
    pub body: CmBody,
    pub volume: f64,
    pub min_width: f64,
    pub diameter: f64,
    pub circumradius: f64,
}

/// Haar-random orthogonal 4×4 matrix.
pub fn random_orthogonal<R: Rng>(rng: &mut R) -> DMatrix<f64> {
    let g = Matrix4::from_fn(|_, _| gaussian(rng));
    let qr = g.qr();
    let (q, r) = (qr.q(), qr.r());
    let mut q = DMatrix::from_column_slice(4, 4, q.as_slice());
    for j in 0..4 {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}

/// Random element of `U(2)` as rows of complex entries.
pub fn random_unitary<R: Rng>(rng: &mut R) -> Vec<Vec<Complex>> {
    let v = random_unit(rng, 4);
    let (a, b) = (Complex::new(v[0], v[1]), Complex::new(v[2], v[3]));
    let ph = Complex::from_polar(1.0, rng.random_range(0.0..TAU));
    vec![vec![a * ph, -b.conj() * ph], vec![b * ph, a.conj() * ph]]
}

impl CertifiedBody {
    /// Box with the given side lengths, centered and rotated by `q`.
    pub fn rotated_box(sides: [f64; 4], q: &DMatrix<f64>) -> Result<Self> {
        let mut verts = Vec::with_capacity(16);
        for mask in 0..16 {
            verts.push((0..4).map(|i| if mask >> i & 1 == 1 { sides[i] / 2.0 } else { -sides[i] / 2.0 }).collect());
        }
        let p = PolytopeCm::new(2, verts)?.apply_real_linear(q)?;
        let diameter = sides.iter().map(|s| s * s).sum::<f64>().sqrt();
        Ok(Self {
            label: format!("box {sides:.3?}"),
            body: p.into(),
            volume: sides.iter().product(),
            min_width: sides.iter().copied().fold(f64::INFINITY, f64::min),
            diameter,
            circumradius: diameter / 2.0,
        })
    }

    /// Cross-polytope with the given semi-axes, rotated by `q`.
    pub fn rotated_cross(semi: [f64; 4], q: &DMatrix<f64>) -> Result<Self> {
        let p = PolytopeCm::cross_polytope(2, &semi)?.apply_real_linear(q)?;
        let amax = semi.iter().copied().fold(0.0, f64::max);
        Ok(Self {
            label: format!("cross-polytope {semi:.3?}"),
            body: p.into(),
            volume: 16.0 / 24.0 * semi.iter().product::<f64>(),
            min_width: 2.0 / semi.iter().map(|a| 1.0 / (a * a)).sum::<f64>().sqrt(),
            diameter: 2.0 * amax,
            circumradius: amax,
        })
    }

    pub fn ball(radius: f64) -> Result<Self> {
        Ok(Self {
            label: format!("ball r={radius:.3}"),
            body: CmBody::ball(2, radius)?,
            volume: PI * PI / 2.0 * radius.powi(4),
            min_width: 2.0 * radius,
            diameter: 2.0 * radius,
            circumradius: radius,
        })
    }

    /// `P × Q` for regular polygons centered at the origin, `P` in the first
    /// complex coordinate.
    pub fn regular_product(n: usize, p_side: f64, m: usize, q_side: f64, phase: f64) -> Result<Self> {
        let p = Polygon2::regular(n, p_side, phase)?;
        let q = Polygon2::regular(m, q_side, 0.0)?;
        let (rp, rq) = (circumradius_regular(n, p_side), circumradius_regular(m, q_side));
        let (dp, dq) = (p.diameter(), q.diameter());
        Ok(Self {
            label: format!("regular {n}-gon x {m}-gon"),
            body: PolytopeCm::product(&p, &q)?.into(),
            volume: p.area() * q.area(),
            min_width: p.min_width().min(q.min_width()),
            diameter: (dp * dp + dq * dq).sqrt(),
            circumradius: (rp * rp + rq * rq).sqrt(),
        })
    }
}

fn circumradius_regular(n: usize, side: f64) -> f64 {
    side / (2.0 * (PI / n as f64).sin())
}

/// `(C, K)` pairs in `ℂ²`: `C` has 3 or 4 edges with normals on the 64-point
/// grid (3 for the polygon products), `K` cycles through rotated boxes,
/// rotated cross-polytopes, the ball and products of regular polygons.
pub fn complex_corpus(seed: u64, count: usize) -> Result<Vec<(Polygon2, CertifiedBody)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let k = match i % 4 {
            0 => {
                let sides = [0.0; 4].map(|_: f64| rng.random_range(0.4..1.6));
                let q = random_orthogonal(&mut rng);
                CertifiedBody::rotated_box(sides, &q)?
            }
            1 => {
                let semi = [0.0; 4].map(|_: f64| rng.random_range(0.4..1.4));
                let q = random_orthogonal(&mut rng);
                CertifiedBody::rotated_cross(semi, &q)?
            }
            2 => CertifiedBody::ball(rng.random_range(0.5..1.5))?,
            _ => {
                let n = rng.random_range(3..=6);
                let m = rng.random_range(3..=6);
                let phase = rng.random_range(0.0..TAU);
                CertifiedBody::regular_product(n, rng.random_range(0.5..1.2), m, rng.random_range(0.5..1.2), phase)?
            }
        };
        let edges = if i % 4 == 3 { 3 } else { rng.random_range(3..=4) };
        out.push((grid_aligned_polygon(&mut rng, edges, 64), k));
    }
    Ok(out)
}

/// The scalene triangle used as a generic, asymmetric `K`.
pub fn scalene() -> Polygon2 {
    Polygon2::from_points(&[Point2::new(0.0, 0.0), Point2::new(1.3, 0.0), Point2::new(0.3, 0.8)])
        .expect("non-degenerate triangle")
}

/// Pairs for the planar classification: random and special polygons `C`
/// against random and special polygons `K`, plus sampled `K` (Reuleaux
/// triangle, off-center disc) against the grid-aligned `C`.
pub fn planar_classification_corpus(seed: u64) -> Result<Vec<(Polygon2, PlanarBody)>> {
    let corpus = planar_corpus(seed ^ 0xc1, 12);
    let aligned = vec![
        Polygon2::interval(),
        Polygon2::unit_square(),
        Polygon2::regular(4, 0.25, 0.0)?,
        Polygon2::regular(8, 0.3, 0.0)?,
        Polygon2::regular(64, 0.05, 0.0)?,
    ];
    let mut cs: Vec<Polygon2> = corpus.iter().map(|(c, _)| c.clone()).collect();
    cs.extend(aligned.iter().cloned());
    cs.push(Polygon2::regular(3, 1.0, 0.2)?);
    cs.push(Polygon2::regular(6, 0.5, 0.0)?);
    let mut ks: Vec<PlanarBody> = corpus.iter().map(|(_, k)| k.clone().into()).collect();
    ks.push(Polygon2::unit_square().into());
    ks.push(scalene().into());
    ks.push(Polygon2::regular(5, 0.6, 0.1)?.into());
    let mut pairs = Vec::new();
    for c in &cs {
        for k in &ks {
            pairs.push((c.clone(), k.clone()));
        }
    }
    let sampled: Vec<PlanarBody> = vec![
        SampledSupport2::reuleaux_triangle(1024)?.into(),
        SampledSupport2::disc(1024, 0.5, Point2::new(0.2, 0.1))?.into(),
    ];
    for c in &aligned {
        for k in &sampled {
            pairs.push((c.clone(), k.clone()));
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexspace::Support;
    use crate::planar::area_measure;

    #[test]
    fn grid_aligned_normals() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for edges in [3, 4, 5] {
            let p = grid_aligned_polygon(&mut rng, edges, 64);
            assert_eq!(p.len(), edges);
            for &(t, _) in area_measure(&p).atoms() {
                let x = t * 64.0 / TAU;
                assert!((x - x.round()).abs() < 1e-9);
            }
            assert!(p.steiner_point().norm() < 1e-12);
        }
    }

    #[test]
    fn certificates_match_direct_evaluation() {
        let corpus = complex_corpus(11, 8).unwrap();
        for (_, k) in &corpus {
            if let CmBody::Polytope(p) = &k.body {
                let d = crate::complexspace::diameter_of_points(p.vertices_flat(), 4);
                assert!((d - k.diameter).abs() < 1e-9, "{}", k.label);
                let r = crate::complexspace::circumradius_of_points(p.vertices_flat(), 4);
                assert!((r - k.circumradius).abs() < 1e-9, "{}", k.label);
            }
            // no direction is thinner than the certified width
            for u in crate::complexspace::direction_net(4, 200, 1) {
                let neg: Vec<f64> = u.iter().map(|x| -x).collect();
                assert!(k.body.support(&u) + k.body.support(&neg) >= k.min_width - 1e-12);
            }
        }
    }
}
