#![allow(dead_code)]

use std::f64::consts::TAU;

use dcbody::planar::{Point2, Polygon2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_points(rng: &mut impl Rng, n: usize) -> Vec<Point2> {
    (0..n).map(|_| Point2::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect()
}

/// Hull of `n` uniform points, retried until it has positive area.
pub fn random_polygon(rng: &mut impl Rng, n: usize) -> Polygon2 {
    loop {
        let p = Polygon2::from_points(&random_points(rng, n)).unwrap();
        if p.area() > 0.05 {
            return p;
        }
    }
}

/// `max_v ⟨v, u⟩` straight from the vertex list.
pub fn support_max(vertices: &[Point2], theta: f64) -> f64 {
    let (c, s) = (theta.cos(), theta.sin());
    vertices.iter().map(|v| v.x * c + v.y * s).fold(f64::NEG_INFINITY, f64::max)
}

pub fn grid(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| TAU * k as f64 / n as f64)
}

/// `sup_θ |h_P − h_Q|` over a fine grid of directions.
pub fn support_gap(p: &Polygon2, q: &Polygon2, n: usize) -> f64 {
    grid(n).map(|t| (p.support(t) - q.support(t)).abs()).fold(0.0, f64::max)
}

pub fn rd4(rng: &mut impl Rng) -> Vec<f64> {
    (0..4).map(|_| rng.random_range(-1.0..1.0)).collect()
}

pub fn unit4(rng: &mut impl Rng) -> Vec<f64> {
    loop {
        let v = rd4(rng);
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 0.1 && n <= 1.0 {
            return v.iter().map(|x| x / n).collect();
        }
    }
}

/// Rank by Gaussian elimination with full pivoting, relative tolerance.
pub fn rank(rows: &[Vec<f64>], tol: f64) -> usize {
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    if a.is_empty() {
        return 0;
    }
    let cols = a[0].len();
    let scale = a.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs()));
    if scale == 0.0 {
        return 0;
    }
    let mut r = 0;
    while r < a.len().min(cols) {
        let (mut pi, mut pj, mut best) = (r, 0, 0.0);
        for (i, row) in a.iter().enumerate().skip(r) {
            for (j, x) in row.iter().enumerate() {
                if x.abs() > best {
                    (pi, pj, best) = (i, j, x.abs());
                }
            }
        }
        if best <= tol * scale {
            break;
        }
        a.swap(r, pi);
        for row in a.iter_mut() {
            row.swap(r, pj);
        }
        for i in r + 1..a.len() {
            let f = a[i][r] / a[r][r];
            for j in r..cols {
                a[i][j] -= f * a[r][j];
            }
        }
        r += 1;
    }
    r
}
