use std::f64::consts::TAU;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complexspace::{affine_dim, apply_complex, PolytopeCm};
use crate::diffbody::{dc_planar, dc_polytope, steiner_centered};
use crate::planar::{Point2, Polygon2};
use crate::{Complex, Result};

use super::corpus::{random_polygon, random_unitary};

/// One row of the dimension table: `K` spans an `l`-dimensional real
/// subspace `E` with `dim_ℂ(E ∩ JE) = a`.
#[derive(Debug, Clone, Serialize)]
pub struct DimensionRow {
    pub l: usize,
    pub a: usize,
    pub expected: usize,
    pub observed: usize,
}

/// Generators of a standard body for `(l, a)` in `ℂ²`, as points of `ℝ⁴`.
fn standard_body(l: usize, a: usize) -> Vec<Vec<f64>> {
    let e1 = vec![1.0, 0.0, 0.0, 0.0];
    let je1 = vec![0.0, 1.0, 0.0, 0.0];
    let e2 = vec![0.0, 0.0, 1.0, 0.0];
    let je2 = vec![0.0, 0.0, 0.0, 1.0];
    let o = vec![0.0; 4];
    let sum = |p: &[f64], q: &[f64]| p.iter().zip(q).map(|(x, y)| x + y).collect::<Vec<_>>();
    match (l, a) {
        (0, 0) => vec![o],
        (1, 0) => vec![o, e1],
        (2, 0) => vec![o, e1.clone(), e2.clone(), sum(&e1, &e2)],
        (2, 1) => (0..7)
            .map(|k| {
                let t = TAU * k as f64 / 7.0;
                vec![t.cos(), t.sin(), 0.0, 0.0]
            })
            .collect(),
        (3, 1) => vec![o, e1, je1, e2],
        (4, 2) => vec![o, e1, je1, e2, je2],
        _ => panic!("({l}, {a}) is not realizable in C^2"),
    }
}

/// `dim D_C K` against `2(l − a)` for the six `(l, a)` pairs realizable in
/// `ℂ²`, each body moved by a random unitary map and translation and paired
/// with a random polygon `C`.
pub fn dimension_table(seed: u64) -> Result<Vec<DimensionRow>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for (l, a) in [(0, 0), (1, 0), (2, 0), (2, 1), (3, 1), (4, 2)] {
        let u = random_unitary(&mut rng);
        let shift: Vec<f64> = (0..4).map(|_| rng.random_range(-1.0..1.0)).collect();
        let verts = standard_body(l, a)
            .iter()
            .map(|v| apply_complex(&u, v).iter().zip(&shift).map(|(x, s)| x + s).collect())
            .collect();
        let k = PolytopeCm::new(2, verts)?;
        let c = random_polygon(&mut rng, 6);
        let d = dc_polytope(&c, &k.into());
        rows.push(DimensionRow { l, a, expected: 2 * (l - a), observed: affine_dim(&d, 1e-8) });
    }
    Ok(rows)
}

#[derive(Debug, Clone, Serialize)]
pub struct NonSurjectivity {
    /// Smallest Hausdorff distance from a catalogue `D_C K` to a rotated,
    /// scaled copy of the scalene triangle, relative to `diam(D_C K)`.
    pub best_relative_distance: f64,
    pub pairs_tried: usize,
    /// `d_H(D_I K, D_I(−K))` for a segment `I`: zero, so `D_I` is not injective.
    pub reflection_defect: f64,
    /// `d_H(D_{ρC} K, D_C(ρK))`: zero, distinct inputs with the same output.
    pub homogeneity_defect: f64,
}

/// `min_λ sup_u |λ h_T(u) − h_D(u)|` by golden-section search (the
/// objective is convex in `λ`).
fn best_scaling(t: &Polygon2, d: &Polygon2) -> f64 {
    let f = |lam: f64| t.scale(lam).hausdorff(d);
    let (mut lo, mut hi) = (0.0, 2.0 * d.diameter() / t.diameter().max(1e-12));
    let g = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..80 {
        let a = hi - g * (hi - lo);
        let b = lo + g * (hi - lo);
        if f(a) < f(b) {
            hi = b;
        } else {
            lo = a;
        }
    }
    f(0.5 * (lo + hi))
}

/// A scalene triangle is not `D_C K` for any pair in a catalogue of few-edge
/// polygons, even after rotating and scaling; plus two witnesses that `D` is
/// not injective. A report, not a proof.
pub fn nonsurjectivity_demo() -> Result<NonSurjectivity> {
    let pts = |v: &[(f64, f64)]| Polygon2::from_points(&v.iter().map(|&(x, y)| Point2::new(x, y)).collect::<Vec<_>>());
    let target = steiner_centered(&pts(&[(0.0, 0.0), (1.0, 0.0), (0.25, 0.6)])?);
    let catalogue = vec![
        Polygon2::interval(),
        Polygon2::unit_square(),
        Polygon2::regular(3, 1.0, 0.0)?,
        pts(&[(0.0, 0.0), (1.0, 0.0), (0.25, 0.6)])?,
        pts(&[(0.0, 0.0), (1.0, 0.0), (0.75, 0.6)])?,
        pts(&[(0.0, 0.0), (2.0, 0.0), (0.1, 0.3)])?,
        pts(&[(0.0, 0.0), (1.0, 0.0), (1.2, 0.5), (0.1, 0.4)])?,
        Polygon2::segment(Point2::new(0.0, 0.0), Point2::new(1.0, 0.3))?,
    ];
    let mut best = f64::INFINITY;
    let mut tried = 0;
    for c in &catalogue {
        for k in &catalogue {
            let d = dc_planar(c, k);
            if d.is_point() {
                continue;
            }
            tried += 1;
            for r in 0..120 {
                let rot = target.rotate_scale(Complex::from_polar(1.0, TAU * r as f64 / 120.0));
                best = best.min(best_scaling(&rot, &d) / d.diameter());
            }
        }
    }
    let k = &catalogue[3];
    let seg = Polygon2::interval();
    let reflection_defect = dc_planar(&seg, k).hausdorff(&dc_planar(&seg, &k.reflect()));
    let rho = Complex::new(0.6, 0.8) * 1.7;
    let c = &catalogue[6];
    let homogeneity_defect = dc_planar(&c.rotate_scale(rho), k).hausdorff(&dc_planar(c, &k.rotate_scale(rho)));
    Ok(NonSurjectivity { best_relative_distance: best, pairs_tried: tried, reflection_defect, homogeneity_defect })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_rows_match() {
        for row in dimension_table(5).unwrap() {
            assert_eq!(row.observed, row.expected, "{row:?}");
        }
    }
}
