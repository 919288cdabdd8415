//! The operator `D_C K = ∑_i s_i e^{iθ_i} K` for polygonal `C` with surface
//! area measure `∑_i s_i δ_{θ_i}`, in every representation.
//!
//! Its support function is `h(D_C K, u) = ∑_i s_i h(K, e^{−iθ_i} u)` and its
//! Steiner point is the origin.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::complexspace::{complex_scale_vec, CmBody, OracleTerm, PolytopeCm, SupportOracleCm};
use crate::planar::{
    area_measure, normalize_angle, unit, AtomicMeasure1, PlanarBody, Point2, Polygon2,
    SampledSupport2,
};
use crate::{Complex, Error, Result};

/// `D_C K` as a support oracle with one term per atom of `S(C, ·)`. A point
/// `C` gives the body `{0}` (no terms).
pub fn dc_polytope(c: &Polygon2, k: &CmBody) -> SupportOracleCm {
    let terms = area_measure(c)
        .atoms()
        .iter()
        .map(|&(theta, s)| OracleTerm {
            s,
            theta,
            base: k.clone(),
        })
        .collect();
    SupportOracleCm::new(k.m(), terms).expect("atoms have positive weights")
}

/// `D_C` of a body given as a weighted sum of rotated bases, by linearity:
/// every atom of `S(C, ·)` rotates and scales every term.
pub fn dc_oracle(c: &Polygon2, k: &SupportOracleCm) -> SupportOracleCm {
    let atoms = area_measure(c);
    let terms = atoms
        .atoms()
        .iter()
        .flat_map(|&(theta, s)| {
            k.terms().iter().map(move |t| OracleTerm {
                s: s * t.s,
                theta: normalize_angle(theta + t.theta),
                base: t.base.clone(),
            })
        })
        .collect();
    SupportOracleCm::new(k.m(), terms).expect("products of positive weights")
}

/// Exact planar `D_C K` by Minkowski sums of rotated and scaled copies of `K`.
pub fn dc_planar(c: &Polygon2, k: &Polygon2) -> Polygon2 {
    area_measure(c)
        .atoms()
        .iter()
        .map(|&(theta, s)| k.rotate_scale(Complex::from_polar(s, theta)))
        .reduce(|acc, p| acc.minkowski_sum(&p))
        .unwrap_or_else(|| Polygon2::point(Point2::zeros()))
}

/// Planar `D_C K` on the grid of `K`: `h_D[k] = ∑_i s_i h_K[k − j_i]` where
/// `θ_i = j_i · 2π/n`. Polygonal `C` must have all edge normals on the grid;
/// sampled `C` must share the grid and contributes the discrete measure of
/// its circumscribed grid polygon.
pub fn dc_planar_sampled(c: &PlanarBody, k: &SampledSupport2) -> Result<SampledSupport2> {
    let n = k.n();
    let mu = match c {
        PlanarBody::Polygon(p) => area_measure(p),
        PlanarBody::Sampled(s) => {
            if s.n() != n {
                return Err(Error::Resolution(format!(
                    "grid mismatch: C has {} samples, K has {n}",
                    s.n()
                )));
            }
            s.discrete_measure()
        }
    };
    let step = k.step();
    let mut h = vec![0.0; n];
    for &(theta, s) in mu.atoms() {
        let x = theta / step;
        let j = x.round();
        if (x - j).abs() > 1e-9 {
            return Err(Error::Resolution(format!(
                "normal angle {theta} is not on the {n}-point grid"
            )));
        }
        let j = j as usize % n;
        let hk = k.values();
        for (i, hi) in h.iter_mut().enumerate() {
            *hi += s * hk[(i + n - j) % n];
        }
    }
    SampledSupport2::new_unchecked(h)
}

/// `S(C, ·) ∗ S(K, ·)`: atoms `(θ_i + φ_j, s_i r_j)`, merged.
pub fn convolve_measures(sc: &AtomicMeasure1, sk: &AtomicMeasure1) -> AtomicMeasure1 {
    let atoms = sc
        .atoms()
        .iter()
        .flat_map(|&(t, s)| sk.atoms().iter().map(move |&(p, r)| (t + p, s * r)))
        .collect();
    AtomicMeasure1::new(atoms).expect("products of positive weights")
}

/// The polygon whose surface area measure is `mu`, with Steiner point at
/// the origin. Fails if `mu` does not close up to `1e-9` relative to its mass.
pub fn body_from_measure(mu: &AtomicMeasure1) -> Result<Polygon2> {
    let defect = mu.closure_defect();
    let tol = 1e-9 * mu.total_mass().max(1.0);
    if defect > tol {
        return Err(Error::NonMeasure { defect, tol });
    }
    if mu.is_empty() {
        return Ok(Polygon2::point(Point2::zeros()));
    }
    // atoms are sorted by angle, so edges come out counterclockwise
    let mut p = Point2::zeros();
    let mut pts = Vec::with_capacity(mu.len());
    for &(theta, w) in mu.atoms() {
        pts.push(p);
        p += unit(theta + FRAC_PI_2) * w;
    }
    let poly = Polygon2::from_points(&pts)?;
    Ok(steiner_centered(&poly))
}

/// Translate of `p` with Steiner point at the origin.
pub fn steiner_centered(p: &Polygon2) -> Polygon2 {
    p.translate(-p.steiner_point())
}

/// Closed form of `D_C [a u, b u]`: the difference body of `(b − a)·iC·u`,
/// as the two-term oracle `(b − a)(i·Cu + (−i)·Cu)`, where `Cu` is `C`
/// placed in the complex line of `u`.
pub fn dc_segment(c: &Polygon2, a: f64, b: f64, u: &[f64]) -> Result<SupportOracleCm> {
    if !(a < b) {
        return Err(Error::InvalidInput("dc_segment needs a < b".into()));
    }
    if !u.len().is_multiple_of(2) || u.is_empty() {
        return Err(Error::InvalidInput("direction must live in R^{2m}".into()));
    }
    let m = u.len() / 2;
    let verts = c
        .vertices()
        .iter()
        .map(|v| complex_scale_vec(u, Complex::new(v.x, v.y)))
        .collect();
    let cu: CmBody = PolytopeCm::new(m, verts)?.into();
    SupportOracleCm::new(
        m,
        vec![
            OracleTerm { s: b - a, theta: FRAC_PI_2, base: cu.clone() },
            OracleTerm { s: b - a, theta: FRAC_PI_2 + PI, base: cu },
        ],
    )
}

/// `(D_C K, D_K C)`; the two agree up to translation.
pub fn commute_m1(c: &Polygon2, k: &Polygon2) -> (Polygon2, Polygon2) {
    (dc_planar(c, k), dc_planar(k, c))
}

/// Normal angles of the regular `n`-gon with the given phase, reduced to
/// `[0, 2π)`; used to build grid-aligned bodies.
pub fn grid_angles(n: usize, phase: f64) -> Vec<f64> {
    (0..n)
        .map(|k| normalize_angle(phase + std::f64::consts::TAU * k as f64 / n as f64))
        .collect()
}
