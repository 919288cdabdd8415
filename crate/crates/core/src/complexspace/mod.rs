//! Convex bodies in `ℂ^m ≅ ℝ^{2m}`, `m ∈ {1, 2}`.
//!
//! A point `(z_1, …, z_m)` is stored as `(x_1, y_1, …, x_m, y_m)` with
//! `z_j = x_j + i y_j`. The complex structure `J` is multiplication by `i`,
//! the real inner product is `⟨x, y⟩ = Re (x, y)` for the hermitian product
//! `(x, y) = ∑ x_j ȳ_j`, and `h(αK, u) = h(K, ᾱu)` for unimodular `α`.

mod membership;
mod metric;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lp::{Cmp, LinearProgram, LpOutcome, Sense};
use crate::planar::{Point2, Polygon2};
use crate::{Complex, Error, Result};

pub use membership::{gjk_contains, lp_contains, Membership};
pub use membership::{monte_carlo_volume, CompiledBody, VolumeEstimate};
pub use metric::{
    circumradius_of_points, diameter, diameter_of_points, vertex_sum_candidates, width_ascent,
};

/// Bodies with a computable support function on `ℝ^d`.
pub trait Support {
    fn dim(&self) -> usize;
    fn support(&self, u: &[f64]) -> f64;
    /// A point of the body attaining `support(u)`.
    fn argmax(&self, u: &[f64]) -> Vec<f64>;
}

/// Multiplies each complex coordinate of `v` by `alpha`.
pub fn complex_scale_vec(v: &[f64], alpha: Complex) -> Vec<f64> {
    v.chunks_exact(2)
        .flat_map(|p| {
            let z = alpha * Complex::new(p[0], p[1]);
            [z.re, z.im]
        })
        .collect()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Deterministic net of `count` unit vectors in `ℝ^dim`.
pub fn direction_net(dim: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_unit(&mut rng, dim)).collect()
}

/// Uniform random unit vector.
pub fn random_unit<R: Rng>(rng: &mut R, dim: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| gaussian(rng)).collect();
        let n = norm(&v);
        if n > 1e-12 {
            return v.into_iter().map(|x| x / n).collect();
        }
    }
}

/// Standard normal sample (Box–Muller).
pub fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = 1.0 - rng.random::<f64>();
    let u2: f64 = rng.random();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

fn check_m(m: usize) -> Result<()> {
    if m == 1 || m == 2 {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("complex dimension m = {m} (only 1 and 2)")))
    }
}

/// Vertex-represented polytope in `ℝ^{2m}`; every stored vertex is extreme.
#[derive(Debug, Clone, PartialEq)]
pub struct PolytopeCm {
    m: usize,
    verts: Vec<f64>,
}

impl PolytopeCm {
    /// Builds the polytope, dropping duplicate and non-extreme points.
    pub fn new(m: usize, vertices: Vec<Vec<f64>>) -> Result<Self> {
        check_m(m)?;
        let d = 2 * m;
        if vertices.is_empty() {
            return Err(Error::InvalidInput("polytope needs at least one vertex".into()));
        }
        let mut flat = Vec::with_capacity(vertices.len() * d);
        for v in &vertices {
            if v.len() != d {
                return Err(Error::InvalidInput(format!(
                    "vertex has {} coordinates, expected {d}",
                    v.len()
                )));
            }
            if v.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidInput("non-finite coordinate".into()));
            }
            flat.extend_from_slice(v);
        }
        Self::from_flat(m, flat)
    }

    pub fn from_flat(m: usize, flat: Vec<f64>) -> Result<Self> {
        check_m(m)?;
        let d = 2 * m;
        if flat.is_empty() || !flat.len().is_multiple_of(d) {
            return Err(Error::InvalidInput("ragged vertex array".into()));
        }
        let pruned = extreme_points(&flat, d)?;
        Ok(Self { m, verts: pruned })
    }

    /// Embeds a polygon as a body in `ℂ¹`.
    pub fn from_polygon(p: &Polygon2) -> Self {
        Self {
            m: 1,
            verts: p.vertices().iter().flat_map(|v| [v.x, v.y]).collect(),
        }
    }

    /// The polygon `p` placed in the complex line `ℂ e_j` of `ℂ^m`.
    pub fn polygon_in_line(p: &Polygon2, m: usize, j: usize) -> Result<Self> {
        check_m(m)?;
        let verts = p
            .vertices()
            .iter()
            .map(|v| {
                let mut x = vec![0.0; 2 * m];
                x[2 * j] = v.x;
                x[2 * j + 1] = v.y;
                x
            })
            .collect();
        Self::new(m, verts)
    }

    /// Segment `[a, b]`.
    pub fn segment(a: &[f64], b: &[f64]) -> Result<Self> {
        if a.len() != b.len() || !a.len().is_multiple_of(2) {
            return Err(Error::InvalidInput("segment endpoints of unequal or odd length".into()));
        }
        Self::new(a.len() / 2, vec![a.to_vec(), b.to_vec()])
    }

    /// `[0, 1]^{2m}`.
    pub fn cube(m: usize) -> Result<Self> {
        let d = 2 * m;
        let verts = (0..1usize << d)
            .map(|mask| (0..d).map(|i| ((mask >> i) & 1) as f64).collect())
            .collect();
        Self::new(m, verts)
    }

    /// `conv{±a_i e_i}`.
    pub fn cross_polytope(m: usize, semi_axes: &[f64]) -> Result<Self> {
        let d = 2 * m;
        if semi_axes.len() != d {
            return Err(Error::InvalidInput("one semi-axis per real coordinate".into()));
        }
        let mut verts = Vec::new();
        for (i, &a) in semi_axes.iter().enumerate() {
            for s in [-1.0, 1.0] {
                let mut v = vec![0.0; d];
                v[i] = s * a;
                verts.push(v);
            }
        }
        Self::new(m, verts)
    }

    /// `P × Q ⊂ ℂ²` for planar polygons `P`, `Q`.
    pub fn product(p: &Polygon2, q: &Polygon2) -> Result<Self> {
        let mut verts = Vec::new();
        for a in p.vertices() {
            for b in q.vertices() {
                verts.push(vec![a.x, a.y, b.x, b.y]);
            }
        }
        Self::new(2, verts)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        2 * self.m
    }

    pub fn num_vertices(&self) -> usize {
        self.verts.len() / self.dim()
    }

    pub fn vertex(&self, i: usize) -> &[f64] {
        let d = self.dim();
        &self.verts[i * d..(i + 1) * d]
    }

    pub fn vertices(&self) -> impl Iterator<Item = &[f64]> {
        self.verts.chunks_exact(self.dim())
    }

    pub fn vertices_flat(&self) -> &[f64] {
        &self.verts
    }

    /// Multiplies every vertex by `alpha` coordinate-wise in `ℂ^m`.
    pub fn complex_scale(&self, alpha: Complex) -> Self {
        if alpha.norm() == 0.0 {
            return Self {
                m: self.m,
                verts: vec![0.0; self.dim()],
            };
        }
        Self {
            m: self.m,
            verts: complex_scale_vec(&self.verts, alpha),
        }
    }

    /// Image under the complex-linear map `z ↦ T z` (`T` given row-wise).
    pub fn apply_complex_linear(&self, t: &[Vec<Complex>]) -> Result<Self> {
        let flat = self
            .vertices()
            .flat_map(|v| apply_complex(t, v))
            .collect();
        Self::from_flat(self.m, flat)
    }

    /// Image under a real linear map `x ↦ M x`.
    pub fn apply_real_linear(&self, mat: &DMatrix<f64>) -> Result<Self> {
        let d = self.dim();
        let flat = self
            .vertices()
            .flat_map(|v| {
                (0..d)
                    .map(|i| (0..d).map(|j| mat[(i, j)] * v[j]).sum::<f64>())
                    .collect::<Vec<_>>()
            })
            .collect();
        Self::from_flat(self.m, flat)
    }

    pub fn translate(&self, t: &[f64]) -> Self {
        let d = self.dim();
        let verts = self
            .verts
            .iter()
            .enumerate()
            .map(|(i, x)| x + t[i % d])
            .collect();
        Self { m: self.m, verts }
    }

    /// Mean of the vertices.
    pub fn vertex_mean(&self) -> Vec<f64> {
        let d = self.dim();
        let n = self.num_vertices() as f64;
        let mut c = vec![0.0; d];
        for v in self.vertices() {
            for (ci, vi) in c.iter_mut().zip(v) {
                *ci += vi / n;
            }
        }
        c
    }
}

/// `T z` for a complex matrix given row-wise and `z` in real coordinates.
pub fn apply_complex(t: &[Vec<Complex>], v: &[f64]) -> Vec<f64> {
    let z: Vec<Complex> = v.chunks_exact(2).map(|p| Complex::new(p[0], p[1])).collect();
    t.iter()
        .flat_map(|row| {
            let w: Complex = row.iter().zip(&z).map(|(a, b)| a * b).sum();
            [w.re, w.im]
        })
        .collect()
}

/// `T^H u`, the real adjoint of `z ↦ T z`.
pub fn apply_complex_adjoint(t: &[Vec<Complex>], u: &[f64]) -> Vec<f64> {
    let m = t.len();
    let z: Vec<Complex> = u.chunks_exact(2).map(|p| Complex::new(p[0], p[1])).collect();
    (0..m)
        .flat_map(|k| {
            let w: Complex = (0..m).map(|j| t[j][k].conj() * z[j]).sum();
            [w.re, w.im]
        })
        .collect()
}

/// Removes duplicates and points inside the hull of the others.
fn extreme_points(flat: &[f64], d: usize) -> Result<Vec<f64>> {
    let scale = flat.iter().fold(1.0f64, |a, x| a.max(x.abs()));
    let tol = 1e-12 * scale;
    let mut pts: Vec<&[f64]> = Vec::new();
    for p in flat.chunks_exact(d) {
        if !pts.iter().any(|q| q.iter().zip(p).all(|(a, b)| (a - b).abs() <= tol)) {
            pts.push(p);
        }
    }
    let n = pts.len();
    if n <= 2 {
        return Ok(pts.concat());
    }
    // unique maximizers of random linear functionals are certainly extreme
    let mut extreme = vec![false; n];
    for u in direction_net(d, 8 * n + 32, 0xe7) {
        let vals: Vec<f64> = pts.iter().map(|p| dot(p, &u)).collect();
        let (best, &top) = vals
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .expect("non-empty");
        if vals.iter().filter(|&&v| v >= top - 1e-9 * scale).count() == 1 {
            extreme[best] = true;
        }
    }
    let mut keep = Vec::with_capacity(n * d);
    for i in 0..n {
        if extreme[i] {
            keep.extend_from_slice(pts[i]);
            continue;
        }
        let others: Vec<f64> = (0..n)
            .filter(|&j| j != i)
            .flat_map(|j| pts[j].iter().copied())
            .collect();
        if !in_hull(&others, d, pts[i])? {
            keep.extend_from_slice(pts[i]);
        }
    }
    Ok(keep)
}

/// Whether `x ∈ conv(points)` by a feasibility program.
pub(crate) fn in_hull(points: &[f64], d: usize, x: &[f64]) -> Result<bool> {
    let n = points.len() / d;
    let mut lp = LinearProgram::new(Sense::Minimize);
    let vars: Vec<usize> = (0..n).map(|_| lp.var(0.0, 0.0, f64::INFINITY)).collect();
    lp.constraint(vars.iter().map(|&v| (v, 1.0)).collect(), Cmp::Eq, 1.0);
    for k in 0..d {
        lp.constraint(
            vars.iter().enumerate().map(|(j, &v)| (v, points[j * d + k])).collect(),
            Cmp::Eq,
            x[k],
        );
    }
    Ok(matches!(lp.solve()?, LpOutcome::Optimal { .. }))
}

impl Support for PolytopeCm {
    fn dim(&self) -> usize {
        2 * self.m
    }

    fn support(&self, u: &[f64]) -> f64 {
        self.vertices().map(|v| dot(v, u)).fold(f64::NEG_INFINITY, f64::max)
    }

    fn argmax(&self, u: &[f64]) -> Vec<f64> {
        self.vertices()
            .max_by(|a, b| dot(a, u).total_cmp(&dot(b, u)))
            .expect("non-empty")
            .to_vec()
    }
}

/// A convex body in `ℂ^m`: a polytope or a Euclidean ball.
#[derive(Debug, Clone, PartialEq)]
pub enum CmBody {
    Polytope(PolytopeCm),
    Ball { m: usize, radius: f64, center: Vec<f64> },
}

impl From<PolytopeCm> for CmBody {
    fn from(p: PolytopeCm) -> Self {
        CmBody::Polytope(p)
    }
}

impl CmBody {
    /// Ball of the given radius centered at the origin.
    pub fn ball(m: usize, radius: f64) -> Result<Self> {
        check_m(m)?;
        if !(radius >= 0.0) {
            return Err(Error::InvalidInput("ball radius must be nonnegative".into()));
        }
        Ok(CmBody::Ball {
            m,
            radius,
            center: vec![0.0; 2 * m],
        })
    }

    pub fn m(&self) -> usize {
        match self {
            CmBody::Polytope(p) => p.m(),
            CmBody::Ball { m, .. } => *m,
        }
    }

    pub fn complex_scale(&self, alpha: Complex) -> Self {
        match self {
            CmBody::Polytope(p) => CmBody::Polytope(p.complex_scale(alpha)),
            CmBody::Ball { m, radius, center } => CmBody::Ball {
                m: *m,
                radius: radius * alpha.norm(),
                center: complex_scale_vec(center, alpha),
            },
        }
    }

    pub fn as_polytope(&self) -> Option<&PolytopeCm> {
        match self {
            CmBody::Polytope(p) => Some(p),
            CmBody::Ball { .. } => None,
        }
    }
}

impl Support for CmBody {
    fn dim(&self) -> usize {
        2 * self.m()
    }

    fn support(&self, u: &[f64]) -> f64 {
        match self {
            CmBody::Polytope(p) => p.support(u),
            CmBody::Ball { radius, center, .. } => radius * norm(u) + dot(center, u),
        }
    }

    fn argmax(&self, u: &[f64]) -> Vec<f64> {
        match self {
            CmBody::Polytope(p) => p.argmax(u),
            CmBody::Ball { radius, center, .. } => {
                let n = norm(u);
                center
                    .iter()
                    .zip(u)
                    .map(|(c, x)| if n > 0.0 { c + radius * x / n } else { *c })
                    .collect()
            }
        }
    }
}

/// One summand `s · e^{iθ} · base` of an oracle body.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleTerm {
    pub s: f64,
    pub theta: f64,
    pub base: CmBody,
}

/// The body `∑_i s_i e^{iθ_i} K_i`, kept as a sum and evaluated through
/// support functions: `h(u) = ∑_i s_i h(K_i, e^{−iθ_i} u)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportOracleCm {
    m: usize,
    terms: Vec<OracleTerm>,
}

impl SupportOracleCm {
    /// Terms must share the complex dimension and carry positive weights.
    /// An empty term list is the body `{0}`.
    pub fn new(m: usize, terms: Vec<OracleTerm>) -> Result<Self> {
        check_m(m)?;
        for t in &terms {
            if t.base.m() != m {
                return Err(Error::InvalidInput("oracle term of wrong dimension".into()));
            }
            if !(t.s > 0.0) || !t.theta.is_finite() {
                return Err(Error::InvalidInput("oracle weights must be positive".into()));
            }
        }
        Ok(Self { m, terms })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &[OracleTerm] {
        &self.terms
    }

    /// `∑ s_i`.
    pub fn total_weight(&self) -> f64 {
        self.terms.iter().map(|t| t.s).sum()
    }

    /// `α · B`, rotating every term.
    pub fn complex_scale(&self, alpha: Complex) -> Self {
        let r = alpha.norm();
        if r == 0.0 {
            return Self { m: self.m, terms: Vec::new() };
        }
        let phi = alpha.arg();
        Self {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|t| OracleTerm {
                    s: t.s * r,
                    theta: t.theta + phi,
                    base: t.base.clone(),
                })
                .collect(),
        }
    }

    /// Minkowski sum of two oracles.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::new(self.m, terms)
    }
}

impl Support for SupportOracleCm {
    fn dim(&self) -> usize {
        2 * self.m
    }

    fn support(&self, u: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                let v = complex_scale_vec(u, Complex::from_polar(1.0, -t.theta));
                t.s * t.base.support(&v)
            })
            .sum()
    }

    fn argmax(&self, u: &[f64]) -> Vec<f64> {
        let mut acc = vec![0.0; self.dim()];
        for t in &self.terms {
            let v = complex_scale_vec(u, Complex::from_polar(1.0, -t.theta));
            let p = complex_scale_vec(&t.base.argmax(&v), Complex::from_polar(t.s, t.theta));
            for (a, b) in acc.iter_mut().zip(p) {
                *a += b;
            }
        }
        acc
    }
}

/// Projection `v ↦ (ξ, v) = ⟨ξ, v⟩ + i⟨−Jξ, v⟩` of a polytope onto the
/// complex line of the unit vector `ξ`. Satisfies
/// `project(αK, ξ) = ᾱ · project(K, ξ)` and
/// `h(D_C K, ξ) = ∫ h(project(K, ξ), ·) dS(C, ·)`.
pub fn project_to_complex_line(k: &PolytopeCm, xi: &[f64]) -> Result<Polygon2> {
    if xi.len() != k.dim() {
        return Err(Error::InvalidInput("direction of wrong dimension".into()));
    }
    let jxi_neg: Vec<f64> = xi.chunks_exact(2).flat_map(|p| [p[1], -p[0]]).collect();
    let pts: Vec<Point2> = k
        .vertices()
        .map(|v| Point2::new(dot(xi, v), dot(&jxi_neg, v)))
        .collect();
    Polygon2::from_points(&pts)
}

/// Bodies whose affine hull can be read off generator points.
pub trait AffineGenerators: Support {
    /// Centered generator sets whose union spans the linear space parallel to
    /// the affine hull; `None` marks a full-dimensional summand.
    fn centered_generators(&self) -> Option<Vec<Vec<f64>>>;
}

fn centered(p: &PolytopeCm) -> Vec<Vec<f64>> {
    let c = p.vertex_mean();
    p.vertices()
        .map(|v| v.iter().zip(&c).map(|(a, b)| a - b).collect())
        .collect()
}

impl AffineGenerators for PolytopeCm {
    fn centered_generators(&self) -> Option<Vec<Vec<f64>>> {
        Some(centered(self))
    }
}

impl AffineGenerators for SupportOracleCm {
    /// The affine hull of a Minkowski sum is the sum of the affine hulls.
    fn centered_generators(&self) -> Option<Vec<Vec<f64>>> {
        let mut all = Vec::new();
        for t in &self.terms {
            match &t.base {
                CmBody::Polytope(p) => {
                    let rot = Complex::from_polar(t.s, t.theta);
                    all.extend(centered(p).into_iter().map(|v| complex_scale_vec(&v, rot)));
                }
                CmBody::Ball { radius, .. } if *radius > 0.0 => return None,
                CmBody::Ball { .. } => {}
            }
        }
        Some(all)
    }
}

/// Dimension of the affine hull: number of singular values above
/// `tol · σ_max` of the centered generator matrix.
pub fn affine_dim(b: &impl AffineGenerators, tol: f64) -> usize {
    let d = b.dim();
    let Some(gens) = b.centered_generators() else {
        return d;
    };
    if gens.is_empty() {
        return 0;
    }
    let mat = DMatrix::from_fn(gens.len(), d, |i, j| gens[i][j]);
    let sv = mat.singular_values();
    let top = sv.iter().copied().fold(0.0, f64::max);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > tol * top).count()
}

/// `max |h(αB, u) − h(B, u)|` over the angles `2πk/n_angles` and a fixed
/// net of 256 directions.
pub fn s1_invariance_defect(b: &impl Support, n_angles: usize) -> f64 {
    let net = direction_net(b.dim(), 256, 0x51);
    let mut worst: f64 = 0.0;
    for u in &net {
        let h0 = b.support(u);
        for k in 1..n_angles {
            let a = std::f64::consts::TAU * k as f64 / n_angles as f64;
            let v = complex_scale_vec(u, Complex::from_polar(1.0, -a));
            worst = worst.max((b.support(&v) - h0).abs());
        }
    }
    worst
}
