//! Exact membership in sums of rotated polytopes and balls, and Monte-Carlo
//! volume built on it.

use nalgebra::{Matrix5, Vector5};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lp::{Cmp, LinearProgram, LpOutcome, Sense};
use crate::{Complex, Error, Result};

use super::{complex_scale_vec, direction_net, CmBody, PolytopeCm, SupportOracleCm};

/// Points are padded to four real coordinates.
pub type V4 = [f64; 4];

fn pad(v: &[f64]) -> V4 {
    let mut out = [0.0; 4];
    out[..v.len()].copy_from_slice(v);
    out
}

fn dot4(a: &V4, b: &V4) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

fn sub4(a: &V4, b: &V4) -> V4 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

#[derive(Debug, Clone)]
enum Summand {
    Points(Vec<V4>),
    Ball { center: V4, radius: f64 },
}

/// A Minkowski sum with every summand pre-rotated and pre-scaled, so that
/// support queries are plain maxima over stored points.
#[derive(Debug, Clone)]
pub struct CompiledBody {
    dim: usize,
    summands: Vec<Summand>,
    scale: f64,
}

impl CompiledBody {
    pub fn from_oracle(b: &SupportOracleCm) -> Self {
        let summands = b
            .terms()
            .iter()
            .map(|t| compile(&t.base, Complex::from_polar(t.s, t.theta)))
            .collect();
        Self::finish(2 * b.m(), summands)
    }

    pub fn from_body(b: &CmBody) -> Self {
        Self::finish(2 * b.m(), vec![compile(b, Complex::new(1.0, 0.0))])
    }

    pub fn from_polytope(p: &PolytopeCm) -> Self {
        Self::from_body(&CmBody::Polytope(p.clone()))
    }

    fn finish(dim: usize, summands: Vec<Summand>) -> Self {
        let scale = summands
            .iter()
            .map(|s| match s {
                Summand::Points(p) => p.iter().map(|v| dot4(v, v).sqrt()).fold(0.0, f64::max),
                Summand::Ball { center, radius } => dot4(center, center).sqrt() + radius,
            })
            .sum::<f64>()
            .max(1e-300);
        Self { dim, summands, scale }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Upper bound on `max_{x ∈ B} |x|`.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn support(&self, u: &V4) -> f64 {
        self.summands
            .iter()
            .map(|s| match s {
                Summand::Points(p) => p.iter().map(|v| dot4(v, u)).fold(f64::NEG_INFINITY, f64::max),
                Summand::Ball { center, radius } => dot4(center, u) + radius * dot4(u, u).sqrt(),
            })
            .sum()
    }

    pub fn argmax(&self, u: &V4) -> V4 {
        let mut acc = [0.0; 4];
        for s in &self.summands {
            let p = match s {
                Summand::Points(p) => *p
                    .iter()
                    .max_by(|a, b| dot4(a, u).total_cmp(&dot4(b, u)))
                    .expect("non-empty summand"),
                Summand::Ball { center, radius } => {
                    let n = dot4(u, u).sqrt();
                    let mut c = *center;
                    if n > 0.0 {
                        for i in 0..4 {
                            c[i] += radius * u[i] / n;
                        }
                    }
                    c
                }
            };
            for i in 0..4 {
                acc[i] += p[i];
            }
        }
        acc
    }
}

fn compile(b: &CmBody, rho: Complex) -> Summand {
    match b {
        CmBody::Polytope(p) => Summand::Points(
            p.vertices()
                .map(|v| pad(&complex_scale_vec(v, rho)))
                .collect(),
        ),
        CmBody::Ball { radius, center, .. } => Summand::Ball {
            center: pad(&complex_scale_vec(center, rho)),
            radius: radius * rho.norm(),
        },
    }
}

/// Outcome of a membership query with its certificate.
#[derive(Debug, Clone, PartialEq)]
pub enum Membership {
    /// `x` is a convex combination of the given body points.
    Inside(Vec<V4>),
    /// `⟨u, x⟩ > h(u)` for the given direction.
    Outside(V4),
}

/// Closest point to the origin of `conv(pts)`, restricted to faces that
/// contain the last point. Returns the point and the face.
fn closest_on_simplex(pts: &[V4]) -> (V4, Vec<V4>) {
    let k = pts.len();
    let last = k - 1;
    let mut best: Option<(f64, V4, Vec<V4>)> = None;
    for mask in 0..(1u32 << last) {
        let mut face: Vec<V4> = (0..last).filter(|i| mask >> i & 1 == 1).map(|i| pts[i]).collect();
        face.push(pts[last]);
        if let Some((lam, v)) = affine_min_norm(&face) {
            if lam.iter().all(|&l| l >= -1e-12) {
                let n = dot4(&v, &v);
                if best.as_ref().is_none_or(|b| n < b.0) {
                    let kept = face
                        .iter()
                        .zip(&lam)
                        .filter(|(_, &l)| l > 0.0)
                        .map(|(p, _)| *p)
                        .collect::<Vec<_>>();
                    let kept = if kept.is_empty() { vec![pts[last]] } else { kept };
                    best = Some((n, v, kept));
                }
            }
        }
    }
    match best {
        Some((_, v, face)) => (v, face),
        None => (pts[last], vec![pts[last]]),
    }
}

/// Minimum-norm point of the affine hull of `face` with its barycentric
/// coordinates; `None` for affinely dependent faces.
fn affine_min_norm(face: &[V4]) -> Option<(Vec<f64>, V4)> {
    let s = face.len();
    if s == 1 {
        return Some((vec![1.0], face[0]));
    }
    let p0 = face[0];
    let q: Vec<V4> = face[1..].iter().map(|p| sub4(p, &p0)).collect();
    let n = s - 1;
    let mut g = [[0.0f64; 5]; 4];
    let mut scale: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            g[i][j] = dot4(&q[i], &q[j]);
        }
        g[i][4] = -dot4(&q[i], &p0);
        scale = scale.max(g[i][i]);
    }
    // Gaussian elimination with partial pivoting
    for c in 0..n {
        let piv = (c..n).max_by(|&a, &b| g[a][c].abs().total_cmp(&g[b][c].abs()))?;
        if g[piv][c].abs() <= 1e-13 * scale {
            return None;
        }
        g.swap(c, piv);
        for r in c + 1..n {
            let f = g[r][c] / g[c][c];
            for cc in c..n {
                g[r][cc] -= f * g[c][cc];
            }
            g[r][4] -= f * g[c][4];
        }
    }
    let mut mu = [0.0; 4];
    for r in (0..n).rev() {
        let mut acc = g[r][4];
        for cc in r + 1..n {
            acc -= g[r][cc] * mu[cc];
        }
        mu[r] = acc / g[r][r];
    }
    let mut lam = vec![1.0 - mu[..n].iter().sum::<f64>()];
    lam.extend_from_slice(&mu[..n]);
    let mut v = p0;
    for i in 0..n {
        for t in 0..4 {
            v[t] += mu[i] * q[i][t];
        }
    }
    Some((lam, v))
}

/// GJK membership test of `x` in `b`, with `tol` the distance below which
/// `x` counts as inside. `None` if the iteration did not settle.
pub fn gjk_contains(b: &CompiledBody, x: &[f64], tol: f64) -> Option<Membership> {
    let x = pad(x);
    let sup = |d: &V4| sub4(&b.argmax(d), &x);
    let mut simplex = vec![sup(&[1.0, 0.0, 0.0, 0.0])];
    let mut v = simplex[0];
    for _ in 0..200 {
        let vv = dot4(&v, &v);
        if vv <= tol * tol {
            return Some(Membership::Inside(
                simplex.iter().map(|p| [p[0] + x[0], p[1] + x[1], p[2] + x[2], p[3] + x[3]]).collect(),
            ));
        }
        let neg = [-v[0], -v[1], -v[2], -v[3]];
        let w = sup(&neg);
        let vw = dot4(&v, &w);
        if vw > 0.0 || vv - vw <= 1e-14 * vv || simplex.contains(&w) {
            // strict separation, or convergence to a positive distance
            return Some(Membership::Outside(neg));
        }
        simplex.push(w);
        let (nv, face) = closest_on_simplex(&simplex);
        v = nv;
        simplex = face;
    }
    None
}

/// Membership by the feasibility program `x = ∑_i y_i` with `y_i` a convex
/// combination of the vertices of summand `i`. Ball summands are rejected.
pub fn lp_contains(b: &SupportOracleCm, x: &[f64]) -> Result<bool> {
    let d = 2 * b.m();
    let mut lp = LinearProgram::new(Sense::Minimize);
    let mut rows: Vec<Vec<(usize, f64)>> = vec![Vec::new(); d];
    for t in b.terms() {
        let CmBody::Polytope(p) = &t.base else {
            return Err(Error::Unsupported("feasibility membership needs polytope summands".into()));
        };
        let rho = Complex::from_polar(t.s, t.theta);
        let mut simplex_row = Vec::new();
        for v in p.vertices() {
            let var = lp.var(0.0, 0.0, f64::INFINITY);
            simplex_row.push((var, 1.0));
            for (k, c) in complex_scale_vec(v, rho).into_iter().enumerate() {
                rows[k].push((var, c));
            }
        }
        lp.constraint(simplex_row, Cmp::Eq, 1.0);
    }
    for (k, row) in rows.into_iter().enumerate() {
        lp.constraint(row, Cmp::Eq, x[k]);
    }
    Ok(matches!(lp.solve()?, LpOutcome::Optimal { .. }))
}

/// Monte-Carlo volume estimate with its binomial standard error.
#[derive(Debug, Clone, PartialEq)]
pub struct VolumeEstimate {
    pub estimate: f64,
    pub sigma: f64,
    pub box_volume: f64,
    pub hits: usize,
    pub samples: usize,
}

/// Uniform sampling of the bounding box `∏ [−h(−e_k), h(e_k)]` with exact
/// membership per sample.
pub fn monte_carlo_volume(b: &CompiledBody, samples: usize, seed: u64) -> Result<VolumeEstimate> {
    let d = b.dim();
    let mut lo = [0.0; 4];
    let mut hi = [0.0; 4];
    for k in 0..d {
        let mut e = [0.0; 4];
        e[k] = 1.0;
        hi[k] = b.support(&e);
        e[k] = -1.0;
        lo[k] = -b.support(&e);
    }
    let box_volume: f64 = (0..d).map(|k| hi[k] - lo[k]).product();
    if !(box_volume > 0.0) || samples == 0 {
        return if samples == 0 {
            Err(Error::InvalidInput("no samples requested".into()))
        } else {
            // a degenerate box carries no d-dimensional volume
            Ok(VolumeEstimate { estimate: 0.0, sigma: 0.0, box_volume: 0.0, hits: 0, samples })
        };
    }
    let tol = 1e-12 * b.scale();
    let net: Vec<(V4, f64)> = direction_net(d, 96, 0x7a)
        .into_iter()
        .map(|u| {
            let u = pad(&u);
            (u, b.support(&u))
        })
        .collect();
    let mut cache = SimplexCache::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0usize;
    for _ in 0..samples {
        let mut x = [0.0; 4];
        for k in 0..d {
            x[k] = rng.random_range(lo[k]..hi[k]);
        }
        if net.iter().any(|(u, h)| dot4(u, &x) > h + tol) {
            continue;
        }
        if d == 4 && cache.contains(&x) {
            hits += 1;
            continue;
        }
        match gjk_contains(b, &x[..d], tol) {
            Some(Membership::Inside(face)) => {
                hits += 1;
                if d == 4 && face.len() == 5 {
                    cache.insert(&face);
                }
            }
            Some(Membership::Outside(_)) => {}
            None => {
                return Err(Error::Resolution("membership iteration did not settle".into()));
            }
        }
    }
    let p = hits as f64 / samples as f64;
    let sigma = box_volume * (p * (1.0 - p) / samples as f64).sqrt();
    Ok(VolumeEstimate {
        estimate: p * box_volume,
        sigma,
        box_volume,
        hits,
        samples,
    })
}

/// Recently found full-dimensional simplices inside the body, used as a
/// quick inner test.
#[derive(Default)]
struct SimplexCache {
    inverses: Vec<Matrix5<f64>>,
}

impl SimplexCache {
    const CAP: usize = 48;

    fn contains(&mut self, x: &V4) -> bool {
        let rhs = Vector5::new(x[0], x[1], x[2], x[3], 1.0);
        for i in 0..self.inverses.len() {
            let lam = self.inverses[i] * rhs;
            if lam.iter().all(|&l| l >= 0.0) {
                let hit = self.inverses.remove(i);
                self.inverses.insert(0, hit);
                return true;
            }
        }
        false
    }

    fn insert(&mut self, face: &[V4]) {
        let m = Matrix5::from_fn(|r, c| if r < 4 { face[c][r] } else { 1.0 });
        if let Some(inv) = m.try_inverse() {
            if inv.iter().all(|v| v.is_finite()) {
                self.inverses.insert(0, inv);
                self.inverses.truncate(Self::CAP);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexspace::{direction_net, OracleTerm};

    fn cube_oracle() -> SupportOracleCm {
        let k = PolytopeCm::cube(2).unwrap();
        SupportOracleCm::new(
            2,
            vec![
                OracleTerm { s: 1.0, theta: 0.3, base: k.clone().into() },
                OracleTerm { s: 0.5, theta: 2.0, base: k.into() },
            ],
        )
        .unwrap()
    }

    #[test]
    fn gjk_agrees_with_feasibility_program() {
        let b = cube_oracle();
        let c = CompiledBody::from_oracle(&b);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut inside = 0;
        for _ in 0..150 {
            // points along rays through boundary points, on both sides
            let u = pad(&crate::complexspace::random_unit(&mut rng, 4));
            let t: f64 = rng.random_range(0.5..1.3);
            let x: Vec<f64> = c.argmax(&u).iter().map(|v| v * t).collect();
            let g = matches!(gjk_contains(&c, &x, 1e-12).unwrap(), Membership::Inside(_));
            assert_eq!(g, lp_contains(&b, &x).unwrap(), "x = {x:?}");
            inside += g as usize;
        }
        assert!(inside > 10 && inside < 140);
    }

    #[test]
    fn certificates_are_valid() {
        let b = cube_oracle();
        let c = CompiledBody::from_oracle(&b);
        for u in direction_net(4, 30, 2) {
            let x: Vec<f64> = u.iter().map(|v| v * 0.8).collect();
            match gjk_contains(&c, &x, 1e-12).unwrap() {
                Membership::Outside(dir) => {
                    assert!(dot4(&dir, &pad(&x)) > c.support(&dir) - 1e-12);
                }
                Membership::Inside(face) => assert!(!face.is_empty()),
            }
        }
    }

    #[test]
    fn cube_volume() {
        let c = CompiledBody::from_polytope(&PolytopeCm::cube(2).unwrap());
        let v = monte_carlo_volume(&c, 2000, 1).unwrap();
        assert_eq!(v.hits, 2000);
        assert!((v.estimate - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ball_volume_within_three_sigma() {
        let c = CompiledBody::from_body(&CmBody::ball(2, 1.0).unwrap());
        let v = monte_carlo_volume(&c, 20000, 3).unwrap();
        let exact = std::f64::consts::PI.powi(2) / 2.0;
        assert!((v.estimate - exact).abs() <= 3.0 * v.sigma);
    }

    #[test]
    fn lower_dimensional_body_has_no_volume() {
        let seg = PolytopeCm::segment(&[0.0; 4], &[1.0, 0.0, 0.0, 0.0]).unwrap();
        let v = monte_carlo_volume(&CompiledBody::from_polytope(&seg), 1000, 1).unwrap();
        assert_eq!(v.estimate, 0.0);
    }
}
