//! Diameter and circumradius of bodies given by vertices or as oracles.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::enclosing::min_enclosing_ball;
use crate::Complex;

use super::{complex_scale_vec, norm, random_unit, CmBody, Support, SupportOracleCm};

/// All sums `∑_i s_i e^{iθ_i} v_i` with `v_i` a vertex of term `i`; every
/// vertex of the oracle body is among them. `None` if a term is a ball or the
/// count would exceed `cap`.
pub fn vertex_sum_candidates(b: &SupportOracleCm, cap: usize) -> Option<Vec<f64>> {
    let d = 2 * b.m();
    let mut acc: Vec<f64> = vec![0.0; d];
    for t in b.terms() {
        let CmBody::Polytope(p) = &t.base else {
            return None;
        };
        let rot: Vec<Vec<f64>> = p
            .vertices()
            .map(|v| complex_scale_vec(v, Complex::from_polar(t.s, t.theta)))
            .collect();
        let count = acc.len() / d;
        if count.checked_mul(rot.len())? > cap {
            return None;
        }
        let mut next = Vec::with_capacity(count * rot.len() * d);
        for a in acc.chunks_exact(d) {
            for r in &rot {
                next.extend(a.iter().zip(r).map(|(x, y)| x + y));
            }
        }
        acc = next;
    }
    Some(acc)
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Exact diameter of a finite point set; points that cannot belong to a
/// farthest pair are discarded before the pairwise scan.
pub fn diameter_of_points(points: &[f64], dim: usize) -> f64 {
    let pts: Vec<&[f64]> = points.chunks_exact(dim).collect();
    if pts.len() < 2 {
        return 0.0;
    }
    let n = pts.len() as f64;
    let mut c = vec![0.0; dim];
    for p in &pts {
        for (ci, pi) in c.iter_mut().zip(p.iter()) {
            *ci += pi / n;
        }
    }
    let radii: Vec<f64> = pts.iter().map(|p| dist(p, &c)).collect();
    let r_max = radii.iter().copied().fold(0.0, f64::max);
    // lower bound from repeated farthest-point hops
    let mut lower: f64 = 0.0;
    let mut cur = 0;
    for _ in 0..6 {
        let (far, d) = pts
            .iter()
            .enumerate()
            .map(|(i, p)| (i, dist(p, pts[cur])))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("non-empty");
        lower = lower.max(d);
        cur = far;
    }
    let keep: Vec<&[f64]> = pts
        .iter()
        .zip(&radii)
        .filter(|(_, &r)| r + r_max >= lower)
        .map(|(p, _)| *p)
        .collect();
    let mut best = lower;
    for i in 0..keep.len() {
        for j in i + 1..keep.len() {
            best = best.max(dist(keep[i], keep[j]));
        }
    }
    best
}

/// Radius of the smallest ball containing the point set.
pub fn circumradius_of_points(points: &[f64], dim: usize) -> f64 {
    min_enclosing_ball(points, dim).radius
}

/// Diameter of an oracle body: exact over vertex-sum candidates when there
/// are at most `2^17` of them, otherwise the best of many monotone ascents
/// `u ← (x(u) − x(−u)) / |·|` on the width function.
pub fn diameter(b: &SupportOracleCm) -> f64 {
    match vertex_sum_candidates(b, 1 << 17) {
        Some(c) => diameter_of_points(&c, 2 * b.m()),
        None => width_ascent(b, 64, 0xd1a),
    }
}

/// Largest width found by fixed-point ascent from `starts` random directions.
pub fn width_ascent(b: &impl Support, starts: usize, seed: u64) -> f64 {
    let d = b.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: f64 = 0.0;
    for _ in 0..starts {
        let mut u = random_unit(&mut rng, d);
        let mut last = f64::NEG_INFINITY;
        for _ in 0..100 {
            let neg: Vec<f64> = u.iter().map(|x| -x).collect();
            let w = b.support(&u) + b.support(&neg);
            best = best.max(w);
            if w <= last * (1.0 + 1e-15) {
                break;
            }
            last = w;
            let z: Vec<f64> = b
                .argmax(&u)
                .iter()
                .zip(b.argmax(&neg))
                .map(|(p, q)| p - q)
                .collect();
            let zn = norm(&z);
            if zn == 0.0 {
                break;
            }
            u = z.into_iter().map(|x| x / zn).collect();
        }
    }
    best
}
