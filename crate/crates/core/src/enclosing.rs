//! Minimum enclosing ball in any dimension (Welzl's move-to-front scheme).

use nalgebra::{DMatrix, DVector};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq)]
pub struct Ball {
    pub center: Vec<f64>,
    pub radius: f64,
}

/// Smallest ball containing the points stored row-wise in `points`
/// (`points.len()` a multiple of `dim`).
pub fn min_enclosing_ball(points: &[f64], dim: usize) -> Ball {
    assert!(dim > 0 && points.len().is_multiple_of(dim), "ragged point array");
    let mut pts: Vec<&[f64]> = points.chunks_exact(dim).collect();
    if pts.is_empty() {
        return Ball {
            center: vec![0.0; dim],
            radius: 0.0,
        };
    }
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(0x5eed));
    let mut solver = MoveToFront { pts, dim };
    let end = solver.pts.len();
    let (center, r2) = solver.solve(end, &mut Vec::new());
    // the support-set ball can be off by rounding; make it enclosing
    let radius = points
        .chunks_exact(dim)
        .map(|p| dist2(p, &center))
        .fold(r2.max(0.0), f64::max)
        .sqrt();
    Ball { center, radius }
}

struct MoveToFront<'a> {
    pts: Vec<&'a [f64]>,
    dim: usize,
}

impl<'a> MoveToFront<'a> {
    fn solve(&mut self, end: usize, support: &mut Vec<&'a [f64]>) -> (Vec<f64>, f64) {
        let (mut c, mut r2) = circumball(support, self.dim);
        if support.len() == self.dim + 1 {
            return (c, r2);
        }
        for i in 0..end {
            let p = self.pts[i];
            if r2 < 0.0 || dist2(p, &c) > r2 * (1.0 + 1e-12) + 1e-300 {
                support.push(p);
                (c, r2) = self.solve(i, support);
                support.pop();
                let q = self.pts.remove(i);
                self.pts.insert(0, q);
            }
        }
        (c, r2)
    }
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Smallest ball with all of `support` on its boundary; radius² `−1` for an
/// empty support.
fn circumball(support: &[&[f64]], dim: usize) -> (Vec<f64>, f64) {
    match support.len() {
        0 => (vec![0.0; dim], -1.0),
        1 => (support[0].to_vec(), 0.0),
        k => {
            let p0 = support[0];
            let q: Vec<Vec<f64>> = support[1..]
                .iter()
                .map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect())
                .collect();
            let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
            let g = DMatrix::from_fn(k - 1, k - 1, |i, j| dot(&q[i], &q[j]));
            let rhs = DVector::from_fn(k - 1, |i, _| dot(&q[i], &q[i]) / 2.0);
            let lambda = g
                .clone()
                .lu()
                .solve(&rhs)
                .filter(|x| x.iter().all(|v| v.is_finite()))
                .unwrap_or_else(|| {
                    g.svd(true, true)
                        .solve(&rhs, 1e-14)
                        .expect("svd solve")
                });
            let mut c = p0.to_vec();
            for (l, qi) in lambda.iter().zip(&q) {
                for (cj, qj) in c.iter_mut().zip(qi) {
                    *cj += l * qj;
                }
            }
            let r2 = dist2(&c, p0);
            (c, r2)
        }
    }
}
