use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complexspace::random_unit;
use crate::{Complex, Result};

use super::orthopoly::{build_ortho_q, OrthoPolyQ};

/// Disk polynomial `P_{k,l}(z) = r^{|k−l|} e^{iθ(k−l)} Q_{min(k,l)}(|k−l|, b, r²)`
/// with `b = m − 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskPolynomial {
    k: usize,
    l: usize,
    q: OrthoPolyQ,
}

impl DiskPolynomial {
    pub fn new(k: usize, l: usize, b: u32) -> Result<Self> {
        let q = build_ortho_q(k.abs_diff(l) as u32, b, k.min(l))?;
        Ok(Self { k, l, q })
    }

    /// The `m = 2` family (`b = 0`).
    pub fn m2(k: usize, l: usize) -> Result<Self> {
        Self::new(k, l, 0)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn radial(&self) -> &OrthoPolyQ {
        &self.q
    }

    pub fn eval(&self, z: Complex) -> Complex {
        let w = if self.k >= self.l { z } else { z.conj() };
        w.powu(self.k.abs_diff(self.l) as u32) * self.q.eval(z.norm_sqr())
    }
}

/// `P_{k,l}(z)` for `m = 2`.
pub fn disk_poly_eval(k: usize, l: usize, z: Complex) -> Result<Complex> {
    Ok(DiskPolynomial::m2(k, l)?.eval(z))
}

/// `(x, y) = ∑_j x_j ȳ_j` on `ℂ^m ≅ ℝ^{2m}`; complex linear in `x`.
pub fn hermitian(x: &[f64], y: &[f64]) -> Complex {
    x.chunks_exact(2)
        .zip(y.chunks_exact(2))
        .map(|(a, b)| Complex::new(a[0], a[1]) * Complex::new(b[0], -b[1]))
        .sum()
}

/// First complex coordinate of a point of `ℝ^{2m}`, i.e. `(v, e)` for the
/// pole `e = e_1`.
pub fn pole_coordinate(v: &[f64]) -> Complex {
    Complex::new(v[0], v[1])
}

/// Relative finite-difference Laplacian of `p(x) = ‖x‖^{k+l} P_{k,l}((x/‖x‖, e))`
/// on `ℝ⁴`, worst over 20 random points with `0.5 ≤ ‖x‖ ≤ 1.5`. The relative
/// residual is `|Δp| / max(1, ∑_i |∂²_i p|)`.
pub fn harmonicity_check(k: usize, l: usize, step: f64, seed: u64) -> Result<f64> {
    let p = DiskPolynomial::m2(k, l)?;
    let deg = (k + l) as i32;
    let ext = |x: &[f64]| -> Complex {
        let r = x.iter().map(|t| t * t).sum::<f64>().sqrt();
        p.eval(pole_coordinate(x) / r) * r.powi(deg)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let radius = 0.5 + rand::Rng::random::<f64>(&mut rng);
        let x: Vec<f64> = random_unit(&mut rng, 4).iter().map(|t| t * radius).collect();
        let centre = ext(&x);
        let mut lap = Complex::new(0.0, 0.0);
        let mut scale = 0.0;
        for i in 0..4 {
            let mut xp = x.clone();
            let mut xm = x.clone();
            xp[i] += step;
            xm[i] -= step;
            let d2 = (ext(&xp) - centre * 2.0 + ext(&xm)) / (step * step);
            lap += d2;
            scale += d2.norm();
        }
        worst = worst.max(lap.norm() / scale.max(1.0));
    }
    Ok(worst)
}
