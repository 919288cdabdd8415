use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complexspace::{complex_scale_vec, random_unit};
use crate::diffbody::{dc_planar, dc_planar_sampled};
use crate::planar::{area_measure, fourier_measure, fourier_support, AtomicMeasure1, Convention, PlanarBody, Polygon2};
use crate::{Complex, Result};

use super::disk::{pole_coordinate, DiskPolynomial};

/// `λ_{k,l} = ∑_i s_i e^{−i(k−l)θ_i}` for `0 ≤ k, l ≤ k_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplierTable {
    kmax: usize,
    values: Vec<Complex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MultiplierEntry {
    pub k: usize,
    pub l: usize,
    pub re: f64,
    pub im: f64,
}

/// `λ_j = ∑_i s_i e^{−ijθ_i}`, the multiplier of bi-degree difference `j`.
pub fn multiplier(mu: &AtomicMeasure1, j: i64) -> Complex {
    mu.atoms()
        .iter()
        .map(|&(theta, s)| Complex::from_polar(s, -(j as f64) * theta))
        .sum()
}

pub fn multiplier_table(c: &Polygon2, kmax: usize) -> MultiplierTable {
    let mu = area_measure(c);
    let mut values = Vec::with_capacity((kmax + 1) * (kmax + 1));
    for k in 0..=kmax {
        for l in 0..=kmax {
            values.push(multiplier(&mu, k as i64 - l as i64));
        }
    }
    MultiplierTable { kmax, values }
}

impl MultiplierTable {
    pub fn kmax(&self) -> usize {
        self.kmax
    }

    pub fn get(&self, k: usize, l: usize) -> Option<Complex> {
        (k <= self.kmax && l <= self.kmax).then(|| self.values[k * (self.kmax + 1) + l])
    }

    pub fn entries(&self) -> Vec<MultiplierEntry> {
        let n = self.kmax + 1;
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| MultiplierEntry { k: i / n, l: i % n, re: v.re, im: v.im })
            .collect()
    }
}

/// `max_{|j|≤J} |c_j(h_{D_C K}) − λ_j c_j(h_K)|`, where `D_C K` is built
/// directly (Minkowski sums or grid shifts) and both spectra use the
/// multiplier normalization.
pub fn planar_multiplier_check(c: &Polygon2, k: &PlanarBody, cutoff: usize) -> Result<f64> {
    let lambda = fourier_measure(&area_measure(c), cutoff, Convention::Multiplier);
    let d: PlanarBody = match k {
        PlanarBody::Polygon(p) => dc_planar(c, p).into(),
        PlanarBody::Sampled(s) => dc_planar_sampled(&c.clone().into(), s)?.into(),
    };
    let hd = fourier_support(&d, cutoff, Convention::Multiplier)?;
    let hk = fourier_support(k, cutoff, Convention::Multiplier)?;
    let j = cutoff as i64;
    Ok((-j..=j)
        .map(|j| (hd.get(j) - lambda.get(j) * hk.get(j)).norm())
        .fold(0.0, f64::max))
}

/// Applies `A_C Y(u) = ∑_i s_i Y(e^{−iθ_i} u)` to the zonal harmonic
/// `Y(v) = P_{k,l}((v, e))` and returns the worst `|A_C Y(u) − λ_{k,l} Y(u)|`
/// over `trials` random `u ∈ S³`.
///
/// `Y` is complex linear of bi-degree `(k, l)`: `Y(αv) = α^k ᾱ^l Y(v)`.
pub fn eigenfunction_check(c: &Polygon2, k: usize, l: usize, trials: usize, seed: u64) -> Result<f64> {
    let p = DiskPolynomial::m2(k, l)?;
    let mu = area_measure(c);
    let lambda = multiplier(&mu, k as i64 - l as i64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let u = random_unit(&mut rng, 4);
        let y = p.eval(pole_coordinate(&u));
        let ay: Complex = mu
            .atoms()
            .iter()
            .map(|&(theta, s)| p.eval(pole_coordinate(&complex_scale_vec(&u, Complex::from_polar(1.0, -theta)))) * s)
            .sum();
        worst = worst.max((ay - lambda * y).norm());
    }
    Ok(worst)
}
