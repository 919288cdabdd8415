use std::f64::consts::{PI, TAU};

use rustfft::FftPlanner;

use crate::{Complex, Error, Result};

use super::{normalize_angle, AtomicMeasure1, Point2, Polygon2};

/// Support function sampled at the angles `2πk/n`, `n` a power of two ≥ 64.
///
/// Off-grid values come from trigonometric interpolation of the samples.
#[derive(Debug, Clone)]
pub struct SampledSupport2 {
    h: Vec<f64>,
    /// `A_j = (1/n) ∑_k h_k e^{−2πijk/n}`, `j = 0..n`.
    dft: Vec<Complex>,
}

impl PartialEq for SampledSupport2 {
    fn eq(&self, other: &Self) -> bool {
        self.h == other.h
    }
}

/// Default tolerance of the discrete convexity test, relative to `max |h|`.
pub const CONVEXITY_TOL: f64 = 1e-9;

impl SampledSupport2 {
    /// Validates grid size and discrete convexity.
    pub fn new(h: Vec<f64>) -> Result<Self> {
        let s = Self::new_unchecked(h)?;
        let tol = CONVEXITY_TOL * s.magnitude();
        let defect = s.convexity_defect();
        if defect > tol {
            return Err(Error::InvalidInput(format!(
                "samples violate discrete convexity by {defect:.3e}"
            )));
        }
        Ok(s)
    }

    /// Validates the grid only; for intermediate values that are known to be
    /// support functions up to rounding.
    pub fn new_unchecked(h: Vec<f64>) -> Result<Self> {
        let n = h.len();
        if n < 64 || !n.is_power_of_two() {
            return Err(Error::InvalidInput(format!(
                "grid size {n} is not a power of two >= 64"
            )));
        }
        if h.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("non-finite support value".into()));
        }
        let mut buf: Vec<Complex> = h.iter().map(|&v| Complex::new(v, 0.0)).collect();
        FftPlanner::new().plan_fft_forward(n).process(&mut buf);
        let inv = 1.0 / n as f64;
        buf.iter_mut().for_each(|c| *c *= inv);
        Ok(Self { h, dft: buf })
    }

    pub fn from_fn(n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let step = TAU / n as f64;
        Self::new((0..n).map(|k| f(k as f64 * step)).collect())
    }

    pub fn from_polygon(p: &Polygon2, n: usize) -> Result<Self> {
        Self::from_fn(n, |t| p.support(t))
    }

    /// Disc of radius `r` centered at `center`.
    pub fn disc(n: usize, r: f64, center: Point2) -> Result<Self> {
        if r < 0.0 {
            return Err(Error::InvalidInput("negative radius".into()));
        }
        Self::from_fn(n, |t| r + center.x * t.cos() + center.y * t.sin())
    }

    /// Reuleaux triangle of width 1 centered at the origin.
    pub fn reuleaux_triangle(n: usize) -> Result<Self> {
        Self::from_fn(n, reuleaux_support)
    }

    pub fn n(&self) -> usize {
        self.h.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.h
    }

    pub fn step(&self) -> f64 {
        TAU / self.n() as f64
    }

    pub fn angle(&self, k: usize) -> f64 {
        k as f64 * self.step()
    }

    /// Normalized DFT `A_j`, `j = 0..n`.
    pub fn dft(&self) -> &[Complex] {
        &self.dft
    }

    fn magnitude(&self) -> f64 {
        self.h.iter().fold(0.0f64, |a, v| a.max(v.abs())).max(1.0)
    }

    /// `max_k (−(h_{k−1} + h_{k+1} − 2 cos Δ h_k))⁺`.
    pub fn convexity_defect(&self) -> f64 {
        self.second_differences()
            .into_iter()
            .fold(0.0f64, |a, d| a.max(-d))
    }

    fn second_differences(&self) -> Vec<f64> {
        let n = self.n();
        let c = self.step().cos();
        (0..n)
            .map(|k| self.h[(k + n - 1) % n] + self.h[(k + 1) % n] - 2.0 * c * self.h[k])
            .collect()
    }

    /// Trigonometric interpolant; exact at grid angles.
    pub fn support(&self, theta: f64) -> f64 {
        let n = self.n();
        let x = normalize_angle(theta) / self.step();
        let k = x.round();
        if (x - k).abs() < 1e-9 {
            return self.h[k as usize % n];
        }
        let half = n / 2;
        let mut acc = self.dft[0].re;
        let rot = Complex::from_polar(1.0, theta);
        let mut e = rot;
        for j in 1..half {
            acc += 2.0 * (self.dft[j] * e).re;
            e *= rot;
        }
        acc + self.dft[half].re * (half as f64 * theta).cos()
    }

    pub fn width(&self, theta: f64) -> f64 {
        self.support(theta) + self.support(theta + PI)
    }

    /// Surface area measure of the circumscribed polygon with normals on the
    /// grid: weights `(h_{k−1} + h_{k+1} − 2 cos Δ h_k) / sin Δ`, with
    /// rounding-level second differences treated as zero.
    pub fn discrete_measure(&self) -> AtomicMeasure1 {
        let s = self.step().sin();
        let floor = 1e-12 * self.magnitude();
        let atoms = self
            .second_differences()
            .into_iter()
            .enumerate()
            .map(|(k, d)| (self.angle(k), if d > floor { d / s } else { 0.0 }))
            .collect();
        AtomicMeasure1::new(atoms).expect("nonnegative weights")
    }

    /// Polygon cut out by the grid half-planes `⟨x, u_k⟩ ≤ h_k`.
    pub fn grid_polygon(&self) -> Polygon2 {
        let n = self.n();
        let d = self.step().sin();
        let pts: Vec<Point2> = (0..n)
            .map(|k| {
                let (a, b) = (self.angle(k), self.angle(k + 1));
                let (hk, hn) = (self.h[k], self.h[(k + 1) % n]);
                Point2::new(
                    (hk * b.sin() - hn * a.sin()) / d,
                    (hn * a.cos() - hk * b.cos()) / d,
                )
            })
            .collect();
        Polygon2::from_points(&pts).expect("finite grid polygon")
    }

    /// Two-sided coefficient at `j ∈ (−n/2, n/2]`, Nyquist split in halves.
    fn two_sided(&self, j: i64) -> Complex {
        let n = self.n() as i64;
        let half = n / 2;
        let c = self.dft[j.rem_euclid(n) as usize];
        if j.abs() == half {
            c * 0.5
        } else {
            c
        }
    }

    /// `∫ h_other d(h + h'')` over the circle computed from the
    /// interpolants of both sample sets (same grid required).
    pub fn spectral_pairing(&self, other: &SampledSupport2) -> Result<f64> {
        if self.n() != other.n() {
            return Err(Error::Resolution(format!(
                "grid mismatch: {} vs {}",
                self.n(),
                other.n()
            )));
        }
        let half = (self.n() / 2) as i64;
        let mut acc = 0.0;
        for j in -half..=half {
            let jj = (j * j) as f64;
            acc += (1.0 - jj) * (self.two_sided(j) * other.two_sided(j).conj()).re;
        }
        Ok(TAU * acc)
    }

    /// `(1/2) ∫ h (h + h'')`.
    pub fn area(&self) -> f64 {
        0.5 * self.spectral_pairing(self).expect("same grid")
    }

    /// `∫ h`.
    pub fn perimeter(&self) -> f64 {
        TAU * self.dft[0].re
    }

    /// Steiner point `(1/π) ∫ h(θ) (cos θ, sin θ) dθ` of the interpolant.
    pub fn steiner_point(&self) -> Point2 {
        let c = self.dft[1] * 2.0;
        Point2::new(c.re, -c.im)
    }

    pub fn add(&self, other: &SampledSupport2) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::Resolution("grid mismatch".into()));
        }
        Self::new_unchecked(self.h.iter().zip(&other.h).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new_unchecked(self.h.iter().map(|v| v * s).collect()).expect("same grid")
    }

    pub fn translate(&self, t: Point2) -> Self {
        let n = self.n();
        Self::new_unchecked(
            (0..n)
                .map(|k| {
                    let a = self.angle(k);
                    self.h[k] + t.x * a.cos() + t.y * a.sin()
                })
                .collect(),
        )
        .expect("same grid")
    }

    /// Support of `e^{2πi shift/n} K`: `h(θ − 2π shift/n)`, an index shift.
    pub fn rotate_grid(&self, shift: usize) -> Self {
        let n = self.n();
        let s = shift % n;
        Self::new_unchecked((0..n).map(|k| self.h[(k + n - s) % n]).collect()).expect("same grid")
    }

    /// `max_k |h_k − other_k|`.
    pub fn max_diff(&self, other: &SampledSupport2) -> Result<f64> {
        if self.n() != other.n() {
            return Err(Error::Resolution("grid mismatch".into()));
        }
        Ok(self
            .h
            .iter()
            .zip(&other.h)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}

fn reuleaux_support(phi: f64) -> f64 {
    let rho = 1.0 / 3f64.sqrt();
    let dist = |a: f64, b: f64| {
        let d = normalize_angle(a - b);
        d.min(TAU - d)
    };
    for j in 0..3 {
        let psi = PI / 2.0 + TAU * j as f64 / 3.0;
        let c = rho * (phi - psi).cos();
        if dist(phi, psi) <= PI / 6.0 {
            return c;
        }
        if dist(phi, psi + PI) <= PI / 6.0 {
            return 1.0 + c;
        }
    }
    unreachable!("the six arcs cover the circle")
}
