use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::{Complex, Error, Result};

use super::{AtomicMeasure1, PlanarBody, Polygon2, SampledSupport2};

/// Normalization of Fourier coefficients.
///
/// * `Raw`: `c_0 = (1/2π) ∫ f`, `c_j = (1/π) ∫ e^{ijα} f(α) dα` for `j ≠ 0`.
/// * `Multiplier`: `c_j = ∫ e^{−ijα} f(α) dα` for every `j`. In this form the
///   multiplier of `D_C` on frequency `j` is exactly `c_j(S_C)` and
///   `c_0(S_C) = l(C)`.
///
/// The two are related by `raw_j = mult_{−j}/π` (`j ≠ 0`) and
/// `raw_0 = mult_0/(2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Raw,
    Multiplier,
}

/// Coefficients `c_j`, `j = −J..=J`, tagged with their convention.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    convention: Convention,
    coeffs: Vec<Complex>,
}

impl Spectrum {
    /// `coeffs[i]` holds `c_{i−J}`; the length must be odd.
    pub fn new(convention: Convention, coeffs: Vec<Complex>) -> Result<Self> {
        if coeffs.len().is_multiple_of(2) {
            return Err(Error::InvalidInput("spectrum length must be 2J+1".into()));
        }
        Ok(Self { convention, coeffs })
    }

    fn from_fn(convention: Convention, cutoff: usize, f: impl Fn(i64) -> Complex) -> Self {
        let j = cutoff as i64;
        Self {
            convention,
            coeffs: (-j..=j).map(f).collect(),
        }
    }

    pub fn cutoff(&self) -> usize {
        self.coeffs.len() / 2
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// `c_j`; panics when `|j|` exceeds the cutoff.
    pub fn get(&self, j: i64) -> Complex {
        let c = self.cutoff() as i64;
        assert!(j.abs() <= c, "frequency {j} beyond cutoff {c}");
        self.coeffs[(j + c) as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex)> + '_ {
        let c = self.cutoff() as i64;
        self.coeffs.iter().enumerate().map(move |(i, &v)| (i as i64 - c, v))
    }

    pub fn to_convention(&self, target: Convention) -> Spectrum {
        if target == self.convention {
            return self.clone();
        }
        let to_raw = target == Convention::Raw;
        Self::from_fn(target, self.cutoff(), |j| match (j, to_raw) {
            (0, true) => self.get(0) / TAU,
            (0, false) => self.get(0) * TAU,
            (_, true) => self.get(-j) / PI,
            (_, false) => self.get(-j) * PI,
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `max_j |c_{−j} − conj(c_j)|`; zero for spectra of real functions.
    pub fn conjugate_symmetry_defect(&self) -> f64 {
        let c = self.cutoff() as i64;
        (0..=c)
            .map(|j| (self.get(-j) - self.get(j).conj()).norm())
            .fold(0.0, f64::max)
    }

    /// Truncated Fourier series at `theta`.
    pub fn reconstruct(&self, theta: f64) -> f64 {
        let m = self.to_convention(Convention::Multiplier);
        m.iter()
            .map(|(j, c)| (c * Complex::from_polar(1.0, j as f64 * theta)).re)
            .sum::<f64>()
            / TAU
    }
}

/// Spectrum of the support function of a planar body.
///
/// Polygons use a closed form: on the normal cone of each vertex `v` the
/// support function is `Re(v̄ e^{iφ})`, integrated exactly arc by arc.
/// Sampled bodies use the DFT `c_j ≈ (2π/n) ∑_k h_k e^{−ijφ_k}`, whose error
/// is bounded by the aliased tail `2π ∑_{m≠0} |ĥ_{j+mn}|`; `n ≥ 4J` is
/// required.
pub fn fourier_support(body: &PlanarBody, cutoff: usize, convention: Convention) -> Result<Spectrum> {
    let mult = match body {
        PlanarBody::Polygon(p) => polygon_spectrum(p, cutoff),
        PlanarBody::Sampled(s) => sampled_spectrum(s, cutoff)?,
    };
    Ok(mult.to_convention(convention))
}

fn polygon_spectrum(p: &Polygon2, cutoff: usize) -> Spectrum {
    // ∫_a^b e^{−imφ} dφ
    let arc = |m: i64, a: f64, b: f64| -> Complex {
        if m == 0 {
            Complex::new(b - a, 0.0)
        } else {
            let mf = m as f64;
            (Complex::from_polar(1.0, -mf * b) - Complex::from_polar(1.0, -mf * a))
                * Complex::new(0.0, 1.0 / mf)
        }
    };
    let verts = p.vertices();
    let n = verts.len();
    let cones: Vec<(f64, f64)> = if n == 1 {
        vec![(0.0, TAU)]
    } else {
        let normals = p.edge_normal_angles();
        (0..n)
            .map(|i| {
                let a = normals[(i + n - 1) % n];
                let mut b = normals[i];
                if b <= a {
                    b += TAU;
                }
                (a, b)
            })
            .collect()
    };
    Spectrum::from_fn(Convention::Multiplier, cutoff, |j| {
        let mut acc = Complex::new(0.0, 0.0);
        for (v, &(a, b)) in verts.iter().zip(&cones) {
            let z = Complex::new(v.x, v.y);
            acc += z * arc(j + 1, a, b) + z.conj() * arc(j - 1, a, b);
        }
        acc * 0.5
    })
}

fn sampled_spectrum(s: &SampledSupport2, cutoff: usize) -> Result<Spectrum> {
    let n = s.n();
    if n < 4 * cutoff {
        return Err(Error::Resolution(format!(
            "grid of {n} samples cannot resolve cutoff {cutoff} (need n >= 4J)"
        )));
    }
    let dft = s.dft();
    Ok(Spectrum::from_fn(Convention::Multiplier, cutoff, |j| {
        dft[j.rem_euclid(n as i64) as usize] * TAU
    }))
}

/// Spectrum of a discrete measure, an exact finite sum over atoms.
pub fn fourier_measure(mu: &AtomicMeasure1, cutoff: usize, convention: Convention) -> Spectrum {
    Spectrum::from_fn(Convention::Multiplier, cutoff, |j| {
        mu.atoms()
            .iter()
            .map(|&(t, w)| Complex::from_polar(w, -(j as f64) * t))
            .sum()
    })
    .to_convention(convention)
}
