use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complexspace::{random_unit, CmBody, Support};
use crate::diffbody::{dc_planar, dc_planar_sampled, dc_polytope};
use crate::harmonic::{kernel_component_sampled, multiplier, s3_quadrature, S3Quadrature};
use crate::planar::{area_measure, fourier_support, Convention, PlanarBody, Polygon2};
use crate::{Complex, Result};

/// Shape classes of `D_C K`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub ball: bool,
    pub constant_width: bool,
    pub symmetric: bool,
    pub s1_invariant: bool,
    pub universal: bool,
}

/// Flags predicted from the spectra of `C` and `K` next to the flags read
/// off the constructed `D_C K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub predicted: Flags,
    pub observed: Flags,
}

impl Classification {
    pub fn agree(&self) -> bool {
        self.predicted == self.observed
    }
}

/// Reads the flags off a table of vanishing `(k, l)` components.
fn flags(zero: &[((usize, usize), bool)]) -> Flags {
    let all = |pred: &dyn Fn(usize, usize) -> bool| zero.iter().filter(|((k, l), _)| pred(*k, *l)).all(|(_, z)| *z);
    Flags {
        ball: all(&|k, l| k + l > 0),
        constant_width: all(&|k, l| k + l >= 2 && (k + l) % 2 == 0),
        symmetric: all(&|k, l| (k + l) % 2 == 1),
        s1_invariant: all(&|k, l| k != l),
        universal: zero.iter().filter(|((k, l), _)| k.abs_diff(*l) != 1).all(|(_, z)| !*z),
    }
}

/// `j ≥ 0 ↦ (j, 0)`, `j < 0 ↦ (0, −j)`: the planar bi-degrees.
fn planar_index(j: i64) -> (usize, usize) {
    if j >= 0 {
        (j as usize, 0)
    } else {
        (0, (-j) as usize)
    }
}

fn is_zero(x: f64, scale: f64, eps: f64) -> bool {
    x <= eps * scale
}

/// Planar classification up to `|j| ≤ cutoff`. Predicted: the `j`-th
/// component of `h_{D_C K}` vanishes when `λ_j = (1 − j²) c_j(h_C)` or
/// `c_j(h_K)` does; the test is `|λ_j c_j(h_K)| ≤ eps · max|λ| · max|c(h_K)|`,
/// so two small but nonzero factors count as a zero product. Observed:
/// the same test on the spectrum of the constructed `D_C K`. Sampled `K`
/// needs `C` on its grid.
pub fn classify_m1(c: &Polygon2, k: &PlanarBody, cutoff: usize, eps: f64) -> Result<Classification> {
    let hc = fourier_support(&c.clone().into(), cutoff, Convention::Multiplier)?;
    let hk = fourier_support(k, cutoff, Convention::Multiplier)?;
    let d: PlanarBody = match k {
        PlanarBody::Polygon(p) => dc_planar(c, p).into(),
        PlanarBody::Sampled(s) => dc_planar_sampled(&c.clone().into(), s)?.into(),
    };
    let hd = fourier_support(&d, cutoff, Convention::Multiplier)?;
    let j = cutoff as i64;
    let lam: Vec<Complex> = (-j..=j).map(|i| hc.get(i) * (1.0 - (i * i) as f64)).collect();
    let lam_max = lam.iter().map(|x| x.norm()).fold(0.0, f64::max);
    let (k_max, d_max) = (hk.max_abs(), hd.max_abs());
    let mut pred = Vec::new();
    let mut obs = Vec::new();
    for (idx, i) in (-j..=j).enumerate() {
        let key = planar_index(i);
        pred.push((key, is_zero(lam[idx].norm() * hk.get(i).norm(), lam_max * k_max, eps)));
        obs.push((key, is_zero(hd.get(i).norm(), d_max, eps)));
    }
    Ok(Classification { predicted: flags(&pred), observed: flags(&obs) })
}

/// Probe set for the `ℂ²` kernel route: a quadrature rule, the directions
/// `u` at which `G_{k,l}` is evaluated, and the largest degree `k + l`.
#[derive(Debug, Clone)]
pub struct KernelProbe {
    pub quad: S3Quadrature,
    pub directions: Vec<Vec<f64>>,
    pub max_degree: usize,
}

impl KernelProbe {
    /// `(16, 64, 64)` quadrature, three seeded random directions, degrees
    /// `k + l ≤ 6`.
    pub fn standard(seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9b);
        Ok(KernelProbe {
            quad: s3_quadrature(16, 64, 64)?,
            directions: (0..3).map(|_| random_unit(&mut rng, 4)).collect(),
            max_degree: 6,
        })
    }

    /// `G_{k,l}[f](u)` for every `k + l ≤ max_degree` and probe direction.
    fn components(&self, f: &impl Support) -> Result<Vec<((usize, usize), Vec<Complex>)>> {
        let values = self.quad.sample(|v| f.support(v));
        let mut out = Vec::new();
        for deg in 0..=self.max_degree {
            for k in 0..=deg {
                let l = deg - k;
                let g = self
                    .directions
                    .iter()
                    .map(|u| kernel_component_sampled(&values, k, l, u, &self.quad))
                    .collect::<Result<Vec<_>>>()?;
                out.push(((k, l), g));
            }
        }
        Ok(out)
    }
}

fn largest(comps: &[((usize, usize), Vec<Complex>)]) -> f64 {
    comps.iter().flat_map(|(_, g)| g.iter().map(|z| z.norm())).fold(0.0, f64::max)
}

/// `ℂ²` classification through kernel components. Predicted: `(k, l)`
/// vanishes when the product `|λ_{k−l}| · max_u |G_{k,l}[h_K](u)|` is
/// negligible against `max|λ| · max|G[h_K]|`.
/// Observed: every `G_{k,l}[h_{D_C K}](u)` is negligible. Tolerances are
/// `eps` relative to the largest value of the same family.
pub fn classify_m2(c: &Polygon2, k: &CmBody, probe: &KernelProbe, eps: f64) -> Result<Classification> {
    let mu = area_measure(c);
    let d = dc_polytope(c, k);
    let gk = probe.components(k)?;
    let gd = probe.components(&d)?;
    let deg = probe.max_degree as i64;
    let lam_max = (-deg..=deg).map(|j| multiplier(&mu, j).norm()).fold(0.0, f64::max);
    let (k_max, d_max) = (largest(&gk), largest(&gd));
    let mut pred = Vec::new();
    let mut obs = Vec::new();
    for (((kk, ll), g_k), (_, g_d)) in gk.iter().zip(&gd) {
        let lam = multiplier(&mu, *kk as i64 - *ll as i64).norm();
        let g_max = g_k.iter().map(|z| z.norm()).fold(0.0, f64::max);
        pred.push(((*kk, *ll), is_zero(lam * g_max, lam_max * k_max, eps)));
        obs.push(((*kk, *ll), g_d.iter().all(|z| is_zero(z.norm(), d_max, eps))));
    }
    Ok(Classification { predicted: flags(&pred), observed: flags(&obs) })
}
