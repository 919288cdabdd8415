//! Planar convex bodies: exact polygons, sampled support functions, surface
//! area measures, Fourier spectra and scalar functionals.

mod fourier;
mod measure;
mod polygon;
mod sampled;
mod scalars;

use std::f64::consts::TAU;

use crate::Result;

pub use fourier::{fourier_measure, fourier_support, Convention, Spectrum};
pub use measure::{area_measure, AtomicMeasure1};
pub use polygon::Polygon2;
pub use sampled::SampledSupport2;
pub use scalars::{scalars, Scalars};

pub type Point2 = nalgebra::Vector2<f64>;

/// Relative turn below which consecutive edges count as collinear, and the
/// angular tolerance for merging measure atoms.
pub const COLLINEAR_TOL: f64 = 1e-9;

/// Reduces an angle into `[0, 2π)`.
pub fn normalize_angle(t: f64) -> f64 {
    let r = t.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r + 0.0
    }
}

/// Polar angle of `v` in `[0, 2π)`.
pub fn angle_of(v: Point2) -> f64 {
    normalize_angle(v.y.atan2(v.x))
}

pub fn unit(theta: f64) -> Point2 {
    Point2::new(theta.cos(), theta.sin())
}

/// Either planar representation, for operations that accept both.
#[derive(Debug, Clone, PartialEq)]
pub enum PlanarBody {
    Polygon(Polygon2),
    Sampled(SampledSupport2),
}

impl From<Polygon2> for PlanarBody {
    fn from(p: Polygon2) -> Self {
        PlanarBody::Polygon(p)
    }
}

impl From<SampledSupport2> for PlanarBody {
    fn from(s: SampledSupport2) -> Self {
        PlanarBody::Sampled(s)
    }
}

impl PlanarBody {
    pub fn support(&self, theta: f64) -> f64 {
        match self {
            PlanarBody::Polygon(p) => p.support(theta),
            PlanarBody::Sampled(s) => s.support(theta),
        }
    }

    pub fn width(&self, theta: f64) -> f64 {
        self.support(theta) + self.support(theta + std::f64::consts::PI)
    }
}

/// `∫ h_K dS(C,·)`, which equals `area(K + C) − area(K) − area(C)`.
///
/// For polygonal `C` this is the exact atom sum `∑ s_i h_K(θ_i)`. For sampled
/// `C` the pairing is taken spectrally, `2π ∑_j (1 − j²) ĥ_C(j) conj(ĥ_K(j))`,
/// with `K` sampled on the grid of `C`.
pub fn mixed_area_integral(k: &PlanarBody, c: &PlanarBody) -> Result<f64> {
    match c {
        PlanarBody::Polygon(c) => Ok(area_measure(c)
            .atoms()
            .iter()
            .map(|&(t, w)| w * k.support(t))
            .sum()),
        PlanarBody::Sampled(c) => {
            let ks = match k {
                PlanarBody::Sampled(s) if s.n() == c.n() => s.clone(),
                _ => SampledSupport2::new_unchecked(
                    (0..c.n()).map(|i| k.support(c.angle(i))).collect(),
                )?,
            };
            c.spectral_pairing(&ks)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_normalization() {
        assert_eq!(angle_of(Point2::new(-1.0, -0.0)), std::f64::consts::PI);
        assert_eq!(angle_of(Point2::new(1.0, -0.0)), 0.0);
        assert!(normalize_angle(-1e-300) < TAU);
        assert!((normalize_angle(-std::f64::consts::FRAC_PI_2) - 1.5 * std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn mixed_area_examples() {
        let sq = Polygon2::unit_square();
        let k: PlanarBody = sq.into();
        // area(K + C) − area(K) − area(C) = 4 − 1 − 1
        assert!((mixed_area_integral(&k, &k).unwrap() - 2.0).abs() < 1e-12);
        let pt: PlanarBody = Polygon2::point(Point2::zeros()).into();
        assert_eq!(mixed_area_integral(&pt, &k).unwrap(), 0.0);
        let disc: PlanarBody = SampledSupport2::disc(1024, 1.0, Point2::zeros()).unwrap().into();
        assert!((mixed_area_integral(&disc, &disc).unwrap() - TAU).abs() < 1e-6);
    }
}
