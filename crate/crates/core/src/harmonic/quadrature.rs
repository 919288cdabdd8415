use std::f64::consts::{PI, TAU};

use crate::{Complex, Error, Result};

use super::disk::{hermitian, DiskPolynomial};

/// Gauss–Legendre nodes and weights on `[−1, 1]`, by Newton iteration on the
/// three-term recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut t = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, t);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * t * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (t * p1 - p0) / (t * t - 1.0);
            let dt = p1 / dp;
            t -= dt;
            if dt.abs() < 1e-16 {
                break;
            }
        }
        let wi = 2.0 / ((1.0 - t * t) * dp * dp);
        x[i] = -t;
        x[n - 1 - i] = t;
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// Product rule on `S³ ⊂ ℂ²` through `v = (z, √(1−|z|²) e^{iξ})`,
/// `z = r e^{iθ}`, where `dσ = r dr dθ dξ`: Gauss–Legendre in `r`, uniform in
/// `θ` and `ξ`. Exact for polynomials of low degree.
#[derive(Debug, Clone)]
pub struct S3Quadrature {
    nodes: Vec<[f64; 4]>,
    weights: Vec<f64>,
    sizes: (usize, usize, usize),
}

pub fn s3_quadrature(n_r: usize, n_theta: usize, n_xi: usize) -> Result<S3Quadrature> {
    if n_r < 8 || n_theta < 8 || n_xi < 8 {
        return Err(Error::InvalidInput("quadrature sizes must be at least 8".into()));
    }
    let (x, w) = gauss_legendre(n_r);
    let mut nodes = Vec::with_capacity(n_r * n_theta * n_xi);
    let mut weights = Vec::with_capacity(n_r * n_theta * n_xi);
    let (dt, dx) = (TAU / n_theta as f64, TAU / n_xi as f64);
    for (xi, wi) in x.iter().zip(&w) {
        let r = 0.5 * (xi + 1.0);
        let s = (1.0 - r * r).sqrt();
        let wr = 0.5 * wi * r * dt * dx;
        for a in 0..n_theta {
            let (st, ct) = (a as f64 * dt).sin_cos();
            for b in 0..n_xi {
                let (sx, cx) = (b as f64 * dx).sin_cos();
                nodes.push([r * ct, r * st, s * cx, s * sx]);
                weights.push(wr);
            }
        }
    }
    Ok(S3Quadrature { nodes, weights, sizes: (n_r, n_theta, n_xi) })
}

impl S3Quadrature {
    /// `(48, 64, 64)`.
    pub fn standard() -> Self {
        s3_quadrature(48, 64, 64).expect("valid sizes")
    }

    pub fn nodes(&self) -> &[[f64; 4]] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn sizes(&self) -> (usize, usize, usize) {
        self.sizes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: Fn(&[f64; 4]) -> Complex>(&self, f: F) -> Complex {
        self.nodes.iter().zip(&self.weights).map(|(v, w)| f(v) * *w).sum()
    }

    /// `f` evaluated at every node, for repeated kernel projections.
    pub fn sample<F: Fn(&[f64]) -> f64>(&self, f: F) -> Vec<f64> {
        self.nodes.iter().map(|v| f(v)).collect()
    }
}

/// `G_{k,l}[f](u) = ∫ P_{k,l}((u, v)) f(v) dσ(v)`. As a function of `u` this
/// lies in `H_{k,l}`; it is `π_{k,l}(f)(u)` up to a constant depending only
/// on `(k, l)`.
pub fn kernel_component<F: Fn(&[f64]) -> f64>(
    f: F,
    k: usize,
    l: usize,
    u: &[f64],
    quad: &S3Quadrature,
) -> Result<Complex> {
    kernel_component_sampled(&quad.sample(f), k, l, u, quad)
}

/// [`kernel_component`] with `f` already sampled at the quadrature nodes.
pub fn kernel_component_sampled(
    values: &[f64],
    k: usize,
    l: usize,
    u: &[f64],
    quad: &S3Quadrature,
) -> Result<Complex> {
    if values.len() != quad.len() || u.len() != 4 {
        return Err(Error::InvalidInput("sample count or direction dimension mismatch".into()));
    }
    let p = DiskPolynomial::m2(k, l)?;
    Ok(quad
        .nodes
        .iter()
        .zip(&quad.weights)
        .zip(values)
        .map(|((v, w), f)| p.eval(hermitian(u, v)) * (w * f))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonic::disk::pole_coordinate;

    #[test]
    fn legendre_rule_is_exact() {
        let (x, w) = gauss_legendre(10);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        let m18: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(18)).sum();
        assert!((m18 - 2.0 / 19.0).abs() < 1e-14);
        let (x, _) = gauss_legendre(5);
        assert!(x[2].abs() < 1e-15);
    }

    #[test]
    fn sphere_mass_and_moments() {
        let q = s3_quadrature(16, 16, 16).unwrap();
        let mass = q.integrate(|_| Complex::new(1.0, 0.0));
        assert!((mass.re - 2.0 * PI * PI).abs() < 1e-10);
        let m2 = q.integrate(|v| Complex::new(pole_coordinate(v).norm_sqr(), 0.0));
        assert!((m2.re / mass.re - 0.5).abs() < 1e-12);
        assert!(s3_quadrature(4, 16, 16).is_err());
    }

    #[test]
    fn kernels_annihilate_constants_and_balls() {
        let q = s3_quadrature(16, 32, 32).unwrap();
        let u = [0.5, -0.5, 0.5, 0.5];
        for (k, l) in [(1, 0), (0, 1), (2, 1), (2, 2)] {
            let g = kernel_component(|_| 1.0, k, l, &u, &q).unwrap();
            assert!(g.norm() < 1e-10, "{k} {l} {g}");
        }
    }
}
