use std::f64::consts::{PI, TAU};

use crate::complexspace::{direction_net, dot, CmBody, Support};
use crate::diffbody::{dc_planar, dc_polytope};
use crate::harmonic::{multiplier, S3Quadrature};
use crate::planar::{area_measure, unit, PlanarBody, Polygon2};
use crate::Result;

/// `sup_u |h(D_C K, u) − l(C) h(K − s(K), u)|`. Polygons are compared
/// exactly through the Hausdorff distance; sampled bodies on a 1024-point
/// direction grid with `h_D(θ) = ∑_i s_i h_K(θ − θ_i)`.
pub fn fixed_point_check_m1(c: &Polygon2, k: &PlanarBody) -> Result<f64> {
    let l = c.perimeter();
    match k {
        PlanarBody::Polygon(p) => {
            let centred = p.translate(-p.steiner_point()).scale(l);
            Ok(dc_planar(c, p).hausdorff(&centred))
        }
        PlanarBody::Sampled(s) => {
            let st = s.steiner_point();
            let mu = area_measure(c);
            let n = 1024;
            Ok((0..n)
                .map(|i| {
                    let t = TAU * i as f64 / n as f64;
                    let hd: f64 = mu.atoms().iter().map(|&(a, w)| w * s.support(t - a)).sum();
                    (hd - l * (s.support(t) - st.dot(&unit(t)))).abs()
                })
                .fold(0.0, f64::max))
        }
    }
}

/// Steiner point `(4/σ₃) ∫ h(u) u dσ(u)` by quadrature; exact for centrally
/// symmetric bodies on the standard rule.
pub fn steiner_point_cm(b: &impl Support, quad: &S3Quadrature) -> Vec<f64> {
    let mut s = [0.0; 4];
    for (v, w) in quad.nodes().iter().zip(quad.weights()) {
        let h = b.support(v);
        for (si, vi) in s.iter_mut().zip(v) {
            *si += w * h * vi;
        }
    }
    let scale = 4.0 / (2.0 * PI * PI);
    s.iter().map(|x| x * scale).collect()
}

/// `ℂ²` analogue of [`fixed_point_check_m1`] over a 512-direction net.
pub fn fixed_point_check_m2(c: &Polygon2, k: &CmBody, quad: &S3Quadrature) -> f64 {
    let l = c.perimeter();
    let d = dc_polytope(c, k);
    let st = steiner_point_cm(k, quad);
    direction_net(4, 512, 0xf1)
        .iter()
        .map(|u| (d.support(u) - l * (k.support(u) - dot(&st, u))).abs())
        .fold(0.0, f64::max)
}

/// Hausdorff distance between `D_C^N K` and `l(C)^{N−1} D_C K`.
pub fn iterate_check(c: &Polygon2, k: &Polygon2, n: usize) -> f64 {
    assert!((1..=5).contains(&n), "iteration count must be in 1..=5");
    let once = dc_planar(c, k);
    let mut it = once.clone();
    for _ in 1..n {
        it = dc_planar(c, &it);
    }
    it.hausdorff(&once.scale(c.perimeter().powi(n as i32 - 1)))
}

/// The multiplier condition for `D_C^N = l(C)^{N−1} D_C`, tested for
/// `|j| ≤ cutoff`: each `λ_j` is zero or satisfies `λ_j^{N−1} = l^{N−1}`,
/// relative to `eps · l^{N−1}`.
pub fn iteration_condition(c: &Polygon2, n: usize, cutoff: usize, eps: f64) -> bool {
    let mu = area_measure(c);
    let l = mu.total_mass();
    let target = l.powi(n as i32 - 1);
    (0..=cutoff as i64).all(|j| {
        let lam = multiplier(&mu, j);
        lam.norm() <= eps * l || (lam.powu(n as u32 - 1) - target).norm() <= eps * target
    })
}
