use std::f64::consts::PI;

use crate::complexspace::{
    circumradius_of_points, diameter, direction_net, monte_carlo_volume, vertex_sum_candidates, CmBody,
    CompiledBody, Support, SupportOracleCm,
};
use crate::diffbody::{dc_planar, dc_planar_sampled, dc_polytope};
use crate::lp::{Cmp, LinearProgram, LpOutcome, Sense};
use crate::planar::{area_measure, scalars, unit, PlanarBody, Point2, Polygon2};
use crate::Result;

use super::{CertifiedBody, Check, Report};

const TOL: f64 = 1e-9;

fn area(b: &PlanarBody) -> f64 {
    match b {
        PlanarBody::Polygon(p) => p.area(),
        PlanarBody::Sampled(s) => s.area(),
    }
}

fn perimeter(b: &PlanarBody) -> f64 {
    match b {
        PlanarBody::Polygon(p) => p.perimeter(),
        PlanarBody::Sampled(s) => s.perimeter(),
    }
}

/// `s = ∑_{i=1}^N 2^{i/2}` for an `N`-edge `C`.
pub(crate) fn diameter_constant(c: &Polygon2) -> f64 {
    (1..=area_measure(c).len()).map(|i| 2f64.powf(i as f64 / 2.0)).sum()
}

/// `W_0(D_C K) ≥ l(C)² W_0(K)` (area) and `W_1(D_C K) = l(C) W_1(K)`
/// (half perimeter, an equality). Sampled `K` needs `C` on its grid.
pub fn quermass_check_m1(c: &Polygon2, k: &PlanarBody) -> Result<Report> {
    let l = c.perimeter();
    let d: PlanarBody = match k {
        PlanarBody::Polygon(p) => dc_planar(c, p).into(),
        PlanarBody::Sampled(s) => dc_planar_sampled(&c.clone().into(), s)?.into(),
    };
    let mut r = Report::new("quermassintegrals");
    r.push(Check::at_least("area(D) >= l^2 area(K)", area(&d), l * l * area(k), TOL));
    r.push(Check::equal("W1(D) = l W1(K)", perimeter(&d) / 2.0, l * perimeter(k) / 2.0, TOL));
    Ok(r)
}

/// Planar width, diameter and circumradius chain for `D = D_C K`:
/// `l w(K) ≤ w(D, u) ≤ l d(K)`, `(l/s) d(K) ≤ d(D) ≤ l d(K)`,
/// `R(D) ≤ l R(K)` and `R(D) ≥ (l/2s)√3 R(K)`. The sharper lower bound
/// `(l/s)√3 R(K)` is reported but not enforced.
pub fn width_diameter_check_m1(c: &Polygon2, k: &Polygon2) -> Result<Report> {
    let l = c.perimeter();
    let s = diameter_constant(c);
    let d = dc_planar(c, k);
    let (wk, dk) = (k.min_width(), k.diameter());
    let rk = scalars(&k.clone().into())?.circumradius;
    let rd = scalars(&d.clone().into())?.circumradius;
    let mut r = Report::new("width and diameter");
    r.push(Check::at_least("min_u w(D,u) >= l w(K)", d.min_width(), l * wk, TOL));
    r.push(Check::at_most("max_u w(D,u) <= l d(K)", d.diameter(), l * dk, TOL));
    r.push(Check::at_least("d(D) >= (l/s) d(K)", d.diameter(), l / s * dk, TOL));
    r.push(Check::at_most("R(D) <= l R(K)", rd, l * rk, TOL));
    let jung = 3f64.sqrt();
    r.push(Check::at_least("R(D) >= (l/2s) sqrt(3) R(K)", rd, l / (2.0 * s) * jung * rk, TOL));
    r.push(Check::at_least("R(D) >= (l/s) sqrt(3) R(K) [displayed form]", rd, l / s * jung * rk, TOL).reported_only());
    if c.is_segment() {
        r.push(Check::equal("segment: min width equality", d.min_width(), l * wk, TOL));
        r.push(Check::equal("segment: diameter equality", d.diameter(), l * dk, TOL));
    }
    Ok(r)
}

/// Circumradius of an oracle body: minimum enclosing ball of the vertex-sum
/// candidates, or `l · r` when every term is the same centered ball.
fn oracle_circumradius(b: &SupportOracleCm) -> Option<f64> {
    if let Some(pts) = vertex_sum_candidates(b, 1 << 17) {
        return Some(circumradius_of_points(&pts, 2 * b.m()));
    }
    let mut r = 0.0;
    for t in b.terms() {
        match &t.base {
            CmBody::Ball { radius, center, .. } if center.iter().all(|&x| x == 0.0) => r += t.s * radius,
            _ => return None,
        }
    }
    Some(r)
}

/// The `ℂ²` width/diameter/circumradius chain over a direction net of
/// `net_size` directions, using the certified quantities of `K`.
pub fn width_diameter_check_m2(c: &Polygon2, k: &CertifiedBody, net_size: usize, seed: u64) -> Report {
    let l = c.perimeter();
    let s = diameter_constant(c);
    let d = dc_polytope(c, &k.body);
    let mut wmin = f64::INFINITY;
    let mut wmax: f64 = 0.0;
    for u in direction_net(4, net_size, seed) {
        let neg: Vec<f64> = u.iter().map(|x| -x).collect();
        let w = d.support(&u) + d.support(&neg);
        wmin = wmin.min(w);
        wmax = wmax.max(w);
    }
    let dd = diameter(&d);
    let mut r = Report::new(format!("width and diameter, {}", k.label));
    r.push(Check::at_least("min_net w(D,u) >= l w(K)", wmin, l * k.min_width, TOL));
    r.push(Check::at_most("max_net w(D,u) <= l d(K)", wmax, l * k.diameter, TOL));
    r.push(Check::at_most("d(D) <= l d(K)", dd, l * k.diameter, TOL));
    r.push(Check::at_least("d(D) >= (l/s) d(K)", dd, l / s * k.diameter, TOL));
    if let Some(rd) = oracle_circumradius(&d) {
        let jung = (5.0f64 / 2.0).sqrt();
        r.push(Check::at_most("R(D) <= l R(K)", rd, l * k.circumradius, TOL));
        r.push(Check::at_least("R(D) >= (l/2s) sqrt(5/2) R(K)", rd, l / (2.0 * s) * jung * k.circumradius, TOL));
        r.push(
            Check::at_least("R(D) >= (l/s) sqrt(5/2) R(K) [displayed form]", rd, l / s * jung * k.circumradius, TOL)
                .reported_only(),
        );
    }
    r
}

/// `V(K, D_C K) ≥ l(C) area(K)` with `V(K, L) = (area(K+L) − area K − area L)/2`.
pub fn mixed_volume_check_m1(c: &Polygon2, k: &Polygon2) -> Report {
    let d = dc_planar(c, k);
    let v = (k.minkowski_sum(&d).area() - k.area() - d.area()) / 2.0;
    let mut r = Report::new("mixed volume");
    r.push(Check::at_least("V(K, D) >= l area(K)", v, c.perimeter() * k.area(), TOL));
    r
}

/// `area(D_C(K+L))^{1/2} ≥ area(D_C K)^{1/2} + area(D_C L)^{1/2}`.
pub fn brunn_minkowski_check(c: &Polygon2, k: &Polygon2, l: &Polygon2) -> Report {
    let lhs = dc_planar(c, &k.minkowski_sum(l)).area().sqrt();
    let rhs = dc_planar(c, k).area().sqrt() + dc_planar(c, l).area().sqrt();
    let mut r = Report::new("Brunn-Minkowski");
    r.push(Check::at_least("sqrt area D(K+L) >= sqrt area DK + sqrt area DL", lhs, rhs, TOL));
    r
}

/// Outer normals whose half-planes cut out `d` exactly, including the
/// directions along a segment or around a point.
fn facet_normals(d: &Polygon2) -> Vec<Point2> {
    if d.is_point() {
        return (0..4).map(|k| unit(k as f64 * PI / 2.0)).collect();
    }
    let mut normals: Vec<Point2> = area_measure(d).atoms().iter().map(|&(t, _)| unit(t)).collect();
    if d.is_segment() {
        let e = d.vertices()[1] - d.vertices()[0];
        let e = e / e.norm();
        normals.push(e);
        normals.push(-e);
    }
    normals
}

/// A translation `t` with `λK + t ⊂ D`, from the feasibility program
/// `λ h_K(u_f) + ⟨t, u_f⟩ ≤ h_D(u_f)` over the facet normals of `D`.
pub fn containment_after_translation(lambda: f64, k: &Polygon2, d: &Polygon2) -> Result<Option<Point2>> {
    let mut lp = LinearProgram::new(Sense::Minimize);
    let tx = lp.free_var(0.0);
    let ty = lp.free_var(0.0);
    for u in facet_normals(d) {
        let rhs = d.support_dir(u) - lambda * k.support_dir(u);
        lp.constraint(vec![(tx, u.x), (ty, u.y)], Cmp::Le, rhs + 1e-12 * d.diameter().max(1.0));
    }
    Ok(match lp.solve()? {
        LpOutcome::Optimal { x, .. } => Some(Point2::new(x[tx], x[ty])),
        _ => None,
    })
}

/// Containment `λ K ⊂ D_C K` up to translation for `λ = l(C) r(K) / R(K)`.
pub fn containment_check(c: &Polygon2, k: &Polygon2) -> Result<Report> {
    let sk = scalars(&k.clone().into())?;
    let lambda = c.perimeter() * sk.inradius / sk.circumradius;
    let d = dc_planar(c, k);
    let t = containment_after_translation(lambda, k, &d)?;
    let mut r = Report::new("containment");
    r.push(Check::holds(format!("lambda K + t in D for lambda = {lambda:.6}"), t.is_some()));
    Ok(r)
}

/// Monte-Carlo volume of `D_C K` in `ℂ²` against `l⁴ vol(K) ≤ vol(D)` and
/// `vol(D) ≤ κ₄ R(K)⁴ l⁴`, each allowed a 3σ margin.
pub fn volume_check_m2(c: &Polygon2, k: &CertifiedBody, samples: usize, seed: u64) -> Result<Report> {
    let l = c.perimeter();
    let d = dc_polytope(c, &k.body);
    let est = monte_carlo_volume(&CompiledBody::from_oracle(&d), samples, seed)?;
    let lower = l.powi(4) * k.volume;
    let upper = PI * PI / 2.0 * (k.circumradius * l).powi(4);
    let mut r = Report::new(format!("volume, {}", k.label));
    r.push(Check::at_least("vol(D) + 3 sigma >= l^4 vol(K)", est.estimate + 3.0 * est.sigma, lower, 1e-12));
    r.push(Check::at_most("vol(D) - 3 sigma <= kappa_4 R(K)^4 l^4", est.estimate - 3.0 * est.sigma, upper, 1e-12));
    Ok(r)
}
