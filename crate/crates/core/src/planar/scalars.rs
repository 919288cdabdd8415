use crate::enclosing::min_enclosing_ball;
use crate::lp::{Cmp, LinearProgram, LpOutcome, Sense};
use crate::Result;

use super::{fourier_support, unit, Convention, PlanarBody, Point2, Polygon2};

/// Scalar functionals of a planar convex body.
#[derive(Debug, Clone, PartialEq)]
pub struct Scalars {
    pub area: f64,
    pub perimeter: f64,
    pub min_width: f64,
    pub diameter: f64,
    pub inradius: f64,
    pub incenter: Point2,
    pub circumradius: f64,
    pub circumcenter: Point2,
    pub steiner_point: Point2,
    pub centroid: Point2,
}

/// Computes all scalar functionals. Polygons are exact; sampled bodies use
/// grid directions and the circumscribed grid polygon.
pub fn scalars(body: &PlanarBody) -> Result<Scalars> {
    let (poly, normals, area, perimeter, min_width, diameter) = match body {
        PlanarBody::Polygon(p) => (
            p.clone(),
            p.edge_normal_angles(),
            p.area(),
            p.perimeter(),
            p.min_width(),
            p.diameter(),
        ),
        PlanarBody::Sampled(s) => {
            let n = s.n();
            let h = s.values();
            let widths: Vec<f64> = (0..n / 2).map(|k| h[k] + h[k + n / 2]).collect();
            (
                s.grid_polygon(),
                (0..n).map(|k| s.angle(k)).collect(),
                s.area(),
                s.perimeter(),
                widths.iter().copied().fold(f64::INFINITY, f64::min),
                widths.iter().copied().fold(0.0, f64::max),
            )
        }
    };
    let (inradius, incenter) = inscribed_circle(body, &poly, &normals)?;
    let flat: Vec<f64> = poly.vertices().iter().flat_map(|v| [v.x, v.y]).collect();
    let mec = min_enclosing_ball(&flat, 2);
    let spectrum = fourier_support(body, 1, Convention::Multiplier)?;
    let s = spectrum.get(-1) / std::f64::consts::PI;
    Ok(Scalars {
        area,
        perimeter,
        min_width,
        diameter,
        inradius,
        incenter,
        circumradius: mec.radius,
        circumcenter: Point2::new(mec.center[0], mec.center[1]),
        steiner_point: Point2::new(s.re, s.im),
        centroid: poly.centroid(),
    })
}

/// Largest disc inside the half-planes `⟨x, u⟩ ≤ h(u)` over `normals`.
fn inscribed_circle(body: &PlanarBody, poly: &Polygon2, normals: &[f64]) -> Result<(f64, Point2)> {
    if poly.len() < 3 {
        return Ok((0.0, poly.centroid()));
    }
    let mut lp = LinearProgram::new(Sense::Maximize);
    let x = lp.free_var(0.0);
    let y = lp.free_var(0.0);
    let r = lp.var(1.0, 0.0, f64::INFINITY);
    for &t in normals {
        let u = unit(t);
        lp.constraint(vec![(x, u.x), (y, u.y), (r, 1.0)], Cmp::Le, body.support(t));
    }
    match lp.solve()? {
        LpOutcome::Optimal { x: sol, .. } => Ok((sol[r], Point2::new(sol[x], sol[y]))),
        _ => Ok((0.0, poly.centroid())),
    }
}
