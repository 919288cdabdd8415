//! SVG figures of planar bodies and of complex-line projections.

use std::f64::consts::TAU;
use std::fmt::Write;

use crate::complexspace::{complex_scale_vec, norm, project_to_complex_line, CmBody, Support};
use crate::diffbody::body_from_measure;
use crate::io::Body;
use crate::planar::{Point2, Polygon2, SampledSupport2};
use crate::{Complex, Error, Result};

/// Directions used when a body is only known through its support function.
const OUTLINE_SAMPLES: usize = 1024;

/// Outline of `h` sampled at `OUTLINE_SAMPLES` angles, as the polygon cut
/// out by the sampled half-planes.
fn outline_from_support(h: impl Fn(f64) -> f64) -> Result<Polygon2> {
    let values = (0..OUTLINE_SAMPLES).map(|k| h(TAU * k as f64 / OUTLINE_SAMPLES as f64)).collect();
    Ok(SampledSupport2::new_unchecked(values)?.grid_polygon())
}

/// Support of the projection of `b` onto the complex line of `xi`, in the
/// direction `e^{iφ}` of that line.
fn projected_support<'a, B: Support>(b: &'a B, xi: &[f64]) -> impl Fn(f64) -> f64 + 'a {
    let xi = xi.to_vec();
    move |phi| b.support(&complex_scale_vec(&xi, Complex::from_polar(1.0, -phi)))
}

fn unit_direction(xi: &[f64], dim: usize) -> Result<Vec<f64>> {
    if xi.len() != dim {
        return Err(Error::InvalidInput(format!("projection direction needs {dim} coordinates, got {}", xi.len())));
    }
    let n = norm(xi);
    if n < 1e-12 {
        return Err(Error::InvalidInput("projection direction is zero".into()));
    }
    Ok(xi.iter().map(|x| x / n).collect())
}

/// The planar outline drawn for `body`. Bodies in `ℂ²` need a projection
/// direction; in `ℂ¹` the body is drawn as is unless one is given.
pub fn outline(body: &Body, project: Option<&[f64]>) -> Result<Polygon2> {
    let plane = |b: &dyn Fn(&[f64]) -> f64| outline_from_support(|t| b(&[t.cos(), t.sin()]));
    match (body, project) {
        (Body::Polygon(p), None) => Ok(p.clone()),
        (Body::Sampled(s), None) => Ok(s.grid_polygon()),
        (Body::Measure(mu), None) => body_from_measure(mu),
        (Body::Polygon(_) | Body::Sampled(_) | Body::Measure(_), Some(_)) => {
            Err(Error::InvalidInput("projection applies to bodies in C^m only".into()))
        }
        (Body::Cm(b), xi) => match (b, xi) {
            (CmBody::Polytope(p), Some(xi)) => project_to_complex_line(p, &unit_direction(xi, p.dim())?),
            (CmBody::Polytope(p), None) if p.m() == 1 => {
                Polygon2::from_points(&p.vertices().map(|v| Point2::new(v[0], v[1])).collect::<Vec<_>>())
            }
            (_, Some(xi)) => outline_from_support(projected_support(b, &unit_direction(xi, b.dim())?)),
            (_, None) if b.m() == 1 => plane(&|u| b.support(u)),
            _ => Err(Error::InvalidInput("bodies in C^2 need --project".into())),
        },
        (Body::Oracle(o), Some(xi)) => outline_from_support(projected_support(o, &unit_direction(xi, o.dim())?)),
        (Body::Oracle(o), None) if o.m() == 1 => plane(&|u| o.support(u)),
        (Body::Oracle(_), None) => Err(Error::InvalidInput("bodies in C^2 need --project".into())),
    }
}

/// A standalone SVG document showing `polys` with the origin marked. The
/// y axis points up.
pub fn polygons_svg(polys: &[Polygon2]) -> String {
    let pts = polys.iter().flat_map(|p| p.vertices().iter().copied()).chain([Point2::new(0.0, 0.0)]);
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in pts {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(p.y);
        y1 = y1.max(p.y);
    }
    let pad = 0.05 * (x1 - x0).max(y1 - y0).max(1e-9);
    let (w, h) = (x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad);
    let stroke = 0.004 * w.max(h);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="480" height="{:.0}" viewBox="{} {} {} {}">"#,
        480.0 * h / w,
        x0 - pad,
        -(y1 + pad),
        w,
        h
    )
    .unwrap();
    let palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];
    for (i, p) in polys.iter().enumerate() {
        let d: Vec<String> = p.vertices().iter().map(|v| format!("{:.6},{:.6}", v.x, -v.y)).collect();
        writeln!(
            out,
            r#"  <polygon points="{}" fill="{}" fill-opacity="0.15" stroke="{}" stroke-width="{stroke:.6}"/>"#,
            d.join(" "),
            palette[i % palette.len()],
            palette[i % palette.len()],
        )
        .unwrap();
    }
    writeln!(out, r#"  <circle cx="0" cy="0" r="{:.6}" fill="black"/>"#, 2.0 * stroke).unwrap();
    out.push_str("</svg>\n");
    out
}

pub fn render_body(body: &Body, project: Option<&[f64]>) -> Result<String> {
    Ok(polygons_svg(&[outline(body, project)?]))
}
