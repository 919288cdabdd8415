//! A Reuleaux triangle of width 1 under a centrally symmetric `C` with
//! perimeter 1 becomes the disc of radius 1/2.

use dcbody::diffbody::dc_planar_sampled;
use dcbody::planar::{Polygon2, SampledSupport2};
use dcbody::verify::classify_m1;

fn main() {
    let r = SampledSupport2::reuleaux_triangle(1024).unwrap();
    println!("Reuleaux width: {:.6} .. {:.6}", min_width(&r), max_width(&r));
    for c in [Polygon2::regular(4, 0.25, 0.0).unwrap(), Polygon2::regular(8, 0.125, 0.0).unwrap()] {
        let d = dc_planar_sampled(&c.clone().into(), &r).unwrap();
        let (lo, hi) = d.values().iter().fold((f64::INFINITY, 0.0f64), |(a, b), &h| (a.min(h), b.max(h)));
        let cl = classify_m1(&c, &r.clone().into(), 16, 1e-6).unwrap();
        println!("{}-gon: h between {lo:.6} and {hi:.6}, ball = {}", c.len(), cl.observed.ball);
    }
}

fn min_width(s: &SampledSupport2) -> f64 {
    (0..s.n()).map(|k| s.width(s.angle(k))).fold(f64::INFINITY, f64::min)
}

fn max_width(s: &SampledSupport2) -> f64 {
    (0..s.n()).map(|k| s.width(s.angle(k))).fold(0.0, f64::max)
}
