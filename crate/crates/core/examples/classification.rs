//! Shape classes of `D_C K` predicted from spectra and read off the body, in
//! the plane and in `ℂ²`.

use dcbody::complexspace::PolytopeCm;
use dcbody::planar::{Point2, Polygon2, SampledSupport2};
use dcbody::verify::{classify_m1, classify_m2, Classification, KernelProbe};

fn show(label: &str, cl: &Classification) {
    let f = cl.observed;
    println!(
        "{label:28} agree={} ball={} cw={} sym={} s1={} universal={}",
        cl.agree(),
        f.ball,
        f.constant_width,
        f.symmetric,
        f.s1_invariant,
        f.universal
    );
}

fn main() {
    let sq = Polygon2::unit_square();
    let tri = Polygon2::from_points(&[Point2::new(0.0, 0.0), Point2::new(0.9, 0.1), Point2::new(0.2, 0.6)]).unwrap();
    let disc_c = Polygon2::regular(64, 0.05, 0.0).unwrap();
    let reuleaux = SampledSupport2::reuleaux_triangle(1024).unwrap();
    show("square, square", &classify_m1(&sq, &sq.clone().into(), 16, 1e-6).unwrap());
    show("triangle, triangle", &classify_m1(&tri, &tri.clone().into(), 16, 1e-6).unwrap());
    show("square, Reuleaux", &classify_m1(&sq, &reuleaux.into(), 16, 1e-6).unwrap());
    show("64-gon, triangle", &classify_m1(&disc_c, &tri.into(), 16, 1e-6).unwrap());

    let probe = KernelProbe::standard(7).unwrap();
    let cube = PolytopeCm::cube(2).unwrap().into();
    show("C^2: square, cube", &classify_m2(&sq, &cube, &probe, 1e-6).unwrap());
    show("C^2: 64-gon, cube", &classify_m2(&disc_c, &cube, &probe, 1e-6).unwrap());
}
