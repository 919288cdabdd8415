//! SVG of `D_C K` for a cube in `ℂ²`, projected onto a complex line.
//! Usage: `cargo run --example complex_projection > out.svg`

use dcbody::complexspace::PolytopeCm;
use dcbody::diffbody::dc_polytope;
use dcbody::io::Body;
use dcbody::svg::{outline, polygons_svg};

fn main() {
    let xi = [1.0, 0.0, 0.0, 1.0];
    let cube = PolytopeCm::cube(2).unwrap();
    let c = dcbody::planar::Polygon2::regular(3, 0.5, 0.0).unwrap();
    let k = outline(&Body::Cm(cube.clone().into()), Some(&xi)).unwrap();
    let d = outline(&Body::Oracle(dc_polytope(&c, &cube.into())), Some(&xi)).unwrap();
    eprintln!("projection of K: {} vertices, of D_C K: {} vertices", k.len(), d.len());
    print!("{}", polygons_svg(&[d, k]));
}
