//! The surface area measure of `D_C K` is the convolution of the measures of
//! `C` and `K`; the polygon can be rebuilt from it.

use dcbody::diffbody::{body_from_measure, convolve_measures, dc_planar};
use dcbody::planar::{area_measure, Polygon2};

fn main() {
    let c = Polygon2::regular(3, 0.8, 0.1).unwrap();
    let k = Polygon2::rect(0.0, 0.0, 1.5, 0.5).unwrap();
    let sc = area_measure(&c);
    let sk = area_measure(&k);
    let conv = convolve_measures(&sc, &sk);
    println!("S(C) has {} atoms, S(K) {}, S(C) * S(K) {}", sc.len(), sk.len(), conv.len());
    for (theta, w) in conv.atoms() {
        println!("  angle {theta:.4}  weight {w:.4}");
    }
    let d = dc_planar(&c, &k);
    let (dt, dw) = area_measure(&d).atom_distance(&conv).unwrap();
    println!("against S(D_C K): angle gap {dt:.1e}, weight gap {dw:.1e}");
    let rebuilt = body_from_measure(&conv).unwrap();
    println!("rebuilt polygon differs by {:.1e}", rebuilt.hausdorff(&d));
}
