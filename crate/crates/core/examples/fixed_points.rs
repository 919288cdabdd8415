//! `D_C K = l(C) K` up to translation for discs and for bodies invariant
//! under the normal rotations of a regular `C`; iterates of the classical
//! operator scale by 2.

use dcbody::planar::{Point2, Polygon2, SampledSupport2};
use dcbody::verify::{fixed_point_check_m1, iterate_check, iteration_condition};

fn main() {
    let c4 = Polygon2::regular(4, 0.25, 0.0).unwrap();
    let square = Polygon2::rect(-0.5, -0.5, 0.5, 0.5).unwrap();
    let tri = Polygon2::from_points(&[Point2::new(0.0, 0.0), Point2::new(1.3, 0.0), Point2::new(0.3, 0.8)]).unwrap();
    let disc = SampledSupport2::disc(1024, 0.7, Point2::new(2.0, 1.0)).unwrap();
    println!("C4, square:   {:.1e}", fixed_point_check_m1(&c4, &square.clone().into()).unwrap());
    println!("C4, triangle: {:.3}", fixed_point_check_m1(&c4, &tri.clone().into()).unwrap());
    println!("tri, disc:    {:.1e}", fixed_point_check_m1(&tri, &disc.into()).unwrap());
    let seg = Polygon2::interval();
    for n in 1..=4 {
        println!("segment, N = {n}: |D^N K - 2^(N-1) D K| = {:.1e}", iterate_check(&seg, &tri, n));
    }
    println!("triangle C satisfies the iteration condition: {}", iteration_condition(&tri, 2, 32, 1e-9));
    println!("triangle C, N = 2: defect {:.3}", iterate_check(&tri, &square, 2));
}
