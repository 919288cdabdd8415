//! With `C` the vertical unit segment, `D_C K` is the difference body
//! `K + (−K)`. For a triangle it is a hexagon of six times the area.

use dcbody::diffbody::dc_planar;
use dcbody::planar::{Point2, Polygon2};

fn main() {
    let t = Polygon2::from_points(&[Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)]).unwrap();
    let d = dc_planar(&Polygon2::interval(), &t);
    println!("D T has {} vertices:", d.len());
    for v in d.vertices() {
        println!("  ({:+.3}, {:+.3})", v.x, v.y);
    }
    println!("area(T) = {}, area(D T) = {}", t.area(), d.area());
    let classical = t.minkowski_sum(&t.reflect());
    println!("distance to T + (-T): {:.1e}", d.vertex_distance(&classical).unwrap());
}
