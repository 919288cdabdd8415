//! Quermassintegral, width, diameter, mixed volume, Brunn-Minkowski and
//! containment checks on one planar pair.

use dcbody::planar::{Point2, Polygon2};
use dcbody::verify::{
    brunn_minkowski_check, containment_check, mixed_volume_check_m1, quermass_check_m1, width_diameter_check_m1,
};

fn main() {
    let c = Polygon2::from_points(&[Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.6, 0.7)]).unwrap();
    let k = Polygon2::from_points(&[
        Point2::new(0.0, 0.0),
        Point2::new(2.0, 0.1),
        Point2::new(1.8, 0.9),
        Point2::new(0.2, 0.6),
    ])
    .unwrap();
    let l = Polygon2::regular(5, 0.5, 0.0).unwrap();
    let reports = [
        quermass_check_m1(&c, &k.clone().into()).unwrap(),
        width_diameter_check_m1(&c, &k).unwrap(),
        mixed_volume_check_m1(&c, &k),
        brunn_minkowski_check(&c, &k, &l),
        containment_check(&c, &k).unwrap(),
    ];
    for r in &reports {
        println!("{}", r.title);
        for ch in &r.checks {
            let tag = if !ch.contract { "info" } else if ch.pass { "ok" } else { "FAIL" };
            println!("  [{tag:>4}] {}: {:.6} vs {:.6}", ch.name, ch.lhs, ch.rhs);
        }
    }
}
