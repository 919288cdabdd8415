//! `D_C` acts on Fourier coefficients of support functions by multiplying
//! the `j`-th one with `λ_j = ∑ s_i e^{−ijθ_i}`.

use dcbody::diffbody::dc_planar;
use dcbody::harmonic::{multiplier, multiplier_table, planar_multiplier_check};
use dcbody::planar::{area_measure, fourier_support, Convention, Point2, Polygon2};

fn main() {
    let c = Polygon2::from_points(&[Point2::new(0.0, 0.0), Point2::new(1.0, 0.2), Point2::new(0.3, 0.9)]).unwrap();
    let k = Polygon2::regular(5, 0.7, 0.0).unwrap();
    let table = multiplier_table(&c, 4);
    println!("lambda_(k,l) depends only on k - l:");
    for k in 0..=4 {
        let row: Vec<String> = (0..=4).map(|l| format!("{:7.3}", table.get(k, l).unwrap().norm())).collect();
        println!("  k = {k}: {}", row.join(" "));
    }
    let mu = area_measure(&c);
    let d = dc_planar(&c, &k);
    let hk = fourier_support(&k.clone().into(), 8, Convention::Multiplier).unwrap();
    let hd = fourier_support(&d.into(), 8, Convention::Multiplier).unwrap();
    for j in 0..=8 {
        let lam = multiplier(&mu, j);
        println!("  j = {j}: |c_j(D)| = {:.5}, |lambda c_j(K)| = {:.5}", hd.get(j).norm(), (lam * hk.get(j)).norm());
    }
    println!("max residual for J = 32: {:.1e}", planar_multiplier_check(&c, &k.into(), 32).unwrap());
    let interval = multiplier_table(&Polygon2::interval(), 5);
    let lams: Vec<f64> = (0..=5).map(|j| interval.get(j, 0).unwrap().re).collect();
    println!("interval: {lams:?}");
}

