//! Volume of `D_C K` in `ℂ²` by uniform sampling with exact membership,
//! against `l⁴ vol(K) ≤ vol(D_C K) ≤ κ₄ R(K)⁴ l⁴`.

use std::f64::consts::PI;

use dcbody::complexspace::{monte_carlo_volume, CompiledBody, PolytopeCm};
use dcbody::diffbody::dc_polytope;
use dcbody::planar::Polygon2;

fn main() {
    let c = Polygon2::regular(3, 0.5, 0.0).unwrap();
    let l: f64 = c.perimeter();
    let cube = PolytopeCm::cube(2).unwrap();
    let d = dc_polytope(&c, &cube.into());
    let est = monte_carlo_volume(&CompiledBody::from_oracle(&d), 50_000, 1).unwrap();
    // the cube [0, 1]^4 has volume 1 and circumradius 1
    println!("vol(D) = {:.3} +- {:.3} ({} of {} samples inside)", est.estimate, est.sigma, est.hits, est.samples);
    println!("lower bound l^4 vol(K)        = {:.3}", l.powi(4));
    println!("upper bound kappa_4 R^4 l^4   = {:.3}", PI * PI / 2.0 * l.powi(4));

    let seg = PolytopeCm::segment(&[0.0; 4], &[1.0, 0.0, 0.0, 0.0]).unwrap();
    let flat = monte_carlo_volume(&CompiledBody::from_oracle(&dc_polytope(&c, &seg.into())), 5_000, 1).unwrap();
    println!("segment K: vol(D) = {}", flat.estimate);
}
