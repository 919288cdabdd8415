//! Disk polynomials `P_{k,l}(z) = z^{k−l} Q(|z|²)` (for `k ≥ l`) and their
//! eigenvalues under `D_C` on the sphere of `ℂ²`.

use dcbody::harmonic::{build_ortho_q, disk_poly_eval, eigenfunction_check, harmonicity_check};
use dcbody::planar::Polygon2;
use dcbody::Complex;

fn main() {
    let z = Complex::new(0.3, 0.4);
    for (k, l) in [(1, 0), (1, 1), (2, 1), (3, 1), (2, 2)] {
        println!("P_({k},{l})({z}) = {:.6}", disk_poly_eval(k, l, z).unwrap());
    }
    let q = build_ortho_q(1, 0, 2).unwrap();
    let vals: Vec<String> = [0.0, 0.5, 1.0].iter().map(|&t| format!("{:.4}", q.eval(t))).collect();
    println!("Q of degree 2 for weight t: {}", vals.join(", "));
    let c = Polygon2::regular(5, 0.4, 0.2).unwrap();
    for (k, l) in [(2, 0), (3, 1), (4, 4)] {
        let res = eigenfunction_check(&c, k, l, 20, 1).unwrap();
        let lap = harmonicity_check(k, l, 1e-4, 1).unwrap();
        println!("({k},{l}): eigen residual {res:.1e}, laplacian {lap:.1e}");
    }
}
