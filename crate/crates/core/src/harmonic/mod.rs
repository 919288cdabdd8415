//! Fourier and bi-degree spherical harmonic layer.
//!
//! On `ℂ²` the operator `A_C f(u) = ∑_i s_i f(e^{−iθ_i} u)` acts on the space
//! `H_{k,l}` of harmonics with `Y(αu) = α^k ᾱ^l Y(u)` as multiplication by
//! `λ_{k,l} = ∑_i s_i e^{−i(k−l)θ_i}`.
//!
//! Orientation: with `(x, y) = ∑ x_j ȳ_j` and pole `e = e_1`, the zonal
//! function of bi-degree `(k, l)` is `v ↦ P_{k,l}((v, e))`, and the kernel
//! projection uses `P_{k,l}((u, v))`, which lies in `H_{k,l}` as a function
//! of `u`.

mod disk;
mod multiplier;
mod orthopoly;
mod quadrature;

pub use disk::{disk_poly_eval, harmonicity_check, hermitian, pole_coordinate, DiskPolynomial};
pub use multiplier::{
    eigenfunction_check, multiplier, multiplier_table, planar_multiplier_check, MultiplierEntry,
    MultiplierTable,
};
pub use orthopoly::{build_ortho_q, OrthoPolyQ, MAX_DEGREE};
pub use quadrature::{
    gauss_legendre, kernel_component, kernel_component_sampled, s3_quadrature, S3Quadrature,
};
