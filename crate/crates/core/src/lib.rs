//! Complex difference bodies.
//!
//! For a planar convex body `C` and a convex body `K` in `ℂ^m` the complex
//! difference body is the weighted Minkowski combination
//! `D_C K = ∫_{S¹} αK dS(C, α)` of rotated copies of `K`, weighted by the
//! surface area measure of `C`. For `C = [−i/2, i/2]` it is the classical
//! difference body `K − K`.
//!
//! The crate is organized by representation:
//!
//! - [`planar`]: exact convex polygons, sampled support functions, atomic
//!   measures on the circle, Fourier spectra and planar scalar functionals.
//! - [`complexspace`]: bodies in `ℂ^m ≅ ℝ^{2m}` (m ∈ {1, 2}), complex scalar
//!   action, support oracles, projections and affine dimension.
//! - [`diffbody`]: the operator itself in every representation.
//! - [`harmonic`]: disk polynomials on `S³`, multiplier tables and kernel
//!   projections.
//! - [`verify`]: inequality, fixed-point and classification checks over
//!   seeded corpora.
//!
//! Everything is immutable after construction and every operation is a pure
//! function.

pub mod complexspace;
pub mod diffbody;
pub mod enclosing;
pub mod error;
pub mod harmonic;
pub mod io;
pub mod lp;
pub mod planar;
pub mod svg;
pub mod verify;

pub use error::{Error, Result};

pub use complexspace::{CmBody, PolytopeCm, SupportOracleCm};
pub use planar::{AtomicMeasure1, Convention, Polygon2, SampledSupport2, Spectrum};

/// Complex scalars (rotation–dilations of the plane).
pub type Complex = num_complex::Complex64;
