//! Exact principal presentations of the Yangian Y(gl_N) and the twisted
//! Yangians Y(so_N), Y(sp_N).
//!
//! Layers, bottom up:
//! - [`coefficients`]: big rationals, Q(ω_N), polynomials in the spectral parameters u, v.
//! - [`tensor`]: dense matrices, Kronecker products, the form-twisted transpose.
//! - [`principal`]: the principal basis A_ij of gl_N, the DFT over Z_N, twisted generators.
//! - [`formal`]: degree-≤2 words in generator series with polynomial coefficients.
//! - [`relations`]: relation builders and the identity checkers producing [`relations::CheckReport`]s.

pub mod coefficients;
pub mod error;
pub mod exec;
pub mod formal;
pub mod linalg;
pub mod principal;
pub mod relations;
pub mod ring;
pub mod tensor;

pub use error::{AlgebraError, Result};
