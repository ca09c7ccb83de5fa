//! Exact commutative algebra for checking height bounds.
//!
//! The crate builds polynomial rings over `Q` and `F_p`, computes Gröbner
//! bases of ideals and submodules, and uses them to evaluate Krull dimensions
//! and heights of order ideals, generalized row ideals, determinantal and
//! Fitting ideals, and presentations of symmetric algebras. The [`checks`]
//! module turns each height bound into a [`checks::BoundReport`] and drives
//! randomized sweeps over `F_p`.

pub mod checks;
pub mod dimension;
mod error;
pub mod groebner;
mod matrix;
pub mod modules;
pub mod poly;

pub use error::{Error, Result};
pub use groebner::{FreeModuleElement, Ideal};
pub use matrix::PolyMatrix;
pub use poly::{CoefficientField, MonomialOrder, PolyRing, Polynomial, ResourceLimits};
