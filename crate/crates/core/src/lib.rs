//! Semi-discrete and fully discrete minimal surfaces: Weierstrass data,
//! closed-form and recursive catenoid families, numerical invariant checks
//! and comparison of the families.
//!
//! The runnable programs in `examples/` are the intended entry points.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod catenoids;
pub mod cli;
pub mod comparison;
pub mod error;
pub mod invariants;
pub mod io;
pub mod net;
pub mod profile;
pub mod report;
pub mod stencil;
pub mod surface;
pub mod weierstrass;
