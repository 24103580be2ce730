//! Scaled relative graph (SRG) regions for compositions of averaged operators
//! and for Davis–Yin splitting operators, together with brute-force plane
//! operator realizations that check the regions independently.
//!
//! The crate is `no_std` with `alloc`. The default `std` feature only switches
//! floating-point intrinsics from `libm` to the platform implementation.
//!
//! Layout:
//!
//! - [`geometry`]: complex-plane primitives (disks, the composition quartic,
//!   envelopes, curvature, winding numbers, enclosing circles through 1).
//! - [`srg`]: operator classes and their SRG regions.
//! - [`operators`]: 2×2 realizations, sampling oracles, coverage reports.
//! - [`iteration`]: fixed-point iteration traces and rate checks.
#![no_std]
#![deny(unsafe_code)]
// Negated comparisons deliberately reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

mod error;
pub mod geometry;
pub mod iteration;
pub mod operators;
pub mod srg;
pub mod tolerances;

pub use error::{Error, Result};
pub use geometry::{ComplexPoint, DiskRegion, PolarQuadratic, Polyline};
