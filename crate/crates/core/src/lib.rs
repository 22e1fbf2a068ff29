//! Exact areas of polygons whose vertices are strided terms of integer
//! sequences.
//!
//! A polygon is built from a sequence `f` with start index `n`, stride `k`
//! and vertex count `m` as
//!
//! ```text
//! (f(n), f(n+k)), (f(n+2k), f(n+3k)), ..., (f(n+(2m-2)k), f(n+(2m-1)k))
//! ```
//!
//! Its area is computed two ways: directly with the surveyor's (shoelace)
//! formula over exact integers, and through closed forms in the sequence's
//! own terms or its Binet form evaluated in a real quadratic field. The
//! [`verify`] module sweeps parameter grids and compares the two.
//!
//! Everything here is exact. There is no floating point in this crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod closedforms;
mod error;
pub mod geometry;
pub mod numerics;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};
pub use numerics::{QuadElem, Rational};
