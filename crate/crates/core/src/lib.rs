//! Combinatorics of nilpotent ideals in a Borel subalgebra.
//!
//! The crate works entirely with integer coordinates over the simple roots.
//! Positive roots, antichains and upward-closed ideals of the root poset are
//! plain sorted root sets; coweights are integer vectors of their values on
//! the simple roots. Everything here is `no_std` and needs only `alloc`.
//!
//! Simple-root indices are 0-based in every API of this crate; the textual
//! formats in the `borel` crate print them 1-based (`α1`, `H1`, ...).

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod certificates;
pub mod chevalley;
pub mod dynkin;
mod error;
pub mod linalg;
pub mod orbits;
pub mod poset;
pub mod roots;
pub mod weyl;

pub use error::{Error, Result};
pub use roots::{Family, Root, RootOrder, RootSystem, RootSystemType};

/// Exact rational numbers used for coefficients and linear algebra.
pub type Rational = num_rational::Ratio<i64>;
