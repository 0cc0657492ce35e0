//! Steinhaus matrices and graphs over GF(2).
//!
//! A Steinhaus matrix of size `n` is the symmetric zero-diagonal binary matrix
//! generated by its first row through `a_{i,j} = a_{i-1,j-1} + a_{i-1,j}`.
//! This crate builds them bit-packed, evaluates entries in closed form,
//! characterizes their symmetries, parametrizes the multi-symmetric ones and
//! searches for regular-modulo-4 graphs among them.
//!
//! ```
//! use steinhaus::{BinarySequence, SteinhausMatrix};
//!
//! let s: BinarySequence = "1100".parse().unwrap();
//! let m = SteinhausMatrix::from_sequence(&s);
//! assert_eq!(m.to_grid_string(), "01100\n10010\n10011\n01100\n00100\n");
//! assert_eq!(m.degrees().as_slice(), &[2, 2, 3, 2, 1]);
//! ```

#![allow(clippy::needless_range_loop)]

pub mod binomial;
pub mod bits;
pub mod degrees;
pub mod error;
pub mod gf2;
pub mod matrix;
pub mod regularity;
pub mod sequence;
pub mod symmetry;

pub use bits::BitVec;
pub use degrees::{degree_consistency, DegreeVector};
pub use error::{Error, Result};
pub use matrix::{ClosedForm, SteinhausMatrix, Vertex};
pub use sequence::BinarySequence;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/symmetry.md")]
    mod symmetry {}
    #[doc = include_str!("../../../book/src/congruences.md")]
    mod congruences {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/odd-degree.md")]
    mod odd_degree {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
