//! Permutation gates on `n`-qubit registers.
//!
//! Every classical reversible gate, and every quantum gate that maps a fixed
//! input basis onto a fixed output basis, is a permutation of the `2ⁿ` basis
//! indices. This crate works on those permutations directly:
//!
//! - [`perm`]: permutation algebra, the compact one-line notation
//!   `(k,l,…,n)`, lexicographic enumeration of `S_M` and permutation matrices.
//! - [`combinatorics`]: exact involution counts `a[M]`, factorials and the
//!   fraction of non-self-inverse (non-Hermitian) gates.
//! - [`classify`]: Hermitian and separable/entangled classification plus an
//!   exhaustive census over `S_{2ⁿ}`.
//! - [`templates`]: identity templates built from the group multiplication
//!   table.
//! - [`circuit`] and [`optimizer`]: a small reversible-circuit IR and a
//!   template-driven peephole optimizer that preserves circuit semantics.
//! - [`cli`]: the command-line front end used by the `permgate` binary.
//!
//! ```
//! use permgate::combinatorics::{non_hermitian_fraction, render_percent};
//!
//! let r = non_hermitian_fraction(3).unwrap();
//! assert_eq!(render_percent(&r, 4), "98.1052%");
//! ```

pub mod circuit;
pub mod classify;
pub mod cli;
pub mod combinatorics;
mod error;
pub mod optimizer;
pub mod perm;
pub mod templates;

pub use error::{Error, Result};
pub use perm::{Permutation, PermutationMatrix, SizeCap};
