//! Permutation-group machinery for strongly closed subgroups and the
//! case analysis of `BZ/p`-cellularization of classifying spaces.
//!
//! The crate is `no_std` (it needs `alloc`). It provides:
//!
//! * [`perm`]: permutations with cycle-notation parsing and formatting,
//! * [`group`]: permutation groups backed by a base and strong generating set,
//! * [`subgroup`], [`quotient`], [`lattice`]: closures, normalizers,
//!   centralizers, conjugacy classes, Sylow subgroups, quotients and
//!   subgroup enumeration for small p-groups,
//! * [`cellular`]: p-socles, strong closure, `ω̄S`, `O_A(G)` and fusion
//!   control predicates,
//! * [`classifier`]: the three-way case analysis and its symbolic fibration,
//! * [`catalog`]: constructors for the standard families,
//! * `oracle` and `differential` (feature `oracle`): brute-force reference
//!   implementations, and a side-by-side comparison with the main ones.
//!
//! # Conventions
//!
//! Permutations act on the right and compose left to right:
//! `&a * &b` is "apply `a`, then `b`". Conjugation `g.conjugate(&x)`
//! is the product `g · x · g⁻¹` under that rule. Every predicate in the
//! crate goes through [`Perm::conjugate`], so there is exactly one place
//! where the convention lives.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod catalog;
pub mod cellular;
pub mod classifier;
#[cfg(feature = "oracle")]
pub mod differential;
mod error;
pub mod group;
pub mod lattice;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod perm;
pub mod quotient;
pub mod subgroup;

pub use error::{Error, Result};
pub use group::{Group, GroupSpec, Subgroup, DEFAULT_ENUMERATION_CAP};
pub use perm::Perm;
