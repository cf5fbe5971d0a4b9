//! Permutations with finite support, written and read in disjoint cycle
//! notation, together with lexicographic and Myrvold-Ruskey ranking and
//! permutation groups small enough to enumerate in full.
//!
//! ```
//! use permkit::Perm;
//!
//! let p: Perm = "(0 1)".parse().unwrap();
//! let q: Perm = "(1 2)".parse().unwrap();
//! assert_eq!((&p * &q).to_string(), "(0 1 2)");
//! assert_eq!(p.commutator(&q).to_string(), "(0 2 1)");
//! ```

pub mod cli;
pub mod cycle_text;
pub mod error;
pub mod group;
pub mod perm;
pub mod ranking;

pub use error::{Error, Result};
pub use group::{Group, Orbit};
pub use perm::{Cycle, Perm, Point};
pub use ranking::{InversionVector, RandomSource, Rank};
