//! Arithmetical structures on path and cycle graphs.
//!
//! An arithmetical structure on a graph `G` with adjacency matrix `A` is a
//! pair of positive integer vectors `(d, r)` with `(diag(d) - A) r = 0` and
//! `gcd(r) = 1`. This crate constructs and validates them, enumerates every
//! structure on `P_n` and `C_n`, implements the bijections with subdivision
//! plans, ballot words, triangulations and multisets, and computes critical
//! groups exactly.
//!
//! Positions in public operations are 1-based.

pub mod algebra;
pub mod bijections;
pub mod combinatorics;
pub mod cycle_enum;
pub mod error;
pub mod graph;
pub mod json;
pub mod oracle;
pub mod path_enum;
pub mod structure;
pub mod transforms;

pub use algebra::{critical_group, smith_normal_form, AbelianGroup, IntMatrix, SmithForm};
pub use bijections::{Multiset, SubdivisionPlan};
pub use combinatorics::CountTable;
pub use cycle_enum::enumerate_cycles;
pub use error::{Error, Result};
pub use graph::{Graph, GraphKind};
pub use path_enum::enumerate_paths;
pub use bijections::omega;
pub use structure::ArithmeticalStructure;

pub use num_bigint::{BigInt, BigUint};
