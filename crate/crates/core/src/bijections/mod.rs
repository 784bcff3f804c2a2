//! Explicit bijections between arithmetical structures and combinatorial
//! objects.
//!
//! * [`plan`]: weakly increasing subdivision plans and `A_n(b)`.
//! * [`word`]: ballot words of length `n - 2` for structures on `P_n`.
//! * [`fmap`]: the rotation map on ballot words, two ways.
//! * [`triangulation`]: polygon triangulations and their quiddity
//!   sequences.
//! * [`omega`]: multisets of `[n]` of size `< n` and structures on `C_n`.
//!
//! The `r`-vectors of a path structure are the diagonals of the frieze
//! pattern whose quiddity row is its `d`-vector; friezes themselves are not
//! modelled here.

pub mod fmap;
pub mod multiset;
pub mod omega;
pub mod plan;
pub mod triangulation;
pub mod word;

pub use fmap::{f_map, f_map_inductive, BallotWord};
pub use multiset::Multiset;
pub use omega::{omega, omega_inverse};
pub use plan::{apply_plan, normalize_plan, plan_from_structure, SubdivisionPlan};
pub use triangulation::{
    rotate_triangulation, structure_from_triangulation, triangulation_from_structure, Triangulation,
};
pub use word::{word_decode, word_encode};
