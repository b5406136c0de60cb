//! Paley graphs `P(q^2)` over the tower `F_p ⊂ F_q ⊂ F_{q^2}`: arithmetic,
//! affine lines, maximal clique search and the automorphism group action on
//! cliques.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod clique;
pub mod constructions;
pub mod error;
pub mod field;
pub mod geometry;
pub mod graph;
pub mod group;

pub use clique::{second_largest_census, Census, CliqueSet};
pub use error::{Error, Result};
pub use field::{build_field, FieldCtx, FieldElem, TowerParams};
pub use graph::{build_graph, PaleyGraph};
pub use group::{group_order, Automorphism, GroupLabel, OrbitRecord};
