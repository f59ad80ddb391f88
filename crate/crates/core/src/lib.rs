//! Distinguishing numbers, distinguishing thresholds and distinguishing
//! coloring counts of small graphs, the graph products that combine them,
//! and checks of the closed-form predictions against exhaustive search.

pub mod action;
pub mod autgroup;
pub mod coloring;
pub mod combinatorics;
pub mod config;
pub mod error;
pub mod fixtures;
pub mod formulas;
pub mod graph;
pub mod indices;
pub mod io;
pub mod iso;
pub mod named;
mod par;
pub mod perm;
pub mod products;
pub mod verify;
mod search;

pub use autgroup::{enumerate_automorphisms, enumerate_rooted, AutGroup};
pub use coloring::Coloring;
pub use config::Budget;
pub use error::{Error, Result};
pub use graph::{FamilyKind, Graph, RootedGraph};
pub use indices::{
    analyze, are_equivalent, distinguishing_number, distinguishing_threshold, is_distinguishing, is_steady, nu, phi,
    rooted_indices, IndexReport, PhiTable,
};
pub use perm::Permutation;
