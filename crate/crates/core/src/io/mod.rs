//! Graph file formats and report serialization.

pub mod edgelist;
pub mod graph6;
pub mod report;
