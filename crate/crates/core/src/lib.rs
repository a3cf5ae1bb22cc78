//! Origami curves of normal origamis, graphs of groups, and verification of
//! p-adic origami constructions.

pub mod cli;
pub mod curves;
pub mod graph;
pub mod group;
pub mod matcher;
pub mod padic;
