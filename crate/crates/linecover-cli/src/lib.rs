//! IO, instance generation, benchmarking, and the sorting demo behind the
//! `linecover` command-line tool.

pub mod bench;
pub mod gen;
pub mod io;
pub mod sort_demo;
