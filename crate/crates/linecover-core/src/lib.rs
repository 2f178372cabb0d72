//! Exact solver for min-sum barrier coverage on a line.
//!
//! Given `n` sensors with a common covering radius `z` on the x-axis and a
//! barrier `[0, beta]`, compute final sensor positions that cover the barrier
//! while minimizing the total movement distance. The solver runs in
//! `O(n log n)` and all geometry is carried out in exact rational arithmetic,
//! so results can be compared bit-for-bit against the brute-force oracles in
//! [`oracle`].

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod containing;
pub mod general;
pub mod model;
pub mod one_sided;
pub mod oracle;
pub mod rational;
pub mod solve;
pub mod trees;

pub use model::{CaseKind, Configuration, Diagnostics, Instance, InstanceError, SolutionReport};
pub use rational::Rat;
pub use solve::{solve, SolveError};
