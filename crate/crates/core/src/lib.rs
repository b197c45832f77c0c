//! Independence polynomials and the well-covered graph hierarchy.
//!
//! Graphs are small, simple and undirected, stored as bit-set adjacency rows
//! (at most [`MAX_VERTICES`] vertices). The [`indset`] module computes the
//! independence polynomial and decides well-coveredness, membership in the
//! classes `W_p` and `λ`-quasi-regularizability; [`construct`] builds unions,
//! joins, coronas and lexicographic products; [`verify`] runs statement
//! harnesses over graph streams.

pub mod bitset;
pub mod census;
pub mod construct;
pub mod edgelist;
pub mod error;
pub mod expr;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod indset;
pub mod inequalities;
pub mod poly;
pub mod rational;
pub mod verify;

pub use bitset::{Bits, VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
pub use graph::{Graph, Induced};
pub use indset::{Analyzer, ClassReport};
pub use poly::Polynomial;
pub use rational::Rational;
