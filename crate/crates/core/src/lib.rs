//! Executable homotopical algebra over two exactly computable categories:
//! finitely presented abelian groups and nonnegatively graded chain
//! complexes over Z or Q.
//!
//! The crate provides strong monads with law batteries, the linear
//! approximation to a strong monad and its module/algebra adjunction,
//! Gabriel-Morita round trips for hom-tensor monads, simplicial machinery
//! (tau-resolution, geometric and fat realisation, bar resolutions), and a
//! property suite for excisive behaviour of bounded chain complexes. All
//! arithmetic is exact.

pub mod chain;
pub mod fpab;
pub mod linalg;

pub use linalg::{IntMatrix, RatMatrix};
