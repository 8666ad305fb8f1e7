//! Finite subgroups of the sphere braid groups `B_n(S²)`: braid words, the
//! Artin action on the punctured-sphere group, exact finite group models,
//! the classification tables and their geometric cross-checks.

pub mod artin_action;
pub mod braid_words;
pub mod classifier;
pub mod field;
pub mod geometry;
pub mod verifier;
pub mod finite_groups;

pub use field::{Cyclotomic, Quad};

/// Exact real quadratic scalars over `i64` rationals.
pub type QuadScalar = Quad<i64>;
/// Exact cyclotomic scalars over `i64` rationals.
pub type CyclotomicScalar = Cyclotomic<i64>;
