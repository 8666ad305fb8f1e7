//! The Artin action of `B_n(S²)` on the punctured-sphere group
//! `Q = ⟨x_1, …, x_n | x_1⋯x_n = 1⟩`, used as an exact equality and order
//! oracle for the mapping class group `M_{0,n} = B_n(S²)/⟨Δ²⟩`.
//!
//! On `Q` the surface relator acts as the inner automorphism `w ↦ x_1 w x_1⁻¹`
//! rather than the identity, so the action is only well defined into
//! `Out(Q)`. Every [`QuotientEndo`] is stored as a canonical representative
//! of its outer class and equality is literal equality of those.

mod closure;
mod endo;
mod free;
mod order;

use thiserror::Error;

pub use closure::{closure_mod_center, ClosureResult, DEFAULT_CLOSURE_CAP, DEFAULT_IMAGE_LENGTH_CAP};
pub use endo::{artin_endo, artin_endo_literal, projectively_equal, LiteralEndo, QuotientEndo};
pub use free::FreeWord;
pub use order::{full_order, projective_order, projective_order_with_bound, OrderResult, ORDER_LENGTH_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("closure exceeded {cap} elements")]
    CapExceeded { cap: usize },
    #[error("image words exceeded {limit} letters")]
    LengthCap { limit: usize },
    #[error("generators act on different strand counts")]
    StrandMismatch,
    #[error("no generators given")]
    NoGenerators,
    #[error("projective order {m} with ξ·m = {value} mod {modulus} is inconsistent")]
    InconsistentInvariant { m: u64, value: u64, modulus: u64 },
}
