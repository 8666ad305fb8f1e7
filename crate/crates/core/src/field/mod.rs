//! Scalar types for quaternion and geometric arithmetic.
//!
//! Everything above this module is written against [`Scalar`], so the same
//! quaternion and rotation code runs on `f64` for quick numerics and on the
//! exact fields for the certified computations. The exact fields are
//! [`Quad`] (a real quadratic field `Q(√d)`) and [`Cyclotomic`] (`Q(ζ_M)`).

mod cyclotomic;
mod quad;

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use cyclotomic::Cyclotomic;
pub use quad::{IntBase, Quad};

/// Ring operations shared by every coordinate type.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// The rational number `num / den` embedded in the scalar type.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_ratio(v, 1)
    }
}

/// A scalar with decidable equality, hashing and a fixed total order, as
/// needed for closures and canonical labelling.
pub trait ExactScalar: Scalar + Eq + Hash + Ord + fmt::Display {
    /// JSON encoding of a single coordinate.
    fn to_json(&self) -> serde_json::Value;
}

macro_rules! impl_float_scalar {
    ($f:ty) => {
        impl Scalar for $f {
            fn from_ratio(num: i64, den: i64) -> Self {
                num as $f / den as $f
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);
