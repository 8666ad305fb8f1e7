//! Braid words over `σ_1, …, σ_{n-1}`, the abelianization `ξ`, the
//! permutation map `π`, and the catalogue of named words.

mod catalog;
mod dsl;
mod perm;
mod word;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use catalog::{canonical_word, CanonicalName};
pub use dsl::{parse_expr, ParseError};
pub use perm::Permutation;
pub use word::BraidWord;
pub(crate) use word::free_reduce;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("generator index {index} out of range for {n} strands")]
    IndexOutOfRange { index: i32, n: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("`{name}` requires {requirement}, got n = {n}")]
    WrongStrandCount { name: &'static str, n: usize, requirement: &'static str },
    #[error("unknown word name `{0}`")]
    UnknownName(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A residue modulo `2(n-1)`, the value group of `ξ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianClass {
    n: usize,
    value: u64,
}

impl AbelianClass {
    pub fn new(n: usize, value: i64) -> Self {
        let m = Self::modulus_for(n);
        AbelianClass { n, value: value.rem_euclid(m as i64) as u64 }
    }

    pub fn modulus_for(n: usize) -> u64 {
        2 * (n as u64 - 1)
    }

    pub fn modulus(&self) -> u64 {
        Self::modulus_for(self.n)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(self, other: AbelianClass) -> Self {
        assert_eq!(self.n, other.n, "abelian classes for different strand counts");
        AbelianClass::new(self.n, (self.value + other.value) as i64)
    }

    pub fn scale(self, k: i64) -> Self {
        let m = self.modulus() as i128;
        let v = (self.value as i128 * k as i128).rem_euclid(m);
        AbelianClass { n: self.n, value: v as u64 }
    }
}

impl fmt::Display for AbelianClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus())
    }
}

/// Exponent sum modulo `2(n-1)`.
pub fn xi(w: &BraidWord) -> AbelianClass {
    AbelianClass::new(w.n(), w.exponent_sum())
}

/// Image in `S_n` under `σ_i ↦ (i, i+1)`, multiplied left to right.
pub fn pi(w: &BraidWord) -> Permutation {
    let n = w.n();
    let mut images: Vec<usize> = (0..n).collect();
    // images[p] is where point p ends up; apply letters in order
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        for v in images.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }
    Permutation::from_images(images).expect("product of transpositions is a bijection")
}
