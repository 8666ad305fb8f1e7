//! The explicit braid words used throughout the crate. Other modules take
//! their words from here rather than spelling them out again.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{BraidWord, WordError};

/// Names of the catalogued words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CanonicalName {
    /// `α_0 = σ_1 ⋯ σ_{n-1}`
    A0,
    /// `α_1 = σ_1 ⋯ σ_{n-2} σ_{n-1}²`
    A1,
    /// `α_2 = σ_1 ⋯ σ_{n-3} σ_{n-2}²`
    A2,
    /// Garside half twist `Δ`
    Delta,
    /// Full twist `Δ² = (σ_1 ⋯ σ_{n-1})ⁿ`
    FullTwist,
    /// Surface relator `σ_1 ⋯ σ_{n-2} σ_{n-1}² σ_{n-2} ⋯ σ_1`
    Relator,
    /// `α_0 α_2 α_0⁻¹`
    X,
    /// `σ_1 σ_3⁻¹`, four strands only
    Y,
    /// `σ_5 σ_4 σ_1⁻¹ σ_2⁻¹`, six strands only
    Gamma,
    /// `ρ⁻¹ (σ_2⁻¹ σ_1⁻¹ σ_2⁻¹ σ_5 σ_4 σ_5) ρ` with `ρ = σ_5 σ_4 σ_3`, six strands only
    DeltaT1,
}

impl CanonicalName {
    pub const ALL: [CanonicalName; 10] = [
        CanonicalName::A0,
        CanonicalName::A1,
        CanonicalName::A2,
        CanonicalName::Delta,
        CanonicalName::FullTwist,
        CanonicalName::Relator,
        CanonicalName::X,
        CanonicalName::Y,
        CanonicalName::Gamma,
        CanonicalName::DeltaT1,
    ];

    /// Token used by the expression language.
    pub fn token(self) -> &'static str {
        match self {
            CanonicalName::A0 => "a0",
            CanonicalName::A1 => "a1",
            CanonicalName::A2 => "a2",
            CanonicalName::Delta => "D",
            CanonicalName::FullTwist => "D2",
            CanonicalName::Relator => "r",
            CanonicalName::X => "x",
            CanonicalName::Y => "y",
            CanonicalName::Gamma => "gamma",
            CanonicalName::DeltaT1 => "delta",
        }
    }

    fn strand_requirement(self) -> (usize, Option<usize>, &'static str) {
        match self {
            CanonicalName::A2 | CanonicalName::X => (3, None, "n >= 3"),
            CanonicalName::Y => (4, Some(4), "n = 4"),
            CanonicalName::Gamma | CanonicalName::DeltaT1 => (6, Some(6), "n = 6"),
            _ => (2, None, "n >= 2"),
        }
    }
}

impl fmt::Display for CanonicalName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for CanonicalName {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CanonicalName::ALL
            .into_iter()
            .find(|c| c.token() == s)
            .ok_or_else(|| WordError::UnknownName(s.to_string()))
    }
}

fn ascending(from: i32, to: i32) -> impl Iterator<Item = i32> {
    from..=to
}

/// The catalogued word `name` on `n` strands.
pub fn canonical_word(name: CanonicalName, n: usize) -> Result<BraidWord, WordError> {
    let (min, exact, requirement) = name.strand_requirement();
    if n < min || exact.is_some_and(|e| e != n) {
        return Err(WordError::WrongStrandCount { name: name.token(), n, requirement });
    }
    let m = n as i32;
    let raw: Vec<i32> = match name {
        CanonicalName::A0 => ascending(1, m - 1).collect(),
        CanonicalName::A1 => ascending(1, m - 1).chain([m - 1]).collect(),
        CanonicalName::A2 => ascending(1, m - 2).chain([m - 2]).collect(),
        CanonicalName::Delta => (1..m).rev().flat_map(|top| ascending(1, top)).collect(),
        CanonicalName::FullTwist => (0..n).flat_map(|_| ascending(1, m - 1)).collect(),
        CanonicalName::Relator => ascending(1, m - 1).chain((1..m).rev()).collect(),
        CanonicalName::X => {
            let a0 = canonical_word(CanonicalName::A0, n)?;
            let a2 = canonical_word(CanonicalName::A2, n)?;
            return a0.conjugate(&a2);
        }
        CanonicalName::Y => vec![1, -3],
        CanonicalName::Gamma => vec![5, 4, -1, -2],
        CanonicalName::DeltaT1 => vec![-3, -4, -5, -2, -1, -2, 5, 4, 5, 5, 4, 3],
    };
    BraidWord::reduce(&raw, n)
}
