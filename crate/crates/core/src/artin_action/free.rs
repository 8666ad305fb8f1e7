use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid_words::free_reduce;

/// A freely reduced word in `x_1, …, x_rank`; letter `j` is `x_j`, `-j` its
/// inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn new(rank: usize, raw: impl IntoIterator<Item = i32>) -> Self {
        let letters = free_reduce(raw);
        debug_assert!(letters.iter().all(|&l| l != 0 && l.unsigned_abs() as usize <= rank));
        FreeWord { rank, letters }
    }

    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, j: usize) -> Self {
        FreeWord { rank, letters: vec![j as i32] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord { rank: self.rank, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn concat(&self, other: &FreeWord) -> Self {
        FreeWord::new(self.rank, self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// `g⁻¹ · self · g` for a single letter `g`.
    pub(crate) fn conjugate_by_letter(&self, g: i32) -> Self {
        if self.letters.is_empty() {
            return self.clone();
        }
        FreeWord::new(self.rank, std::iter::once(-g).chain(self.letters.iter().copied()).chain([g]))
    }

    /// Length change of [`conjugate_by_letter`](Self::conjugate_by_letter).
    pub(crate) fn conjugation_delta(&self, g: i32) -> i64 {
        if self.letters.is_empty() {
            return 0;
        }
        if self.letters.len() == 1 {
            // x ↦ g⁻¹xg: stays length 1 only when x = g^{±1}
            return if self.letters[0].abs() == g.abs() { 0 } else { 2 };
        }
        let starts = self.letters[0] == g;
        let ends = *self.letters.last().expect("nonempty") == -g;
        match (starts, ends) {
            (true, true) => -2,
            (false, false) => 2,
            _ => 0,
        }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| if l > 0 { format!("x{l}") } else { format!("x{}^-1", -l) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}
