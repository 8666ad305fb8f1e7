use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use super::WordError;

/// A freely reduced word in the Artin generators `σ_1, …, σ_{n-1}`.
///
/// Letter `i > 0` stands for `σ_i` and `-i` for `σ_i⁻¹`. No braid or surface
/// relation is ever applied here; two words are equal only when their
/// reduced letter sequences agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

/// Free cancellation of adjacent inverse pairs, stack based.
pub(crate) fn free_reduce(raw: impl IntoIterator<Item = i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for l in raw {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl BraidWord {
    /// Reduce a raw signed-index sequence into a word on `n` strands.
    pub fn reduce(raw: &[i32], n: usize) -> Result<Self, WordError> {
        if let Some(&bad) = raw.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= n) {
            return Err(WordError::IndexOutOfRange { index: bad, n });
        }
        Ok(BraidWord { n, letters: free_reduce(raw.iter().copied()) })
    }

    pub fn identity(n: usize) -> Self {
        BraidWord { n, letters: Vec::new() }
    }

    /// `σ_i^{±1}` as a one-letter word.
    pub fn generator(n: usize, letter: i32) -> Result<Self, WordError> {
        Self::reduce(&[letter], n)
    }

    pub fn n(&self) -> usize {
        self.n
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
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &BraidWord) -> Result<Self, WordError> {
        if self.n != other.n {
            return Err(WordError::StrandMismatch { left: self.n, right: other.n });
        }
        Ok(BraidWord {
            n: self.n,
            letters: free_reduce(self.letters.iter().chain(other.letters.iter()).copied()),
        })
    }

    /// Integer power; negative exponents use the inverse word.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters: free_reduce(letters) }
    }

    /// `self · other · self⁻¹`.
    pub fn conjugate(&self, other: &BraidWord) -> Result<Self, WordError> {
        self.concat(other)?.concat(&self.inverse())
    }

    /// Exponent sum of the letters.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }
}

/// Concatenation. Panics when the strand counts differ.
impl Mul for &BraidWord {
    type Output = BraidWord;
    fn mul(self, rhs: &BraidWord) -> BraidWord {
        self.concat(rhs).expect("braid words on different strand counts")
    }
}

impl fmt::Display for BraidWord {
    /// Writes the word in the expression syntax, `e` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let exp = run as i64 * l.signum() as i64;
            if exp == 1 {
                write!(f, "s{}", l.abs())?;
            } else {
                write!(f, "s{}^{}", l.abs(), exp)?;
            }
            i += run;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn free_cancellation() {
        assert!(BraidWord::reduce(&[1, -1], 3).unwrap().is_empty());
        assert_eq!(BraidWord::reduce(&[1, 2, -2, 1], 3).unwrap().letters(), &[1, 1]);
        assert_eq!(BraidWord::reduce(&[1, 2, 1], 4).unwrap().letters(), &[1, 2, 1]);
    }

    #[test]
    fn index_range_checked() {
        assert_eq!(
            BraidWord::reduce(&[1, 3], 3),
            Err(WordError::IndexOutOfRange { index: 3, n: 3 })
        );
        assert!(BraidWord::reduce(&[0], 3).is_err());
        assert!(BraidWord::reduce(&[-2], 3).is_ok());
    }

    #[test]
    fn display_groups_runs() {
        let w = BraidWord::reduce(&[1, 1, 2, -3, -3], 4).unwrap();
        assert_eq!(w.to_string(), "s1^2*s2*s3^-2");
        assert_eq!(BraidWord::identity(3).to_string(), "e");
    }

    #[test]
    fn strand_mismatch() {
        let a = BraidWord::identity(3);
        let b = BraidWord::identity(4);
        assert!(matches!(a.concat(&b), Err(WordError::StrandMismatch { .. })));
    }

    fn raw_word(n: usize) -> impl Strategy<Value = Vec<i32>> {
        let m = (n - 1) as i32;
        prop::collection::vec((1..=m, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i }), 0..40)
    }

    proptest! {
        #[test]
        fn reduce_idempotent_and_shrinking(raw in raw_word(6)) {
            let w = BraidWord::reduce(&raw, 6).unwrap();
            prop_assert!(w.len() <= raw.len());
            let again = BraidWord::reduce(w.letters(), 6).unwrap();
            prop_assert_eq!(&again, &w);
            for pair in w.letters().windows(2) {
                prop_assert_ne!(pair[0], -pair[1]);
            }
        }

        #[test]
        fn reduction_is_confluent(raw in raw_word(5), cut in 0usize..40) {
            // reducing a prefix first gives the same normal form
            let cut = cut.min(raw.len());
            let head = BraidWord::reduce(&raw[..cut], 5).unwrap();
            let mut mixed = head.letters().to_vec();
            mixed.extend_from_slice(&raw[cut..]);
            prop_assert_eq!(
                BraidWord::reduce(&mixed, 5).unwrap(),
                BraidWord::reduce(&raw, 5).unwrap()
            );
        }

        #[test]
        fn inverse_cancels(raw in raw_word(5)) {
            let w = BraidWord::reduce(&raw, 5).unwrap();
            prop_assert!((&w * &w.inverse()).is_empty());
        }
    }
}
