use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::FreeWord;
use crate::braid_words::BraidWord;

/// The outer class of an automorphism of `Q = ⟨x_1, …, x_n | x_1⋯x_n⟩`,
/// recorded by the images of the free basis `x_1, …, x_{n-1}`.
///
/// The images are always stored in canonical form: the representative of
/// the class under simultaneous conjugation with least total length, ties
/// broken by the smallest image tuple. Equality and hashing are therefore
/// equality in `Out(Q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuotientEndo {
    n: usize,
    images: Vec<FreeWord>,
}

/// A literal automorphism (no conjugation normalization), as produced by
/// composing the generator rules directly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LiteralEndo {
    n: usize,
    images: Vec<FreeWord>,
}

fn basis(n: usize) -> Vec<FreeWord> {
    (1..n).map(|j| FreeWord::generator(n - 1, j)).collect()
}

/// Apply substitution `images` to a word in `x_1, …, x_{n-1}`.
fn substitute(images: &[FreeWord], w: &FreeWord) -> FreeWord {
    let rank = images.len();
    let mut raw = Vec::new();
    for &l in w.letters() {
        let img = &images[l.unsigned_abs() as usize - 1];
        if l > 0 {
            raw.extend_from_slice(img.letters());
        } else {
            raw.extend(img.letters().iter().rev().map(|x| -x));
        }
    }
    FreeWord::new(rank, raw)
}

/// Image of `x_n = (x_1⋯x_{n-1})⁻¹`.
fn last_image(images: &[FreeWord]) -> FreeWord {
    let rank = images.len();
    FreeWord::new(rank, images.iter().flat_map(|w| w.letters().iter().copied())).inverse()
}

/// Right-compose `images` with the action of one braid letter.
fn apply_letter(images: &mut [FreeWord], n: usize, letter: i32) {
    let i = letter.unsigned_abs() as usize;
    let a = images[i - 1].clone();
    let b = if i + 1 == n { last_image(images) } else { images[i].clone() };
    let (new_i, new_next) = if letter > 0 {
        // x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i
        (a.concat(&b).concat(&a.inverse()), a)
    } else {
        // x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}
        (b.clone(), b.inverse().concat(&a).concat(&b))
    };
    images[i - 1] = new_i;
    if i + 1 < n {
        images[i] = new_next;
    }
}

impl LiteralEndo {
    pub fn identity(n: usize) -> Self {
        LiteralEndo { n, images: basis(n) }
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_identity(&self) -> bool {
        self.images == basis(self.n)
    }

    /// The letter `g` such that this endo is conjugation `w ↦ g⁻¹wg` by a
    /// single free generator or its inverse, if any.
    pub fn inner_by_letter(&self) -> Option<i32> {
        let rank = self.n as i32 - 1;
        (1..=rank).flat_map(|g| [g, -g]).find(|&g| {
            self.images.iter().zip(basis(self.n)).all(|(img, x)| *img == x.conjugate_by_letter(g))
        })
    }

    pub fn total_len(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }
}

/// The literal Artin action of a braid word, without any normalization.
pub fn artin_endo_literal(w: &BraidWord) -> LiteralEndo {
    let n = w.n();
    let mut images = basis(n);
    for &l in w.letters() {
        apply_letter(&mut images, n, l);
    }
    LiteralEndo { n, images }
}

/// Simultaneous conjugation normal form.
///
/// Total length `Σ|g⁻¹ w_j g|` is a convex function of `g` on the Cayley
/// tree, so greedy single-letter descent reaches its minimum. The minimizers
/// form a finite subtree (the images generate `F_{n-1}`, whose centralizer is
/// trivial for rank ≥ 2), explored by BFS over zero-change moves.
fn canonicalize(mut images: Vec<FreeWord>) -> Vec<FreeWord> {
    let rank = images.len() as i32;
    let letters: Vec<i32> = (1..=rank).flat_map(|g| [g, -g]).collect();
    loop {
        let best = letters
            .iter()
            .map(|&g| (images.iter().map(|w| w.conjugation_delta(g)).sum::<i64>(), g))
            .min()
            .expect("rank >= 1");
        if best.0 >= 0 {
            break;
        }
        images = images.iter().map(|w| w.conjugate_by_letter(best.1)).collect();
    }
    let key = |t: &Vec<FreeWord>| -> Vec<(usize, Vec<i32>)> { t.iter().map(|w| (w.len(), w.letters().to_vec())).collect() };
    let mut best = images.clone();
    let mut seen: HashSet<Vec<FreeWord>> = HashSet::from([images.clone()]);
    let mut queue = VecDeque::from([images]);
    while let Some(t) = queue.pop_front() {
        if key(&t) < key(&best) {
            best = t.clone();
        }
        for &g in &letters {
            if t.iter().map(|w| w.conjugation_delta(g)).sum::<i64>() == 0 {
                let next: Vec<FreeWord> = t.iter().map(|w| w.conjugate_by_letter(g)).collect();
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        assert!(seen.len() < 1_000_000, "conjugation plateau did not close");
    }
    best
}

impl QuotientEndo {
    pub fn identity(n: usize) -> Self {
        QuotientEndo { n, images: basis(n) }
    }

    pub fn from_literal(e: &LiteralEndo) -> Self {
        QuotientEndo { n: e.n, images: canonicalize(e.images.clone()) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images == basis(self.n)
    }

    pub fn total_len(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }

    /// `(self ∘ other)(x) = self(other(x))`, which is the endo of the word
    /// product `u v` when `self` and `other` come from `u` and `v`.
    pub fn compose(&self, other: &QuotientEndo) -> QuotientEndo {
        assert_eq!(self.n, other.n, "endos on different strand counts");
        let images = other.images.iter().map(|w| substitute(&self.images, w)).collect();
        QuotientEndo { n: self.n, images: canonicalize(images) }
    }

    pub fn pow(&self, k: u64) -> QuotientEndo {
        (0..k).fold(QuotientEndo::identity(self.n), |acc, _| acc.compose(self))
    }

    /// Stable text key: images separated by `|`.
    pub fn key(&self) -> String {
        self.images.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" | ")
    }
}

impl fmt::Display for QuotientEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, img) in self.images.iter().enumerate() {
            if j > 0 {
                writeln!(f)?;
            }
            write!(f, "x{} -> {img}", j + 1)?;
        }
        Ok(())
    }
}

/// The Artin action of `w` as an element of `Out(Q)`.
pub fn artin_endo(w: &BraidWord) -> QuotientEndo {
    let n = w.n();
    let mut images = basis(n);
    for (k, &l) in w.letters().iter().enumerate() {
        apply_letter(&mut images, n, l);
        // keep intermediate images short on long inputs
        if k % 16 == 15 {
            images = canonicalize(images);
        }
    }
    QuotientEndo { n, images: canonicalize(images) }
}

/// Equality of the images of `w1` and `w2` in the mapping class group.
pub fn projectively_equal(w1: &BraidWord, w2: &BraidWord) -> bool {
    w1.n() == w2.n() && artin_endo(w1) == artin_endo(w2)
}
