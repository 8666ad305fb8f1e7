use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

/// A permutation of `{1, …, n}`, stored 0-based.
///
/// Products are read left to right: `p * q` applies `p` first, then `q`.
/// This matches the braid-word convention, so the permutation of `σ_1σ_2`
/// is `(1,2) * (2,3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From 0-based images; `None` when not a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    /// The transposition of the 1-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles in 1-based points, including fixed points, each cycle
    /// starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, j)| i == *j).count()
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, num_integer::lcm)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "permutation degrees differ");
        Permutation { images: self.images.iter().map(|&i| rhs.images[i]).collect() }
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation omitting fixed points; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_to_right_product() {
        let p = &Permutation::transposition(3, 1, 2) * &Permutation::transposition(3, 2, 3);
        // 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
        assert_eq!(p.apply(1), 3);
        assert_eq!(p.apply(3), 2);
        assert_eq!(p.apply(2), 1);
        assert_eq!(p.to_string(), "(1,3,2)");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_none());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_none());
        assert!(Permutation::from_images(vec![2, 0, 1]).is_some());
    }

    #[test]
    fn inverse_and_order() {
        let p = Permutation::from_images(vec![1, 2, 0, 4, 3]).unwrap();
        assert!((&p * &p.inverse()).is_identity());
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycle_type(), vec![3, 2]);
        assert_eq!(p.fixed_points(), 0);
    }
}
