use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Mul, Neg};

use crate::field::{ExactScalar, Scalar};

use super::{GroupError, GroupTable};

/// `w + x i + y j + z k` over any [`Scalar`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> Quaternion<T> {
    pub fn new(w: T, x: T, y: T, z: T) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn one() -> Self {
        Quaternion::new(T::one(), T::zero(), T::zero(), T::zero())
    }

    pub fn i() -> Self {
        Quaternion::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn j() -> Self {
        Quaternion::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn k() -> Self {
        Quaternion::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    pub fn scale(&self, s: &T) -> Self {
        Quaternion::new(s.clone() * self.w.clone(), s.clone() * self.x.clone(), s.clone() * self.y.clone(), s.clone() * self.z.clone())
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    /// `w² + x² + y² + z²`.
    pub fn norm(&self) -> T {
        self.w.clone() * self.w.clone()
            + self.x.clone() * self.x.clone()
            + self.y.clone() * self.y.clone()
            + self.z.clone() * self.z.clone()
    }

    pub fn coords(&self) -> [&T; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    /// The rotation of `R³` given by `v ↦ q v q̄` for a unit quaternion,
    /// row-major. `q` and `-q` give the same matrix.
    pub fn rotation_matrix(&self) -> [[T; 3]; 3] {
        let (w, x, y, z) = (self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone());
        let two = T::from_int(2);
        let one = T::one();
        let sq = |a: &T| a.clone() * a.clone();
        let p = |a: &T, b: &T| a.clone() * b.clone();
        [
            [
                one.clone() - two.clone() * (sq(&y) + sq(&z)),
                two.clone() * (p(&x, &y) - p(&w, &z)),
                two.clone() * (p(&x, &z) + p(&w, &y)),
            ],
            [
                two.clone() * (p(&x, &y) + p(&w, &z)),
                one.clone() - two.clone() * (sq(&x) + sq(&z)),
                two.clone() * (p(&y, &z) - p(&w, &x)),
            ],
            [
                two.clone() * (p(&x, &z) - p(&w, &y)),
                two.clone() * (p(&y, &z) + p(&w, &x)),
                one - two * (sq(&x) + sq(&y)),
            ],
        ]
    }
}

impl<T: Scalar> Mul for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn mul(self, r: &Quaternion<T>) -> Quaternion<T> {
        let (a, b) = (self, r);
        let m = |p: &T, q: &T| p.clone() * q.clone();
        Quaternion::new(
            m(&a.w, &b.w) - m(&a.x, &b.x) - m(&a.y, &b.y) - m(&a.z, &b.z),
            m(&a.w, &b.x) + m(&a.x, &b.w) + m(&a.y, &b.z) - m(&a.z, &b.y),
            m(&a.w, &b.y) - m(&a.x, &b.z) + m(&a.y, &b.w) + m(&a.z, &b.x),
            m(&a.w, &b.z) + m(&a.x, &b.y) - m(&a.y, &b.x) + m(&a.z, &b.w),
        )
    }
}

impl<T: Scalar> Mul for Quaternion<T> {
    type Output = Quaternion<T>;
    fn mul(self, r: Quaternion<T>) -> Quaternion<T> {
        &self * &r
    }
}

impl<T: Scalar> Neg for Quaternion<T> {
    type Output = Quaternion<T>;
    fn neg(self) -> Quaternion<T> {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl<T: fmt::Display> fmt::Display for Quaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.w, self.x, self.y, self.z)
    }
}

/// Closure of unit quaternions under the Hamilton product.
///
/// Elements are sorted by their coordinate tuple `(w, x, y, z)` in the
/// scalar's total order, which fixes the table numbering.
pub fn quaternion_closure<T>(gens: &[Quaternion<T>], cap: usize) -> Result<(Vec<Quaternion<T>>, GroupTable), GroupError>
where
    T: ExactScalar,
{
    for g in gens {
        if g.norm() != T::one() {
            return Err(GroupError::NotUnit(g.to_string()));
        }
    }
    let mut elems = vec![Quaternion::one()];
    let mut index: HashMap<Quaternion<T>, usize> = HashMap::from([(Quaternion::one(), 0)]);
    let mut head = 0;
    while head < elems.len() {
        for g in gens {
            let p = &elems[head] * g;
            if !index.contains_key(&p) {
                if elems.len() >= cap {
                    return Err(GroupError::ClosureExplosion { cap });
                }
                index.insert(p.clone(), elems.len());
                elems.push(p);
            }
        }
        head += 1;
    }
    elems.sort();
    let index: HashMap<&Quaternion<T>, usize> = elems.iter().enumerate().map(|(i, q)| (q, i)).collect();
    let mul = elems
        .iter()
        .map(|a| elems.iter().map(|b| index[&(a * b)]).collect())
        .collect();
    let labels = elems.iter().map(|q| q.to_string()).collect();
    let table = GroupTable::new(mul, labels)?;
    Ok((elems, table))
}

/// Position of `q` in a sorted closure.
pub fn position<T: Ord + Eq + Hash>(elems: &[Quaternion<T>], q: &Quaternion<T>) -> Option<usize> {
    elems.binary_search(q).ok()
}
