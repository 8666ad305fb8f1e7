use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::coset::{coset_enumerate, Presentation, DEFAULT_MAX_COSETS};
use super::quaternion::{quaternion_closure, Quaternion};
use super::{GroupError, GroupTable};
use crate::field::{ExactScalar, Scalar};
use crate::{CyclotomicScalar, QuadScalar};

/// Closure size beyond which a quaternion model is rejected.
pub const QUATERNION_CLOSURE_CAP: usize = 1000;

/// The abstract groups with exact models.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupName {
    Cyclic(usize),
    /// Dicyclic group of order `4m` (the field is the order).
    Dic(usize),
    T1,
    O1,
    I,
}

impl GroupName {
    pub fn order(self) -> usize {
        match self {
            GroupName::Cyclic(k) | GroupName::Dic(k) => k,
            GroupName::T1 => 24,
            GroupName::O1 => 48,
            GroupName::I => 120,
        }
    }

    /// `⟨A | A^k⟩` for cyclic groups, `⟨A, B | A^p = B^q = (AB)²⟩` otherwise.
    pub fn presentation(self) -> Presentation {
        match self {
            GroupName::Cyclic(k) => Presentation::cyclic(k),
            GroupName::Dic(k) => Presentation::triangle_two_generator(k / 4, 2),
            GroupName::T1 => Presentation::triangle_two_generator(3, 3),
            GroupName::O1 => Presentation::triangle_two_generator(4, 3),
            GroupName::I => Presentation::triangle_two_generator(5, 3),
        }
    }

    /// The `(p, q)` of the two-generator presentation, when there is one.
    pub fn triangle_parameters(self) -> Option<(usize, usize)> {
        match self {
            GroupName::Cyclic(_) => None,
            GroupName::Dic(k) => Some((k / 4, 2)),
            GroupName::T1 => Some((3, 3)),
            GroupName::O1 => Some((4, 3)),
            GroupName::I => Some((5, 3)),
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Cyclic(k) => write!(f, "Z{k}"),
            GroupName::Dic(8) => write!(f, "Q8"),
            GroupName::Dic(16) => write!(f, "Q16"),
            GroupName::Dic(k) => write!(f, "Dic{k}"),
            GroupName::T1 => write!(f, "T1"),
            GroupName::O1 => write!(f, "O1"),
            GroupName::I => write!(f, "I"),
        }
    }
}

impl Serialize for GroupName {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for GroupName {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GroupError::UnknownGroup(s.to_string());
        let num = |t: &str| t.parse::<usize>().ok().filter(|&k| k >= 1);
        match s {
            "T1" => Ok(GroupName::T1),
            "O1" => Ok(GroupName::O1),
            "I" => Ok(GroupName::I),
            "Q8" => Ok(GroupName::Dic(8)),
            "Q16" => Ok(GroupName::Dic(16)),
            _ => {
                if let Some(k) = s.strip_prefix("Dic").and_then(num) {
                    if k % 4 == 0 {
                        return Ok(GroupName::Dic(k));
                    }
                } else if let Some(k) = s.strip_prefix('Z').and_then(num) {
                    return Ok(GroupName::Cyclic(k));
                }
                Err(bad())
            }
        }
    }
}

/// An exact model: the table plus serialized element coordinates.
#[derive(Clone, Debug)]
pub struct QuaternionModel {
    pub name: GroupName,
    pub table: GroupTable,
    pub coordinates: Vec<[serde_json::Value; 4]>,
}

fn half(x: QuadScalar) -> QuadScalar {
    x * QuadScalar::from_ratio(1, 2)
}

/// Generators of the binary polyhedral groups in `Q(√2)` and `Q(√5)`.
pub fn binary_polyhedral_generators(name: GroupName) -> Result<Vec<Quaternion<QuadScalar>>, GroupError> {
    type Q = QuadScalar;
    let h = Q::from_ratio(1, 2);
    let t = Quaternion::new(h.clone(), h.clone(), h.clone(), h.clone());
    match name {
        GroupName::T1 => Ok(vec![Quaternion::i(), t]),
        GroupName::O1 => {
            let r = half(Q::sqrt(2));
            Ok(vec![Quaternion::i(), t, Quaternion::new(r.clone(), r, Q::from_int(0), Q::from_int(0))])
        }
        GroupName::I => {
            let phi = Q::new(Ratio::new(1, 2), Ratio::new(1, 2), 5);
            let phi_inv = phi.recip();
            Ok(vec![Quaternion::i(), Quaternion::new(half(phi_inv), h, half(phi), Q::from_int(0))])
        }
        other => Err(GroupError::UnknownGroup(format!("{other} is not binary polyhedral"))),
    }
}

/// `cos(2π/k) + i sin(2π/k)` in `Q(ζ_M)`, `M = lcm(k, 4)`.
pub fn rotation_quaternion(k: usize) -> Quaternion<CyclotomicScalar> {
    type C = CyclotomicScalar;
    let m = k.lcm(&4) as u32;
    let step = (m as usize / k) as i64;
    let z = C::zeta(m, step);
    let z_inv = C::zeta(m, -step);
    let iota = C::zeta(m, (m / 4) as i64);
    let half = C::from_ratio(1, 2);
    let cos = half.clone() * (z.clone() + z_inv.clone());
    // 1/ι = -ι
    let sin = -(half * iota * (z - z_inv));
    Quaternion::new(cos, sin, C::zero(), C::zero())
}

fn cyclotomic_generators(name: GroupName) -> Vec<Quaternion<CyclotomicScalar>> {
    match name {
        GroupName::Cyclic(k) => vec![rotation_quaternion(k)],
        GroupName::Dic(k) => vec![rotation_quaternion(k / 2), Quaternion::j()],
        _ => unreachable!("only cyclic and dicyclic groups use cyclotomic coordinates"),
    }
}

fn model_from<T: ExactScalar>(name: GroupName, gens: &[Quaternion<T>]) -> Result<QuaternionModel, GroupError> {
    let (elems, table) = quaternion_closure(gens, QUATERNION_CLOSURE_CAP)?;
    let coordinates = elems.iter().map(|q| q.coords().map(|c| c.to_json())).collect();
    Ok(QuaternionModel { name, table, coordinates })
}

/// Unit-quaternion model of `name`.
pub fn quaternion_model(name: GroupName) -> Result<QuaternionModel, GroupError> {
    match name {
        GroupName::T1 | GroupName::O1 | GroupName::I => model_from(name, &binary_polyhedral_generators(name)?),
        GroupName::Cyclic(_) | GroupName::Dic(_) => model_from(name, &cyclotomic_generators(name)),
    }
}

/// Coset-enumeration model of `name`.
pub fn coset_model(name: GroupName) -> Result<GroupTable, GroupError> {
    coset_enumerate(&name.presentation(), DEFAULT_MAX_COSETS)
}

/// A pair `(a, b)` generating `g` with `a^p = b^q = (ab)² = z` for the
/// unique involution `z`, first in table order.
pub fn find_triangle_generators(g: &GroupTable, p: usize, q: usize) -> Option<(usize, usize)> {
    let invs = super::structure::involutions(g);
    let &[z] = invs.as_slice() else { return None };
    let n = g.order();
    let pa: Vec<usize> = (0..n).filter(|&a| g.pow(a, p as i64) == z).collect();
    let qb: Vec<usize> = (0..n).filter(|&b| g.pow(b, q as i64) == z).collect();
    for &a in &pa {
        for &b in &qb {
            if g.pow(g.mul(a, b), 2) == z && g.generated(&[a, b]).count_ones(..) == n {
                return Some((a, b));
            }
        }
    }
    None
}
