use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::GroupTable;

/// Conjugacy classes, each sorted, listed by least element.
pub fn conjugacy_classes(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = FixedBitSet::with_capacity(n);
    let mut classes = Vec::new();
    for a in 0..n {
        if seen.contains(a) {
            continue;
        }
        let mut class: Vec<usize> = (0..n).map(|x| g.conjugate(x, a)).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            seen.insert(c);
        }
        classes.push(class);
    }
    classes
}

pub fn center(g: &GroupTable) -> Vec<usize> {
    let n = g.order();
    (0..n).filter(|&a| (0..n).all(|b| g.mul(a, b) == g.mul(b, a))).collect()
}

pub fn involutions(g: &GroupTable) -> Vec<usize> {
    (0..g.order()).filter(|&a| g.element_order(a) == 2).collect()
}

pub(crate) fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `true` when `g` has no subgroup `Z_p × Z_p`: no two commuting elements of
/// order `p` generate distinct cyclic subgroups.
pub fn p2_condition(g: &GroupTable) -> bool {
    let n = g.order();
    for p in prime_divisors(n) {
        let of_order_p: Vec<usize> = (0..n).filter(|&a| g.element_order(a) == p).collect();
        for &a in &of_order_p {
            let cyc = g.generated(&[a]);
            for &b in &of_order_p {
                if !cyc.contains(b) && g.mul(a, b) == g.mul(b, a) {
                    return false;
                }
            }
        }
    }
    true
}

/// `true` when every subgroup of order `2p` is cyclic. Such a subgroup has an
/// involution `t` and a normal `⟨a⟩` of order `p`, so it is noncyclic exactly
/// when `t a t⁻¹ = a⁻¹` (for `p = 2`, when `t ≠ a` commute).
pub fn two_p_condition(g: &GroupTable) -> bool {
    let n = g.order();
    if !n.is_multiple_of(2) {
        return true;
    }
    let invs = involutions(g);
    for p in prime_divisors(n) {
        if !n.is_multiple_of(2 * p) {
            continue;
        }
        for a in (0..n).filter(|&a| g.element_order(a) == p) {
            for &t in &invs {
                if t == a {
                    continue;
                }
                let conj = g.conjugate(t, a);
                let dihedral = if p == 2 { conj == a } else { conj == g.inverse(a) };
                if dihedral {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub unique_involution: bool,
    pub center: Vec<usize>,
    pub p2_condition: bool,
    pub two_p_condition: bool,
}

pub fn structure_checks(g: &GroupTable) -> StructureReport {
    StructureReport {
        unique_involution: involutions(g).len() == 1,
        center: center(g),
        p2_condition: p2_condition(g),
        two_p_condition: two_p_condition(g),
    }
}
