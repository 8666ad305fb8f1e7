use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::structure::{involutions, prime_divisors};
use super::GroupTable;

/// The recognised isomorphism types.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IsoType {
    Cyclic(usize),
    /// Abelian, noncyclic; invariant factors `d_1 | d_2 | …`.
    Abelian(Vec<usize>),
    /// Dihedral of the given order.
    Dihedral(usize),
    /// Dicyclic of the given order `4m`.
    Dicyclic(usize),
    A4,
    S4,
    A5,
    T1,
    O1,
    I,
    Unknown { order: usize },
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoType::Cyclic(k) => write!(f, "Z{k}"),
            IsoType::Abelian(fs) => {
                let parts: Vec<String> = fs.iter().map(|d| format!("Z{d}")).collect();
                write!(f, "{}", parts.join("x"))
            }
            IsoType::Dihedral(k) => write!(f, "D{k}"),
            IsoType::Dicyclic(8) => write!(f, "Q8"),
            IsoType::Dicyclic(16) => write!(f, "Q16"),
            IsoType::Dicyclic(k) => write!(f, "Dic{k}"),
            IsoType::A4 => write!(f, "A4"),
            IsoType::S4 => write!(f, "S4"),
            IsoType::A5 => write!(f, "A5"),
            IsoType::T1 => write!(f, "T1"),
            IsoType::O1 => write!(f, "O1"),
            IsoType::I => write!(f, "I"),
            IsoType::Unknown { order } => write!(f, "unknown of order {order}"),
        }
    }
}

fn census_of(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    pairs.iter().copied().collect()
}

/// Element-order censuses of the non-abelian catalogue groups without an
/// element of index 2.
fn census_table() -> Vec<(IsoType, BTreeMap<usize, usize>)> {
    vec![
        (IsoType::A4, census_of(&[(1, 1), (2, 3), (3, 8)])),
        (IsoType::S4, census_of(&[(1, 1), (2, 9), (3, 8), (4, 6)])),
        (IsoType::A5, census_of(&[(1, 1), (2, 15), (3, 20), (5, 24)])),
        (IsoType::T1, census_of(&[(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)])),
        (IsoType::O1, census_of(&[(1, 1), (2, 1), (3, 8), (4, 18), (6, 8), (8, 12)])),
        (IsoType::I, census_of(&[(1, 1), (2, 1), (3, 20), (4, 30), (5, 24), (6, 20), (10, 24)])),
    ]
}

/// Invariant factors of an abelian group from its p-power element counts.
fn invariant_factors(g: &GroupTable) -> Vec<usize> {
    let n = g.order();
    let orders: Vec<usize> = (0..n).map(|a| g.element_order(a)).collect();
    // for each prime, the exponents e_i of the p-primary part, descending
    let mut primary: Vec<(usize, Vec<u32>)> = Vec::new();
    for p in prime_divisors(n) {
        let mut counts = vec![1usize];
        let mut k = 1u32;
        loop {
            let pk = p.pow(k);
            let c = orders.iter().filter(|&&o| pk % o == 0).count();
            if c == *counts.last().expect("nonempty") {
                break;
            }
            counts.push(c);
            k += 1;
        }
        // log_p(counts[k] / counts[k-1]) = number of factors with exponent ≥ k
        let at_least: Vec<u32> = counts.windows(2).map(|w| (w[1] / w[0]).ilog(p)).collect();
        let r = at_least.first().copied().unwrap_or(0) as usize;
        let mut exps = vec![0u32; r];
        for (idx, &m) in at_least.iter().enumerate() {
            for e in exps.iter_mut().take(m as usize) {
                *e = idx as u32 + 1;
            }
        }
        primary.push((p, exps));
    }
    let len = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    // largest factor collects the largest prime powers
    let mut factors = vec![1usize; len];
    for (p, exps) in &primary {
        for (i, &e) in exps.iter().enumerate() {
            factors[len - 1 - i] *= p.pow(e);
        }
    }
    factors
}

/// Identify `g` against the catalogue by order, commutativity, element-order
/// census and involution count.
pub fn isomorphism_type(g: &GroupTable) -> IsoType {
    let n = g.order();
    let census = g.census();
    if census.contains_key(&n) {
        return IsoType::Cyclic(n);
    }
    if g.is_abelian() {
        return IsoType::Abelian(invariant_factors(g));
    }
    if n.is_multiple_of(2) && census.contains_key(&(n / 2)) {
        let a = (0..n).find(|&x| g.element_order(x) == n / 2).expect("census says it exists");
        let cyc = g.generated(&[a]);
        if involutions(g).len() == 1 {
            return IsoType::Dicyclic(n);
        }
        if (0..n).filter(|&x| !cyc.contains(x)).all(|x| g.element_order(x) == 2) {
            return IsoType::Dihedral(n);
        }
    }
    census_table()
        .into_iter()
        .find(|(_, c)| *c == census)
        .map(|(t, _)| t)
        .unwrap_or(IsoType::Unknown { order: n })
}
