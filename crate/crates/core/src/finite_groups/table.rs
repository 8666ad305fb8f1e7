use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::GroupError;

/// A finite group as an explicit multiplication table.
///
/// Elements are `0..order`; `mul[a][b]` is the product `ab`. The identity
/// and inverses are derived at construction and checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    mul: Vec<Vec<usize>>,
    labels: Vec<String>,
    identity: usize,
    inverse: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    order: usize,
    labels: Vec<String>,
    mul: Vec<Vec<usize>>,
}

impl GroupTable {
    /// Validate a table: square, entries in range, Latin rows and columns,
    /// a two-sided identity, and associativity (all triples up to order 64,
    /// a fixed sample above that).
    pub fn new(mul: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self, GroupError> {
        let n = mul.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if labels.len() != n {
            return Err(GroupError::InvalidTable(format!("{} labels for order {n}", labels.len())));
        }
        for (a, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::InvalidTable(format!("row {a} has length {}", row.len())));
            }
            let mut seen = FixedBitSet::with_capacity(n);
            for &c in row {
                if c >= n || seen.put(c) {
                    return Err(GroupError::InvalidTable(format!("row {a} is not a permutation")));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| GroupError::InvalidTable("no identity".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            let b = (0..n).find(|&b| mul[a][b] == identity).expect("Latin row contains identity");
            if mul[b][a] != identity {
                return Err(GroupError::InvalidTable(format!("element {a} has no two-sided inverse")));
            }
            inverse[a] = b;
        }
        let t = GroupTable { mul, labels, identity, inverse };
        t.check_associativity()?;
        Ok(t)
    }

    fn check_associativity(&self) -> Result<(), GroupError> {
        let n = self.order();
        let assoc = |a: usize, b: usize, c: usize| self.mul[self.mul[a][b]][c] == self.mul[a][self.mul[b][c]];
        let bad = if n <= 64 {
            (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))).find(|&(a, b, c)| !assoc(a, b, c))
        } else {
            // deterministic sample; triples spread by coprime strides
            (0..20_000usize).map(|t| (t % n, (t * 7 + 3) % n, (t * 13 + 5) % n)).find(|&(a, b, c)| !assoc(a, b, c))
        };
        match bad {
            Some((a, b, c)) => Err(GroupError::InvalidTable(format!("not associative at ({a}, {b}, {c})"))),
            None => Ok(()),
        }
    }

    /// Relabel so that elements appear in the order of `perm`, where
    /// `perm[new] = old`.
    pub fn reindexed(&self, perm: &[usize]) -> GroupTable {
        let n = self.order();
        let mut pos = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            pos[old] = new;
        }
        let mul = perm.iter().map(|&a| perm.iter().map(|&b| pos[self.mul[a][b]]).collect()).collect();
        let labels = perm.iter().map(|&a| self.labels[a].clone()).collect();
        GroupTable::new(mul, labels).expect("relabelled table stays valid")
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inverse[a] } else { a };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul[acc][base])
    }

    /// `g a g⁻¹`.
    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul[self.mul[g][a]][self.inverse[g]]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul[x][a];
            k += 1;
        }
        k
    }

    /// Number of elements of each order.
    pub fn census(&self) -> BTreeMap<usize, usize> {
        let mut c = BTreeMap::new();
        for a in 0..self.order() {
            *c.entry(self.element_order(a)).or_insert(0) += 1;
        }
        c
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// The subgroup generated by `gens`, as a membership bitset.
    pub fn generated(&self, gens: &[usize]) -> FixedBitSet {
        let n = self.order();
        let mut set = FixedBitSet::with_capacity(n);
        set.insert(self.identity);
        let mut queue = vec![self.identity];
        while let Some(a) = queue.pop() {
            for &g in gens {
                let b = self.mul[a][g];
                if !set.put(b) {
                    queue.push(b);
                }
            }
        }
        set
    }

    /// The subtable on a subgroup given as a sorted element list.
    pub fn subgroup_table(&self, elems: &[usize]) -> GroupTable {
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &a) in elems.iter().enumerate() {
            pos[a] = i;
        }
        let mul = elems.iter().map(|&a| elems.iter().map(|&b| pos[self.mul[a][b]]).collect()).collect();
        let labels = elems.iter().map(|&a| self.labels[a].clone()).collect();
        GroupTable::new(mul, labels).expect("subset closed under multiplication")
    }

    /// The quotient by a normal subgroup, cosets numbered by least element.
    pub fn quotient(&self, normal: &[usize]) -> Result<GroupTable, GroupError> {
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if coset_of[a] != usize::MAX {
                continue;
            }
            for &h in normal {
                coset_of[self.mul[a][h]] = reps.len();
            }
            reps.push(a);
        }
        if reps.len() * normal.len() != n {
            return Err(GroupError::InvalidTable("quotient by a non-subgroup".into()));
        }
        let mut mul = vec![vec![0; reps.len()]; reps.len()];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                mul[i][j] = coset_of[self.mul[a][b]];
            }
        }
        // well-definedness: left cosets must also be right cosets
        for &a in &reps {
            for &h in normal {
                if coset_of[self.mul[h][a]] != coset_of[a] {
                    return Err(GroupError::InvalidTable("quotient by a non-normal subgroup".into()));
                }
            }
        }
        let labels = reps.iter().map(|&a| self.labels[a].clone()).collect();
        GroupTable::new(mul, labels)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableJson { order: self.order(), labels: self.labels.clone(), mul: self.mul.clone() })
            .expect("table serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<GroupTable, GroupError> {
        let t: TableJson = serde_json::from_value(v.clone()).map_err(|e| GroupError::InvalidTable(e.to_string()))?;
        if t.order != t.mul.len() {
            return Err(GroupError::InvalidTable("order disagrees with table size".into()));
        }
        GroupTable::new(t.mul, t.labels)
    }

    /// Cyclic group of order `m`, elements `0..m` under addition.
    pub fn cyclic(m: usize) -> GroupTable {
        let mul = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        GroupTable::new(mul, (0..m).map(|a| a.to_string()).collect()).expect("cyclic table")
    }

    /// Direct product, element `(a, b)` numbered `a * |h| + b`.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> GroupTable {
        let (m, k) = (g.order(), h.order());
        let mut mul = vec![vec![0; m * k]; m * k];
        for a in 0..m * k {
            for b in 0..m * k {
                mul[a][b] = g.mul(a / k, b / k) * k + h.mul(a % k, b % k);
            }
        }
        let labels = (0..m * k).map(|a| format!("({},{})", g.label(a / k), h.label(a % k))).collect();
        GroupTable::new(mul, labels).expect("direct product table")
    }

    /// Symmetric group on `points` letters, elements in lexicographic order
    /// of image lists; products applied left to right.
    pub fn symmetric(points: usize) -> GroupTable {
        let perms = all_permutations(points);
        Self::from_permutations(&perms)
    }

    /// The group table of a list of permutations closed under composition
    /// (first factor applied first).
    pub fn from_permutations(perms: &[Vec<usize>]) -> GroupTable {
        let index: std::collections::HashMap<&Vec<usize>, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mul = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let pq: Vec<usize> = p.iter().map(|&i| q[i]).collect();
                        index[&pq]
                    })
                    .collect()
            })
            .collect();
        let labels = perms.iter().map(|p| format!("{p:?}")).collect();
        GroupTable::new(mul, labels).expect("closed permutation set")
    }
}

/// All permutations of `0..k` in lexicographic order.
pub fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Parity of a permutation of `0..k`.
pub fn is_even_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for s in 0..p.len() {
        let mut i = s;
        let mut len = 0;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}
