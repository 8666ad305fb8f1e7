use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use super::{isomorphism_type, GroupTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: Vec<usize>,
    /// A generating set found during enumeration.
    pub generators: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&a| other.contains(a))
    }
}

/// Every subgroup exactly once, by extension `⟨H, g⟩` from the cyclic
/// subgroups to a fixpoint. Sorted by (order, elements).
pub fn all_subgroups(g: &GroupTable) -> Vec<Subgroup> {
    let n = g.order();
    // one generator per cyclic subgroup
    let mut cyclic_gens = Vec::new();
    let mut cyclic_sets: HashSet<FixedBitSet> = HashSet::new();
    for a in 0..n {
        if cyclic_sets.insert(g.generated(&[a])) {
            cyclic_gens.push(a);
        }
    }
    let mut found: HashSet<FixedBitSet> = HashSet::new();
    let mut out: Vec<(FixedBitSet, Vec<usize>)> = Vec::new();
    let mut queue = VecDeque::new();
    for &a in &cyclic_gens {
        let set = g.generated(&[a]);
        if found.insert(set.clone()) {
            out.push((set.clone(), vec![a]));
            queue.push_back((set, vec![a]));
        }
    }
    while let Some((set, gens)) = queue.pop_front() {
        for &c in &cyclic_gens {
            if set.contains(c) {
                continue;
            }
            let mut more = gens.clone();
            more.push(c);
            let bigger = g.generated(&more);
            if found.insert(bigger.clone()) {
                out.push((bigger.clone(), more.clone()));
                queue.push_back((bigger, more));
            }
        }
    }
    let mut subs: Vec<Subgroup> = out
        .into_iter()
        .map(|(set, generators)| Subgroup { elements: set.ones().collect(), generators })
        .collect();
    subs.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    subs
}

/// Whether `h` is normal in `g`.
pub fn is_normal(g: &GroupTable, h: &Subgroup) -> bool {
    (0..g.order()).all(|x| h.elements.iter().all(|&a| h.contains(g.conjugate(x, a))))
}

/// Subgroups grouped into conjugacy classes, each class listed by index
/// into `subs`.
pub fn subgroup_classes(g: &GroupTable, subs: &[Subgroup]) -> Vec<Vec<usize>> {
    let mut class_of = vec![usize::MAX; subs.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..subs.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![i];
        class_of[i] = id;
        for x in 0..g.order() {
            let mut conj: Vec<usize> = subs[i].elements.iter().map(|&a| g.conjugate(x, a)).collect();
            conj.sort_unstable();
            if let Some(j) = subs.iter().position(|s| s.elements == conj) {
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    classes
}

/// Covering relations `(smaller, larger)` of the subgroup lattice.
pub fn covering_pairs(subs: &[Subgroup]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for (i, h) in subs.iter().enumerate() {
        for (j, k) in subs.iter().enumerate() {
            if h.order() >= k.order() || k.order() % h.order() != 0 || !h.is_subgroup_of(k) {
                continue;
            }
            let between = subs.iter().any(|m| {
                m.order() > h.order() && m.order() < k.order() && h.is_subgroup_of(m) && m.is_subgroup_of(k)
            });
            if !between {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Graphviz rendering of the subgroup lattice.
pub fn lattice_dot(g: &GroupTable, name: &str) -> String {
    let subs = all_subgroups(g);
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{name}\" {{");
    let _ = writeln!(s, "  rankdir=BT;");
    for (i, h) in subs.iter().enumerate() {
        let ty = isomorphism_type(&g.subgroup_table(&h.elements));
        let _ = writeln!(s, "  s{i} [label=\"{} {}\"];", h.order(), ty);
    }
    for (i, j) in covering_pairs(&subs) {
        let _ = writeln!(s, "  s{i} -> s{j};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_lattice() {
        let subs = all_subgroups(&GroupTable::cyclic(4));
        let orders: Vec<usize> = subs.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 4]);
        let subs12 = all_subgroups(&GroupTable::cyclic(12));
        assert_eq!(subs12.len(), 6);
    }

    #[test]
    fn s4_has_thirty_subgroups() {
        let g = GroupTable::symmetric(4);
        let subs = all_subgroups(&g);
        assert_eq!(subs.len(), 30);
        assert_eq!(subgroup_classes(&g, &subs).len(), 11);
        let normal = subs.iter().filter(|h| is_normal(&g, h)).count();
        assert_eq!(normal, 4);
    }

    #[test]
    fn dot_mentions_every_subgroup() {
        let dot = lattice_dot(&GroupTable::symmetric(3), "S3");
        assert_eq!(dot.matches("[label=").count(), 6);
        assert!(dot.contains("-> "));
    }
}
