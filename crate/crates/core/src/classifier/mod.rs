//! The classification of finite subgroups of `B_n(S²)` as functions of `n`:
//! maximal finite subgroups, conjugacy-class counts, torsion realizations,
//! the dicyclic families, placement relative to `G_0, G_1, G_2`, and
//! membership in the commutator subgroup `Γ_2`.
//!
//! `G_i` is the set of conjugates of powers of `α_i`. The three sets pairwise
//! meet in `⟨Δ²⟩` and together exhaust the torsion.

mod descriptor;
mod tables;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::braid_words::{canonical_word, BraidWord, CanonicalName};
use crate::finite_groups::{
    all_subgroups, coset_model, isomorphism_type, quaternion_model, subgroup_classes, GroupName, IsoType,
};

pub use descriptor::{Ambient, SubgroupDescriptor};
use tables::{rows_for, O1Class};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifierError {
    #[error("n = {n} is outside the domain: {reason}")]
    Domain { n: usize, reason: String },
    #[error("{descriptor} is not a subgroup of B_{n}(S²)")]
    NotRealizable { descriptor: String, n: usize },
    #[error("bad descriptor: {0}")]
    BadDescriptor(String),
}

fn domain(n: usize, reason: impl Into<String>) -> ClassifierError {
    ClassifierError::Domain { n, reason: reason.into() }
}

fn check_n(n: usize) -> Result<(), ClassifierError> {
    if n < 3 {
        return Err(domain(n, "need n ≥ 3"));
    }
    Ok(())
}

/// One of the three torsion families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GClass {
    G0,
    G1,
    G2,
}

impl GClass {
    pub const ALL: [GClass; 3] = [GClass::G0, GClass::G1, GClass::G2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<GClass> {
        GClass::ALL.get(i).copied()
    }
}

impl fmt::Display for GClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}", self.index())
    }
}

impl Serialize for GClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A nonempty union of the `G_i`, as a bit set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Placement(u8);

impl Placement {
    pub const G0: Placement = Placement(0b001);
    pub const G1: Placement = Placement(0b010);
    pub const G2: Placement = Placement(0b100);
    pub const G0_G1: Placement = Placement(0b011);
    pub const G2_G1: Placement = Placement(0b110);
    pub const G0_G2: Placement = Placement(0b101);
    pub const ALL: Placement = Placement(0b111);

    pub fn single(c: GClass) -> Placement {
        Placement(1 << c.index())
    }

    pub fn from_classes(cs: impl IntoIterator<Item = GClass>) -> Option<Placement> {
        let bits = cs.into_iter().fold(0u8, |b, c| b | 1 << c.index());
        (bits != 0).then_some(Placement(bits))
    }

    pub fn union(self, other: Placement) -> Placement {
        Placement(self.0 | other.0)
    }

    pub fn contains(self, c: GClass) -> bool {
        self.0 & (1 << c.index()) != 0
    }

    pub fn classes(self) -> Vec<GClass> {
        GClass::ALL.into_iter().filter(|&c| self.contains(c)).collect()
    }

    pub fn is_single(self) -> bool {
        self.0.count_ones() == 1
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.classes().iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("∪"))
    }
}

/// `yes` / `no` membership in `Γ_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Membership {
    Yes,
    No,
}

impl Membership {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Membership::Yes
        } else {
            Membership::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Membership::Yes
    }
}

impl Serialize for Membership {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(if self.is_yes() { "yes" } else { "no" })
    }
}

/// Everything known about one conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    /// The smallest union of `G_i` containing the class.
    pub contained_in: Vec<GClass>,
    /// The `G_i` meeting the class outside `⟨Δ²⟩`; for subgroups of `⟨Δ²⟩`
    /// all three.
    pub meets: Vec<GClass>,
    pub gamma2: Membership,
    /// Label of the classification case the verdict comes from.
    pub case: String,
    /// What tells this class apart from the other one, for two-class types.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub criterion: Option<String>,
}

impl ClassVerdict {
    fn new(p: Placement, gamma2: bool, case: &str, criterion: Option<String>) -> Self {
        ClassVerdict {
            contained_in: p.classes(),
            meets: p.classes(),
            gamma2: Membership::from_bool(gamma2),
            case: case.to_string(),
            criterion,
        }
    }

    pub fn placement(&self) -> Placement {
        Placement::from_classes(self.contained_in.iter().copied()).expect("verdicts are nonempty")
    }
}

/// Placement of each conjugacy class of a descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlacementVerdict {
    pub classes: Vec<PlacementClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlacementClass {
    pub contained_in: Vec<GClass>,
    pub meets: Vec<GClass>,
    pub case: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub criterion: Option<String>,
}

/// `Γ_2` membership of each conjugacy class, in the order of
/// [`torsion_placement`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gamma2Verdict {
    pub classes: Vec<Membership>,
}

/// The full verdict as emitted in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub n: usize,
    pub descriptor: SubgroupDescriptor,
    pub classes: Vec<ClassVerdict>,
}

/// The maximal finite subgroups of `B_n(S²)`.
pub fn maximal_finite_subgroups(n: usize) -> Result<Vec<GroupName>, ClassifierError> {
    check_n(n)?;
    let mut out = Vec::new();
    if n >= 5 {
        out.push(GroupName::Cyclic(2 * (n - 1)));
    }
    out.push(GroupName::Dic(4 * n));
    if n == 5 || n >= 7 {
        out.push(GroupName::Dic(4 * (n - 2)));
    }
    if t1_maximal(n) {
        out.push(GroupName::T1);
    }
    if o1_maximal(n) {
        out.push(GroupName::O1);
    }
    if i_maximal(n) {
        out.push(GroupName::I);
    }
    Ok(out)
}

pub fn t1_maximal(n: usize) -> bool {
    n % 6 == 4
}

pub fn o1_maximal(n: usize) -> bool {
    n.is_multiple_of(6) || n % 6 == 2
}

pub fn i_maximal(n: usize) -> bool {
    matches!(n % 30, 0 | 2 | 12 | 20)
}

/// For `n = 3` the whole group is finite, `B_3(S²) ≅ Dic_12`.
pub fn whole_group(n: usize) -> Option<GroupName> {
    (n == 3).then_some(GroupName::Dic(12))
}

/// `(count, type)` of conjugacy classes of subgroups of a finite whole group.
pub fn whole_group_lattice(n: usize) -> Option<Vec<(usize, String)>> {
    let g = coset_model(whole_group(n)?).ok()?;
    let subs = all_subgroups(&g);
    let mut out: Vec<(usize, usize, String)> = subgroup_classes(&g, &subs)
        .iter()
        .map(|c| {
            let h = &subs[c[0]];
            (h.order(), c.len(), isomorphism_type(&g.subgroup_table(&h.elements)).to_string())
        })
        .collect();
    out.sort();
    Some(out.into_iter().map(|(_, count, ty)| (count, ty)).collect())
}

/// `k | 2(n - i)` for some `i`: the orders of torsion elements.
pub fn torsion_order_exists(n: usize, k: usize) -> bool {
    k >= 1 && (0..=2).any(|i| n > i && (2 * (n - i)).is_multiple_of(k))
}

/// The pairs `(i, α_i^{2(n-i)/k})` with `k | 2(n - i)`.
pub fn murasugi_realizations(n: usize, k: usize) -> Result<Vec<(usize, BraidWord)>, ClassifierError> {
    check_n(n)?;
    if k < 2 {
        return Err(domain(n, "element order must be at least 2"));
    }
    let names = [CanonicalName::A0, CanonicalName::A1, CanonicalName::A2];
    let mut out = Vec::new();
    for (i, name) in names.into_iter().enumerate() {
        let m = 2 * (n - i);
        if m.is_multiple_of(k) {
            let a = canonical_word(name, n).expect("α_i exists for n ≥ 3");
            out.push((i, a.pow((m / k) as i64)));
        }
    }
    Ok(out)
}

fn binary_group(ambient: Ambient) -> Option<GroupName> {
    match ambient {
        Ambient::T1 => Some(GroupName::T1),
        Ambient::O1 => Some(GroupName::O1),
        Ambient::I => Some(GroupName::I),
        _ => None,
    }
}

fn group_of(t: &IsoType) -> Option<GroupName> {
    match t {
        IsoType::Cyclic(k) => Some(GroupName::Cyclic(*k)),
        IsoType::Dicyclic(m) => Some(GroupName::Dic(*m)),
        IsoType::T1 => Some(GroupName::T1),
        IsoType::O1 => Some(GroupName::O1),
        IsoType::I => Some(GroupName::I),
        _ => None,
    }
}

/// Isomorphism types of the subgroups of a binary polyhedral group, read off
/// its subgroup lattice.
pub fn subgroup_types(g: GroupName) -> &'static BTreeSet<String> {
    static CELLS: [OnceLock<BTreeSet<String>>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let idx = match g {
        GroupName::T1 => 0,
        GroupName::O1 => 1,
        GroupName::I => 2,
        _ => panic!("{g} is not binary polyhedral"),
    };
    CELLS[idx].get_or_init(|| {
        let model = quaternion_model(g).expect("binary polyhedral models close");
        all_subgroups(&model.table)
            .iter()
            .filter_map(|h| group_of(&isomorphism_type(&model.table.subgroup_table(&h.elements))))
            .map(|t| t.to_string())
            .collect()
    })
}

fn not_realizable(n: usize, d: &SubgroupDescriptor) -> ClassifierError {
    ClassifierError::NotRealizable { descriptor: d.to_string(), n }
}

fn central_class() -> ClassVerdict {
    ClassVerdict::new(Placement::ALL, false, "center", None)
}

/// Classes of cyclic subgroups of order `k`, from the order alone except for
/// `Z_4` with `n` even.
fn cyclic_classes(n: usize, k: usize) -> Vec<ClassVerdict> {
    if k <= 2 {
        let mut v = central_class();
        v.gamma2 = Membership::from_bool(k == 1 || n.is_multiple_of(2));
        return vec![v];
    }
    if k == 4 && n.is_multiple_of(2) {
        return vec![
            ClassVerdict::new(
                Placement::G0,
                n.is_multiple_of(4),
                "cyclic/Z4-even-n",
                Some("conjugate to ⟨α0^(n/2)⟩; permutation of a generator fixes no point".into()),
            ),
            ClassVerdict::new(
                Placement::G2,
                (n - 2).is_multiple_of(4),
                "cyclic/Z4-even-n",
                Some("conjugate to ⟨α2^((n-2)/2)⟩; permutation of a generator fixes two points".into()),
            ),
        ];
    }
    let i = (0..=2).find(|&i| (2 * (n - i)).is_multiple_of(k)).expect("caller checked realizability");
    let gamma2 = i != 1 && (n - i).is_multiple_of(k);
    vec![ClassVerdict::new(Placement::single(GClass::ALL[i]), gamma2, "cyclic/by-order", None)]
}

fn polyhedral_classes(n: usize, d: &SubgroupDescriptor) -> Result<Vec<ClassVerdict>, ClassifierError> {
    let whole = binary_group(d.ambient).expect("polyhedral ambient");
    let maximal = match whole {
        GroupName::T1 => t1_maximal(n),
        GroupName::O1 => o1_maximal(n),
        _ => i_maximal(n),
    };
    if !maximal || !subgroup_types(whole).contains(&d.group.to_string()) {
        return Err(not_realizable(n, d));
    }
    if d.inside_t1_copy.is_some() && whole != GroupName::O1 {
        return Err(ClassifierError::BadDescriptor("the T1 tag applies inside O1 only".into()));
    }
    if d.order() <= 2 {
        return Ok(cyclic_classes(n, d.order()));
    }
    let rows: Vec<_> = rows_for(d.ambient.token(), d.group)
        .into_iter()
        .filter(|r| match d.inside_t1_copy {
            Some(inside) => (r.class == O1Class::InsideT1) == inside,
            None => true,
        })
        .collect();
    if rows.is_empty() {
        return Err(not_realizable(n, d));
    }
    let two = rows.len() > 1;
    Ok(rows
        .iter()
        .map(|r| {
            let p = r.lookup(n).expect("tables cover every residue where the ambient is maximal");
            let gamma2 = match whole {
                GroupName::T1 => matches!(d.group, GroupName::Cyclic(4) | GroupName::Dic(8)),
                GroupName::I => true,
                _ => r.class == O1Class::InsideT1 || matches!(n % 24, 0 | 2 | 8 | 18),
            };
            let criterion = two.then(|| match r.class {
                O1Class::InsideT1 => "contained in the copy of T1".to_string(),
                _ => "not contained in the copy of T1".to_string(),
            });
            ClassVerdict::new(p, gamma2, r.case, criterion)
        })
        .collect())
}

/// `N = n` or `n - 2` hosting `Dic_{4r}`, preferring a host with `r | N/2`.
fn dicyclic_host(n: usize, r: usize, ambient: Ambient) -> Option<usize> {
    let fits = |big_n: usize| big_n >= 2 && big_n.is_multiple_of(r);
    match ambient {
        Ambient::DicN => fits(n).then_some(n),
        Ambient::DicNMinus2 => fits(n - 2).then_some(n - 2),
        _ => {
            let half = |big_n: usize| big_n.is_multiple_of(2) && fits(big_n) && (big_n / 2).is_multiple_of(r);
            [n, n - 2].into_iter().find(|&m| half(m)).or_else(|| [n, n - 2].into_iter().find(|&m| fits(m)))
        }
    }
}

fn dicyclic_classes(n: usize, d: &SubgroupDescriptor, order: usize) -> Result<Vec<ClassVerdict>, ClassifierError> {
    let r = order / 4;
    let big_n = dicyclic_host(n, r, d.ambient).ok_or_else(|| not_realizable(n, d))?;
    let x = if big_n == n { "α0" } else { "α0α2α0⁻¹" };
    if n % 2 == 1 {
        let i = if big_n == n { GClass::G0 } else { GClass::G2 };
        let p = Placement::single(i).union(Placement::G1);
        return Ok(vec![ClassVerdict::new(p, false, "dicyclic/odd-n", None)]);
    }
    if (big_n / 2) % r != 0 {
        return Ok(vec![ClassVerdict::new(Placement::G0_G2, false, "dicyclic/single-class", None)]);
    }
    let step = big_n / r;
    let family = |i: usize| {
        let spec = DicyclicShape { n, big_n, i };
        let gens = if i == 0 { format!("⟨{x}^{step}, Δ⟩") } else { format!("⟨{x}^{step}, {x}Δ⟩") };
        ClassVerdict::new(spec.placement(), (n / 2 + i).is_multiple_of(2), "dicyclic/two-class", Some(format!("conjugate to {gens}")))
    };
    Ok(vec![family(0), family(1)])
}

/// All classes of `d` with their verdicts.
pub fn classify(n: usize, d: &SubgroupDescriptor) -> Result<Verdict, ClassifierError> {
    check_n(n)?;
    let classes = match (d.group, d.ambient) {
        (_, a) if a.is_polyhedral() => polyhedral_classes(n, d)?,
        (_, _) if d.inside_t1_copy.is_some() => {
            return Err(ClassifierError::BadDescriptor("the T1 tag applies inside O1 only".into()))
        }
        (GroupName::Cyclic(k), ambient) => {
            let ok = match ambient {
                Ambient::DicN => (2 * n).is_multiple_of(k) || k == 4,
                Ambient::DicNMinus2 => n > 3 && ((2 * (n - 2)).is_multiple_of(k) || k == 4),
                _ => torsion_order_exists(n, k),
            };
            if !ok {
                return Err(not_realizable(n, d));
            }
            cyclic_classes(n, k)
        }
        (GroupName::Dic(m), _) => dicyclic_classes(n, d, m)?,
        (g, Ambient::Any) => {
            let ambient = match g {
                GroupName::T1 if t1_maximal(n) => Ambient::T1,
                GroupName::T1 | GroupName::O1 if o1_maximal(n) => Ambient::O1,
                _ => Ambient::I,
            };
            polyhedral_classes(n, &SubgroupDescriptor { ambient, ..*d })?
        }
        _ => return Err(not_realizable(n, d)),
    };
    Ok(Verdict { n, descriptor: *d, classes })
}

pub fn is_realizable(n: usize, d: &SubgroupDescriptor) -> bool {
    classify(n, d).is_ok()
}

pub fn torsion_placement(n: usize, d: &SubgroupDescriptor) -> Result<PlacementVerdict, ClassifierError> {
    let v = classify(n, d)?;
    let classes = v
        .classes
        .into_iter()
        .map(|c| PlacementClass { contained_in: c.contained_in, meets: c.meets, case: c.case, criterion: c.criterion })
        .collect();
    Ok(PlacementVerdict { classes })
}

pub fn gamma2_membership(n: usize, d: &SubgroupDescriptor) -> Result<Gamma2Verdict, ClassifierError> {
    Ok(Gamma2Verdict { classes: classify(n, d)?.classes.iter().map(|c| c.gamma2).collect() })
}

/// Number of conjugacy classes of subgroups isomorphic to `d.group`: two
/// when `n` is even and the group is `Z_4` or `Dic_{4r}` with `r | n/2` or
/// `r | (n-2)/2`, otherwise one.
pub fn conjugacy_class_count(n: usize, d: &SubgroupDescriptor) -> Result<usize, ClassifierError> {
    if !is_realizable(n, d) {
        check_n(n)?;
        return Err(not_realizable(n, d));
    }
    if n % 2 == 1 {
        return Ok(1);
    }
    let two = match d.group {
        GroupName::Cyclic(4) => true,
        GroupName::Dic(m) => {
            let r = m / 4;
            (n / 2).is_multiple_of(r) || ((n - 2) / 2).is_multiple_of(r)
        }
        _ => false,
    };
    Ok(if two { 2 } else { 1 })
}

struct DicyclicShape {
    n: usize,
    big_n: usize,
    i: usize,
}

impl DicyclicShape {
    /// Placement of `⟨x^{2^j q}, x^{iq} Δ⟩` for `j ≥ 1`: the cyclic part lies
    /// in `G_0` (`N = n`) or `G_2` (`N = n-2`); `x^{odd} Δ` is in `G_2` and
    /// `x^{even} Δ` in `G_0`.
    fn placement(&self) -> Placement {
        let cyclic = if self.big_n == self.n { Placement::G0 } else { Placement::G2 };
        let coset = if self.i.is_multiple_of(2) { Placement::G0 } else { Placement::G2 };
        cyclic.union(coset)
    }
}

/// A member `⟨x^{2^j q}, x^{iq} Δ⟩` of a dicyclic family, `N = 2^l k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicyclicFamilySpec {
    pub n: usize,
    pub big_n: usize,
    pub l: u32,
    pub k: usize,
    pub j: u32,
    pub q: usize,
    pub i: usize,
    /// `2^{l+2-j} k / q`
    pub order: usize,
    pub generators: [BraidWord; 2],
}

impl DicyclicFamilySpec {
    /// Members of the same family are conjugate iff `i - i'` is even.
    pub fn conjugate_to(&self, other: &DicyclicFamilySpec) -> bool {
        (self.n, self.big_n, self.j, self.q) == (other.n, other.big_n, other.j, other.q) && self.i % 2 == other.i % 2
    }

    /// In `Γ_2` iff `j ≥ 1` and `n/2 + i` is even.
    pub fn in_gamma2(&self) -> bool {
        self.j >= 1 && (self.n / 2 + self.i).is_multiple_of(2)
    }

    pub fn placement(&self) -> Placement {
        // x^{2^j q} central: the member is the cyclic group ⟨x^{iq}Δ⟩ of order 4
        if self.order == 4 {
            return Placement::single(if self.i.is_multiple_of(2) { GClass::G0 } else { GClass::G2 });
        }
        if self.j == 0 {
            return Placement::G0_G2;
        }
        DicyclicShape { n: self.n, big_n: self.big_n, i: self.i }.placement()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n, "N": self.big_n, "l": self.l, "k": self.k, "j": self.j, "q": self.q, "i": self.i,
            "order": self.order,
            "generators": [self.generators[0].to_string(), self.generators[1].to_string()],
        })
    }
}

/// `N = 2^l k` with `k` odd.
pub fn two_adic(big_n: usize) -> (u32, usize) {
    let l = big_n.trailing_zeros();
    (l, big_n >> l)
}

pub fn dicyclic_family(n: usize, big_n: usize, j: u32, q: usize, i: usize) -> Result<DicyclicFamilySpec, ClassifierError> {
    if n < 4 || n % 2 == 1 {
        return Err(domain(n, "dicyclic families need n even and at least 4"));
    }
    if big_n != n && big_n != n - 2 {
        return Err(domain(n, format!("N = {big_n} is neither n nor n-2")));
    }
    let (l, k) = two_adic(big_n);
    if j > l || q == 0 || k % q != 0 || i >= 1 << j {
        return Err(domain(n, format!("need j ≤ {l}, q | {k}, i < 2^j; got j = {j}, q = {q}, i = {i}")));
    }
    let x = canonical_word(if big_n == n { CanonicalName::A0 } else { CanonicalName::X }, n).expect("n ≥ 4");
    let delta = canonical_word(CanonicalName::Delta, n).expect("n ≥ 4");
    let g1 = x.pow(((1usize << j) * q) as i64);
    let g2 = &x.pow((i * q) as i64) * &delta;
    let order = (1usize << (l + 2 - j)) * k / q;
    Ok(DicyclicFamilySpec { n, big_n, l, k, j, q, i, order, generators: [g1, g2] })
}

/// Every member `i = 0, …, 2^j - 1` of one family.
pub fn family_members(n: usize, big_n: usize, j: u32, q: usize) -> Result<Vec<DicyclicFamilySpec>, ClassifierError> {
    (0..1usize << j).map(|i| dicyclic_family(n, big_n, j, q, i)).collect()
}

/// Summary for `n`: maximal finite subgroups, and the whole group with its
/// subgroup classes when it is finite.
pub fn summary(n: usize) -> Result<serde_json::Value, ClassifierError> {
    let maximal = maximal_finite_subgroups(n)?;
    let mut v = serde_json::json!({ "n": n, "maximal": maximal });
    if let Some(g) = whole_group(n) {
        v["whole_group"] = serde_json::json!(g);
        let lattice = whole_group_lattice(n).unwrap_or_default();
        v["subgroup_classes"] =
            lattice.into_iter().map(|(count, ty)| serde_json::json!({ "type": ty, "classes": count })).collect();
    }
    Ok(v)
}

#[cfg(test)]
mod tests;
