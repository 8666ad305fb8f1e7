//! Cross-checks between the braid-word oracle, the exact group engine, the
//! classification tables and the geometric configurations.
//!
//! Every check counts the concrete facts it verified; a run that verified
//! nothing is a failure. Full-order claims that hinge on the central bit for
//! `n` even are graded `skipped-ambiguous` with their projective evidence.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::artin_action::{closure_mod_center, full_order, projective_order, ClosureResult, OrderResult};
use crate::braid_words::{canonical_word, pi, xi, BraidWord, CanonicalName};
use crate::classifier::{
    classify, family_members, maximal_finite_subgroups, murasugi_realizations, torsion_order_exists, torsion_placement,
    two_adic, whole_group, Ambient, GClass, Placement, SubgroupDescriptor,
};
use crate::finite_groups::{is_even_permutation, isomorphism_type, all_permutations, GroupName, GroupTable};
use crate::geometry::{build_configuration, build_equator, fixed_point_placement, Polyhedron};

/// Largest `n` for the braid-word oracle checks.
pub const ORACLE_MAX_N: usize = 10;
/// Largest `n` for any check.
pub const MAX_N: usize = 64;

/// Default cap on closure sizes; `SBRAID_MAX_CLOSURE` overrides it.
pub const DEFAULT_VERIFY_CLOSURE_CAP: usize = 4096;

fn closure_cap() -> usize {
    std::env::var("SBRAID_MAX_CLOSURE").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_VERIFY_CLOSURE_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifierError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("{check} does not apply to n = {n}")]
    OutOfDomain { check: CheckId, n: usize },
    #[error("range {from}..{to} outside 3..={MAX_N}")]
    BadRange { from: usize, to: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    Gamma2Dic,
    Maximal,
    Murasugi,
    ObservedPlacement,
    PlacementGeometry,
    RealizeDic,
    RealizeT1B4,
    RealizeT1B6,
}

impl CheckId {
    pub const ALL: [CheckId; 8] = [
        CheckId::Gamma2Dic,
        CheckId::Maximal,
        CheckId::Murasugi,
        CheckId::ObservedPlacement,
        CheckId::PlacementGeometry,
        CheckId::RealizeDic,
        CheckId::RealizeT1B4,
        CheckId::RealizeT1B6,
    ];

    pub fn token(self) -> &'static str {
        match self {
            CheckId::Gamma2Dic => "GAMMA2-DIC",
            CheckId::Maximal => "MAXIMAL",
            CheckId::Murasugi => "MURASUGI",
            CheckId::ObservedPlacement => "OBSERVED-PLACEMENT",
            CheckId::PlacementGeometry => "PLACEMENT-GEOMETRY",
            CheckId::RealizeDic => "REALIZE-DIC",
            CheckId::RealizeT1B4 => "REALIZE-T1-B4",
            CheckId::RealizeT1B6 => "REALIZE-T1-B6",
        }
    }

    pub fn applies(self, n: usize) -> bool {
        let oracle = (3..=ORACLE_MAX_N).contains(&n);
        match self {
            CheckId::Maximal | CheckId::Murasugi => oracle,
            CheckId::RealizeDic | CheckId::ObservedPlacement => oracle && n >= 4,
            CheckId::RealizeT1B4 => n == 4,
            CheckId::RealizeT1B6 => n == 6,
            CheckId::Gamma2Dic => (4..=MAX_N).contains(&n) && n.is_multiple_of(2),
            CheckId::PlacementGeometry => {
                n <= MAX_N
                    && [Polyhedron::Tetrahedron, Polyhedron::Cube, Polyhedron::Icosahedron]
                        .iter()
                        .any(|&p| build_configuration(p, n).is_ok())
            }
        }
    }

    /// Label of the classification case the check exercises.
    fn case(self) -> &'static str {
        match self {
            CheckId::Gamma2Dic => "dicyclic/gamma2-parity",
            CheckId::Maximal => "maximal/quotients",
            CheckId::Murasugi => "torsion/murasugi",
            CheckId::ObservedPlacement => "placement/fixed-points",
            CheckId::PlacementGeometry => "placement/geometry",
            CheckId::RealizeDic => "realization/Dic4(n-2)",
            CheckId::RealizeT1B4 => "realization/T1-in-B4",
            CheckId::RealizeT1B6 => "realization/T1-in-B6",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for CheckId {
    type Err = VerifierError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let up = s.trim().to_ascii_uppercase();
        if up == "GEOMETRY" {
            return Ok(CheckId::PlacementGeometry);
        }
        CheckId::ALL.into_iter().find(|c| c.token() == up).ok_or_else(|| VerifierError::UnknownCheck(s.to_string()))
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.token())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedAmbiguous,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedAmbiguous => "skipped-ambiguous",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check_id: CheckId,
    pub n: usize,
    pub status: Status,
    pub facts_verified: usize,
    pub details: Value,
    pub case: String,
}

/// Evidence collected while a check runs.
#[derive(Default)]
struct Tally {
    verified: usize,
    ambiguous: usize,
    failures: Vec<Value>,
    evidence: Vec<Value>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: Value) {
        if ok {
            self.verified += 1;
        } else {
            self.failures.push(what);
        }
    }

    fn eq<T: PartialEq + Serialize>(&mut self, fact: &str, observed: T, expected: T) {
        let ok = observed == expected;
        self.check(ok, json!({ "fact": fact, "observed": observed, "expected": expected }));
    }

    fn note(&mut self, v: Value) {
        self.evidence.push(v);
    }

    fn error(&mut self, fact: &str, e: impl fmt::Display) {
        self.failures.push(json!({ "fact": fact, "error": e.to_string() }));
    }

    fn finish(self, check_id: CheckId, n: usize) -> Report {
        let status = if !self.failures.is_empty() || self.verified == 0 {
            Status::Fail
        } else if self.ambiguous > 0 {
            Status::SkippedAmbiguous
        } else {
            Status::Pass
        };
        let mut details = json!({ "evidence": self.evidence });
        if self.ambiguous > 0 {
            details["ambiguous"] = json!(self.ambiguous);
        }
        if !self.failures.is_empty() {
            details["witness"] = json!(self.failures);
        }
        if self.verified == 0 && self.failures.is_empty() {
            details["witness"] = json!("no facts verified");
        }
        Report { check_id, n, status, facts_verified: self.verified, details, case: check_id.case().to_string() }
    }
}

fn word(name: CanonicalName, n: usize) -> BraidWord {
    canonical_word(name, n).expect("catalogue word exists for this n")
}

/// Dihedral group of order `2m`: pairs `(a, b)` standing for `r^a s^b`.
fn dihedral_table(m: usize) -> GroupTable {
    let idx = |a: usize, b: usize| 2 * a + b;
    let mut mul = vec![vec![0; 2 * m]; 2 * m];
    for a in 0..m {
        for b in 0..2 {
            for c in 0..m {
                for d in 0..2 {
                    let rot = if b == 0 { a + c } else { a + m - c };
                    mul[idx(a, b)][idx(c, d)] = idx(rot % m, (b + d) % 2);
                }
            }
        }
    }
    let labels = (0..2 * m).map(|e| format!("r{}s{}", e / 2, e % 2)).collect();
    GroupTable::new(mul, labels).expect("dihedral table")
}

fn alternating4() -> GroupTable {
    let even: Vec<_> = all_permutations(4).into_iter().filter(|p| is_even_permutation(p)).collect();
    GroupTable::from_permutations(&even)
}

fn closure(t: &mut Tally, label: &str, gens: &[BraidWord]) -> Option<ClosureResult> {
    match closure_mod_center(gens, closure_cap()) {
        Ok(c) => Some(c),
        Err(e) => {
            t.error(label, e);
            None
        }
    }
}

/// Checks an image against a reference group: same order, same type.
fn image_matches(t: &mut Tally, label: &str, gens: &[BraidWord], reference: &GroupTable) -> Option<ClosureResult> {
    let c = closure(t, label, gens)?;
    let (got, want) = (isomorphism_type(&c.table), isomorphism_type(reference));
    t.note(json!({ "subgroup": label, "image_order": c.table.order(), "image_type": got.to_string() }));
    t.eq(&format!("{label} image order"), c.table.order(), reference.order());
    t.eq(&format!("{label} image type"), got.to_string(), want.to_string());
    Some(c)
}

/// The union of `G_f` over the non-central elements of a closure, `f` the
/// number of strands their permutation fixes.
fn observed_placement(c: &ClosureResult) -> Result<Placement, usize> {
    let mut classes = vec![];
    for (e, w) in c.endos.iter().zip(&c.words) {
        if e.is_identity() {
            continue;
        }
        let f = pi(w).fixed_points();
        classes.push(GClass::from_index(f).ok_or(f)?);
    }
    Placement::from_classes(classes).ok_or(0)
}

fn check_maximal(n: usize, t: &mut Tally) {
    let maximal = maximal_finite_subgroups(n).unwrap_or_default();
    let (a0, a1, delta, x) =
        (word(CanonicalName::A0, n), word(CanonicalName::A1, n), word(CanonicalName::Delta, n), word(CanonicalName::X, n));
    let sets: [(&str, Vec<BraidWord>, GroupTable, GroupName); 3] = [
        ("⟨α1⟩", vec![a1], GroupTable::cyclic(n - 1), GroupName::Cyclic(2 * (n - 1))),
        ("⟨α0,Δ⟩", vec![a0, delta.clone()], dihedral_table(n), GroupName::Dic(4 * n)),
        ("⟨x,Δ⟩", vec![x, delta], dihedral_table(n - 2), GroupName::Dic(4 * (n - 2))),
    ];
    for (label, gens, reference, binary) in sets {
        if image_matches(t, label, &gens, &reference).is_some() && maximal.contains(&binary) {
            t.eq(&format!("{label} is half of maximal {binary}"), 2 * reference.order(), binary.order());
        }
    }
    t.note(json!({ "maximal": maximal.iter().map(|g| g.to_string()).collect::<Vec<_>>() }));
}

fn check_realize_dic(n: usize, t: &mut Tally) {
    let gens = [word(CanonicalName::X, n), word(CanonicalName::Delta, n)];
    image_matches(t, "⟨α0α2α0⁻¹,Δ⟩", &gens, &dihedral_table(n - 2));
    let d = SubgroupDescriptor::new(GroupName::Dic(4 * (n - 2)), Ambient::DicNMinus2);
    t.check(classify(n, &d).is_ok(), json!({ "fact": "classifier realizes Dic4(n-2)", "descriptor": d.to_string() }));
}

fn check_t1_b4(t: &mut Tally) {
    let gens = [word(CanonicalName::Y, 4), word(CanonicalName::Delta, 4), word(CanonicalName::A1, 4).pow(2)];
    image_matches(t, "⟨y,Δ,α1²⟩", &gens, &alternating4());
}

fn check_t1_b6(t: &mut Tally) {
    let (gamma, delta) = (word(CanonicalName::Gamma, 6), word(CanonicalName::DeltaT1, 6));
    for (label, w) in [("γ³", gamma.pow(3)), ("δ²", delta.pow(2))] {
        let trivial = crate::artin_action::artin_endo(&w).is_identity();
        t.check(trivial, json!({ "fact": format!("{label} projectively trivial") }));
        let v = xi(&w);
        t.note(json!({ "word": label, "xi": v.value(), "modulus": v.modulus() }));
        t.eq(&format!("ξ({label})"), v.value(), 0);
    }
    image_matches(t, "⟨γ,δ⟩", &[gamma, delta], &alternating4());
}

fn check_gamma2(n: usize, t: &mut Tally) {
    let d = xi(&word(CanonicalName::Delta, n));
    t.note(json!({ "xi_delta": d.value(), "modulus": d.modulus() }));
    for big_n in [n, n - 2] {
        let (l, k) = two_adic(big_n);
        for j in 0..=l {
            for q in (1..=k).filter(|q| k % q == 0) {
                let Ok(members) = family_members(n, big_n, j, q) else { continue };
                for s in members {
                    let by_xi = s.generators.iter().all(|g| xi(g).is_zero());
                    t.check(
                        s.in_gamma2() == by_xi,
                        json!({ "fact": "Γ2 membership", "family": s.to_json(), "rule": s.in_gamma2(), "xi": by_xi }),
                    );
                }
            }
        }
    }
}

fn check_murasugi(n: usize, t: &mut Tally) {
    for k in 2..=2 * n {
        let expected = [2 * n, 2 * (n - 1), 2 * (n - 2)].iter().any(|m| m % k == 0);
        t.eq(&format!("order {k} exists"), torsion_order_exists(n, k), expected);
        let words = murasugi_realizations(n, k).unwrap_or_default();
        t.eq(&format!("order {k} realized"), !words.is_empty(), expected);
        for (i, w) in words {
            match full_order(&w) {
                Ok(OrderResult::Exact { order }) => t.eq(&format!("order of α{i}^e for k={k}"), order as usize, k),
                Ok(OrderResult::AmbiguousCentral { m, doubled }) => {
                    let consistent = m as usize == k || doubled as usize == k;
                    t.check(consistent, json!({ "fact": format!("projective order for k={k}"), "m": m, "k": k }));
                    t.ambiguous += 1;
                    t.note(json!({ "k": k, "i": i, "projective_order": m, "full_order": [m, doubled] }));
                }
                Ok(other) => t.check(false, json!({ "fact": format!("order for k={k}"), "observed": other.to_string() })),
                Err(e) => t.error(&format!("order for k={k}"), e),
            }
            if k > 2 {
                t.eq(&format!("α{i} power for k={k} fixes {i} strands"), pi(&w).fixed_points(), i);
            }
        }
    }
    if let Some(g) = whole_group(n) {
        let gens = [BraidWord::generator(n, 1).expect("σ1"), BraidWord::generator(n, 2).expect("σ2")];
        if let Some(c) = closure(t, "B3 mod center", &gens) {
            t.note(json!({ "whole_group": g.to_string(), "mod_center": c.table.order(), "elements": 2 * c.table.order() }));
            t.eq("2·|B3 mod center| = |whole group|", 2 * c.table.order(), g.order());
            t.eq("B3 mod center type", isomorphism_type(&c.table).to_string(), isomorphism_type(&dihedral_table(3)).to_string());
        }
    }
}

fn check_geometry(n: usize, t: &mut Tally) {
    for p in [Polyhedron::Tetrahedron, Polyhedron::Cube, Polyhedron::Icosahedron] {
        let Ok(c) = build_configuration(p, n) else { continue };
        t.check(c.is_invariant(), json!({ "fact": format!("{p} configuration invariant") }));
        for class in c.group.classes() {
            let rot = &c.group.elements[class.representative];
            let d = c.group.lift_descriptor(class.representative).expect("solids have an ambient");
            match (fixed_point_placement(&c, rot), torsion_placement(n, &d)) {
                (Ok(g), Ok(v)) => {
                    let predicted: Vec<_> = v.classes.iter().map(|k| k.contained_in.clone()).collect();
                    t.note(json!({ "polyhedron": p, "rotation_order": class.order, "descriptor": d, "observed": g, "predicted": predicted }));
                    t.check(
                        predicted == [vec![g]],
                        json!({ "fact": format!("{p} {d}"), "observed": g, "predicted": predicted }),
                    );
                }
                (Err(e), _) => t.error(&format!("{p} {d}"), e),
                (_, Err(e)) => t.error(&format!("{p} {d}"), e),
            }
        }
    }
    for poles in 0..=2 {
        let Ok(c) = build_equator(n, poles) else { continue };
        t.check(c.is_invariant(), json!({ "fact": format!("equator with {poles} poles invariant") }));
        let turn = crate::finite_groups::rotation_quaternion(2 * (n - poles)).rotation_matrix();
        let d = SubgroupDescriptor::any(GroupName::Cyclic(2 * (n - poles)));
        match (fixed_point_placement(&c, &turn), torsion_placement(n, &d)) {
            (Ok(g), Ok(v)) => t.check(
                v.classes.iter().any(|k| k.contained_in == [g]),
                json!({ "fact": format!("equator {poles} poles"), "observed": g }),
            ),
            (Err(e), _) => t.error("equator", e),
            (_, Err(e)) => t.error("equator", e),
        }
    }
}

fn observed_vs(t: &mut Tally, label: &str, gens: &[BraidWord], predicted: Placement) {
    let Some(c) = closure(t, label, gens) else { return };
    match observed_placement(&c) {
        Ok(p) => {
            t.note(json!({ "subgroup": label, "observed": p.classes(), "predicted": predicted.classes() }));
            t.check(p == predicted, json!({ "fact": label, "observed": p.classes(), "predicted": predicted.classes() }));
        }
        Err(f) => t.check(false, json!({ "fact": label, "fixed_points": f })),
    }
}

fn predicted(n: usize, d: &str) -> Option<Placement> {
    let d: SubgroupDescriptor = d.parse().ok()?;
    Some(classify(n, &d).ok()?.classes.first()?.placement())
}

fn check_observed(n: usize, t: &mut Tally) {
    let (a0, x, delta) = (word(CanonicalName::A0, n), word(CanonicalName::X, n), word(CanonicalName::Delta, n));
    if n % 2 == 1 {
        let dn = predicted(n, &format!("Dic{}@Dic4n", 4 * n));
        let dn2 = predicted(n, &format!("Dic{}@Dic4(n-2)", 4 * (n - 2)));
        for (label, gens, p) in [("⟨α0,Δ⟩", [a0, delta.clone()], dn), ("⟨x,Δ⟩", [x, delta], dn2)] {
            match p {
                Some(p) => observed_vs(t, label, &gens, p),
                None => t.check(false, json!({ "fact": label, "error": "no classifier verdict" })),
            }
        }
    } else {
        for big_n in [n, n - 2] {
            let (l, k) = two_adic(big_n);
            for j in 0..=l {
                for q in (1..=k).filter(|q| k % q == 0) {
                    for s in family_members(n, big_n, j, q).unwrap_or_default() {
                        let label = format!("N={} j={} q={} i={}", s.big_n, s.j, s.q, s.i);
                        observed_vs(t, &label, &s.generators, s.placement());
                    }
                }
            }
        }
    }
    if n == 4 {
        let gens = [word(CanonicalName::Y, 4), word(CanonicalName::Delta, 4), word(CanonicalName::A1, 4).pow(2)];
        if let Some(p) = predicted(4, "T1@T1") {
            observed_vs(t, "⟨y,Δ,α1²⟩", &gens, p);
        }
    }
    if n == 6 {
        let gens = [word(CanonicalName::Gamma, 6), word(CanonicalName::DeltaT1, 6)];
        if let Some(p) = predicted(6, "T1@O1") {
            observed_vs(t, "⟨γ,δ⟩", &gens, p);
        }
    }
    if let Ok(OrderResult::Exact { order }) = projective_order(&word(CanonicalName::A0, n)) {
        t.eq("projective order of α0", order as usize, n);
    }
}

/// Runs one check at one `n`.
pub fn run_check(check: CheckId, n: usize) -> Result<Report, VerifierError> {
    if !check.applies(n) {
        return Err(VerifierError::OutOfDomain { check, n });
    }
    let mut t = Tally::default();
    match check {
        CheckId::Maximal => check_maximal(n, &mut t),
        CheckId::RealizeDic => check_realize_dic(n, &mut t),
        CheckId::RealizeT1B4 => check_t1_b4(&mut t),
        CheckId::RealizeT1B6 => check_t1_b6(&mut t),
        CheckId::Gamma2Dic => check_gamma2(n, &mut t),
        CheckId::Murasugi => check_murasugi(n, &mut t),
        CheckId::PlacementGeometry => check_geometry(n, &mut t),
        CheckId::ObservedPlacement => check_observed(n, &mut t),
    }
    Ok(t.finish(check, n))
}

/// Every selected check on every `n` in range it applies to, sorted by
/// `(check_id, n)`.
pub fn cross_validate_range(from: usize, to: usize, checks: &[CheckId]) -> Result<Vec<Report>, VerifierError> {
    if from < 3 || from > to || to > MAX_N {
        return Err(VerifierError::BadRange { from, to });
    }
    let mut out = vec![];
    for &c in checks {
        for n in (from..=to).filter(|&n| c.applies(n)) {
            out.push(run_check(c, n)?);
        }
    }
    out.sort_by(|a, b| (a.check_id.token(), a.n).cmp(&(b.check_id.token(), b.n)));
    out.dedup_by(|a, b| a.check_id == b.check_id && a.n == b.n);
    Ok(out)
}

/// Counts by status.
pub fn summarize(reports: &[Report]) -> Value {
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    json!({
        "reports": reports.len(),
        "pass": count(Status::Pass),
        "fail": count(Status::Fail),
        "skipped-ambiguous": count(Status::SkippedAmbiguous),
    })
}

pub fn any_failed(reports: &[Report]) -> bool {
    reports.iter().any(|r| r.status == Status::Fail)
}

#[cfg(test)]
mod tests;
