//! Acceptance gate: one pass/fail line per criterion, exact arithmetic throughout.

use std::collections::BTreeSet;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use sbraid_core::artin_action::{
    artin_endo, artin_endo_literal, closure_mod_center, full_order, projective_order, ClosureResult, OrderResult,
    DEFAULT_CLOSURE_CAP,
};
use sbraid_core::braid_words::{canonical_word, pi, xi, BraidWord, CanonicalName};
use sbraid_core::classifier::{
    conjugacy_class_count, family_members, gamma2_membership, is_realizable, maximal_finite_subgroups,
    murasugi_realizations, torsion_placement, two_adic, GClass, Membership, SubgroupDescriptor,
};
use sbraid_core::finite_groups::{
    all_subgroups, coset_enumerate, involutions, isomorphism_type, p2_condition, quaternion_model, two_p_condition,
    GroupName, GroupTable, IsoType, Presentation, DEFAULT_MAX_COSETS,
};
use sbraid_core::geometry::{build_configuration, fixed_point_placement, Polyhedron};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn w(name: CanonicalName, n: usize) -> BraidWord {
    canonical_word(name, n).unwrap()
}

fn sigma(n: usize, i: i32) -> BraidWord {
    BraidWord::generator(n, i).unwrap()
}

fn close(gens: &[BraidWord]) -> Result<ClosureResult, String> {
    closure_mod_center(gens, DEFAULT_CLOSURE_CAP).map_err(|e| e.to_string())
}

/// Union of the fixed-point counts of π over the non-identity elements.
fn observed_fixed_counts(c: &ClosureResult) -> BTreeSet<usize> {
    let id = c.table.identity();
    (0..c.table.order()).filter(|&a| a != id).map(|a| pi(&c.words[a]).fixed_points()).collect()
}

/// Dihedral group of order `2m` as permutations of the `m`-gon.
fn dihedral(m: usize) -> GroupTable {
    let rot: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
    let refl: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
    let mut perms = vec![(0..m).collect::<Vec<_>>()];
    let mut frontier = perms.clone();
    while let Some(p) = frontier.pop() {
        for g in [&rot, &refl] {
            let q: Vec<usize> = p.iter().map(|&i| g[i]).collect();
            if !perms.contains(&q) {
                perms.push(q.clone());
                frontier.push(q);
            }
        }
    }
    GroupTable::from_permutations(&perms)
}

fn alternating4() -> GroupTable {
    let perms: Vec<Vec<usize>> = sbraid_core::finite_groups::all_permutations(4)
        .into_iter()
        .filter(|p| sbraid_core::finite_groups::is_even_permutation(p))
        .collect();
    GroupTable::from_permutations(&perms)
}

fn same_type(a: &GroupTable, b: &GroupTable) -> bool {
    a.census() == b.census() && isomorphism_type(a) == isomorphism_type(b)
}

fn oracle_well_defined() -> Outcome {
    for n in 2..=10 {
        ensure!(artin_endo(&w(CanonicalName::Relator, n)).is_identity(), "relator not trivial at n={n}");
        ensure!(artin_endo(&w(CanonicalName::FullTwist, n)).is_identity(), "Δ² not trivial at n={n}");
        // the literal action of the relator is inner, by a single generator
        ensure!(
            artin_endo_literal(&w(CanonicalName::Relator, n)).inner_by_letter().is_some(),
            "relator acts by a non-inner map at n={n}"
        );
        for i in 1..n as i32 {
            for j in 1..n as i32 {
                let (a, b) = (sigma(n, i), sigma(n, j));
                if (i - j).abs() == 1 {
                    let l = &(&a * &b) * &a;
                    let r = &(&b * &a) * &b;
                    ensure!(artin_endo(&l) == artin_endo(&r), "braid relation fails for σ{i}, σ{j} at n={n}");
                } else if (i - j).abs() >= 2 {
                    ensure!(artin_endo(&(&a * &b)) == artin_endo(&(&b * &a)), "σ{i}, σ{j} do not commute at n={n}");
                }
            }
        }
    }
    Ok(())
}

fn projective_roots() -> Outcome {
    for n in 3..=10 {
        for (i, name) in [CanonicalName::A0, CanonicalName::A1, CanonicalName::A2].into_iter().enumerate() {
            let a = w(name, n);
            let got = projective_order(&a).map_err(|e| e.to_string())?;
            ensure!(got == OrderResult::Exact { order: (n - i) as u64 }, "α{i} at n={n}: {got}");
            // independent: the (n−i)th power is Δ², no smaller power is trivial
            ensure!(artin_endo(&a.pow((n - i) as i64)).is_identity(), "α{i}^{} nontrivial at n={n}", n - i);
            for k in 1..n - i {
                ensure!(!artin_endo(&a.pow(k as i64)).is_identity(), "α{i}^{k} trivial at n={n}");
            }
        }
    }
    Ok(())
}

fn odd_full_orders() -> Outcome {
    for n in [3, 5, 7, 9] {
        for (i, name) in [CanonicalName::A0, CanonicalName::A1, CanonicalName::A2].into_iter().enumerate() {
            let got = full_order(&w(name, n)).map_err(|e| e.to_string())?;
            let want = 2 * (n - i) as u64;
            ensure!(got == OrderResult::Exact { order: want }, "α{i} at n={n}: {got}, want {want}");
        }
    }
    Ok(())
}

fn m03_enumeration() -> Outcome {
    let c = close(&[sigma(3, 1), sigma(3, 2)])?;
    ensure!(c.table.order() == 6, "order {}", c.table.order());
    ensure!(same_type(&c.table, &GroupTable::symmetric(3)), "census {:?}", c.table.census());
    // Δ² is the unique involution of B3(S²), so the group has 12 elements
    let twist = w(CanonicalName::FullTwist, 3);
    ensure!(full_order(&twist).map_err(|e| e.to_string())? == OrderResult::Exact { order: 2 }, "Δ² not of order 2");
    ensure!(2 * c.table.order() == GroupName::Dic(12).order(), "whole group order");
    Ok(())
}

fn dihedral_images() -> Outcome {
    for n in 4..=8 {
        let c = close(&[w(CanonicalName::A0, n), w(CanonicalName::Delta, n)])?;
        ensure!(c.table.order() == 2 * n, "⟨α0,Δ⟩ at n={n}: order {}", c.table.order());
        ensure!(same_type(&c.table, &dihedral(n)), "⟨α0,Δ⟩ at n={n}: census {:?}", c.table.census());
    }
    for n in [5, 7, 8] {
        let c = close(&[w(CanonicalName::X, n), w(CanonicalName::Delta, n)])?;
        ensure!(c.table.order() == 2 * (n - 2), "⟨x,Δ⟩ at n={n}: order {}", c.table.order());
        ensure!(same_type(&c.table, &dihedral(n - 2)), "⟨x,Δ⟩ at n={n}: census {:?}", c.table.census());
    }
    Ok(())
}

fn t1_realizations() -> Outcome {
    let a4 = alternating4();
    let c = close(&[w(CanonicalName::Y, 4), w(CanonicalName::Delta, 4), w(CanonicalName::A1, 4).pow(2)])?;
    ensure!(c.table.order() == 12 && same_type(&c.table, &a4), "B4 image {:?}", c.table.census());
    let (g, d) = (w(CanonicalName::Gamma, 6), w(CanonicalName::DeltaT1, 6));
    for (name, x) in [("γ³", g.pow(3)), ("δ²", d.pow(2))] {
        ensure!(artin_endo(&x).is_identity(), "{name} not projectively trivial");
        let v = xi(&x);
        ensure!(v.modulus() == 10 && v.value() == 0, "ξ({name}) = {} mod {}", v.value(), v.modulus());
    }
    let c = close(&[g, d])?;
    ensure!(c.table.order() == 12 && same_type(&c.table, &a4), "B6 image {:?}", c.table.census());
    Ok(())
}

fn presentation_orders() -> Outcome {
    let mut cases: Vec<(GroupName, Presentation)> = vec![
        (GroupName::T1, Presentation::triangle(3, 3, 2)),
        (GroupName::O1, Presentation::triangle(4, 3, 2)),
        (GroupName::I, Presentation::triangle(5, 3, 2)),
    ];
    for m in 2..=12 {
        cases.push((GroupName::Dic(4 * m), Presentation::triangle(m, 2, 2)));
    }
    for (name, p) in cases {
        let coset = coset_enumerate(&p, DEFAULT_MAX_COSETS).map_err(|e| e.to_string())?;
        let quat = quaternion_model(name).map_err(|e| e.to_string())?;
        ensure!(coset.order() == name.order(), "{name}: coset order {}", coset.order());
        ensure!(quat.table.order() == name.order(), "{name}: quaternion order {}", quat.table.order());
        ensure!(coset.census() == quat.table.census(), "{name}: censuses differ");
        let invs = involutions(&quat.table);
        ensure!(invs.len() == 1 && involutions(&coset).len() == 1, "{name}: involutions {invs:?}");
        let (e, t) = (&quat.coordinates[quat.table.identity()], &quat.coordinates[invs[0]]);
        ensure!(e[1..] == t[1..] && e[0] != t[0], "{name}: involution is not −1: {t:?}");
    }
    Ok(())
}

/// Every subgroup of order `p²` and of order `2p` is cyclic.
fn periodic_by_subgroups(g: &GroupTable) -> (bool, bool) {
    let primes: Vec<usize> = (2..=g.order()).filter(|&p| g.order().is_multiple_of(p) && (2..p).all(|d| p % d != 0)).collect();
    let mut p2 = true;
    let mut two_p = true;
    for s in all_subgroups(g) {
        let cyclic = matches!(isomorphism_type(&g.subgroup_table(&s.elements)), IsoType::Cyclic(_));
        for &p in &primes {
            if s.order() == p * p && !cyclic {
                p2 = false;
            }
            if s.order() == 2 * p && !cyclic {
                two_p = false;
            }
        }
    }
    (p2, two_p)
}

fn periodicity_conditions() -> Outcome {
    let mut catalog = vec![GroupName::T1, GroupName::O1, GroupName::I];
    catalog.extend((2..=12).map(|m| GroupName::Dic(4 * m)));
    catalog.extend((1..=12).map(GroupName::Cyclic));
    for name in catalog {
        let g = quaternion_model(name).map_err(|e| e.to_string())?.table;
        ensure!(p2_condition(&g) && two_p_condition(&g), "{name} fails");
        ensure!(periodic_by_subgroups(&g) == (true, true), "{name} has a noncyclic p² or 2p subgroup");
    }
    let klein = GroupTable::direct_product(&GroupTable::cyclic(2), &GroupTable::cyclic(2));
    ensure!(!p2_condition(&klein) && !two_p_condition(&klein), "Z2×Z2 passes");
    ensure!(periodic_by_subgroups(&klein) == (false, false), "Z2×Z2 oracle");
    Ok(())
}

/// Each element order of `g` divides `2n`, `2(n−1)` or `2(n−2)`.
fn orders_admissible(n: usize, g: GroupName) -> Result<bool, String> {
    let t = quaternion_model(g).map_err(|e| e.to_string())?.table;
    Ok(t.census().keys().all(|&k| [2 * n, 2 * (n - 1), 2 * (n - 2)].iter().any(|m| m % k == 0)))
}

fn classifier_spot_values() -> Outcome {
    let set = |n| -> Result<BTreeSet<String>, String> {
        Ok(maximal_finite_subgroups(n).map_err(|e| e.to_string())?.iter().map(|g| g.to_string()).collect())
    };
    let names = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
    ensure!(set(4)? == names(&["Q16", "T1"]), "n=4: {:?}", set(4)?);
    ensure!(set(5)? == names(&["Z8", "Dic20", "Dic12"]), "n=5: {:?}", set(5)?);
    ensure!(set(6)? == names(&["Z10", "Dic24", "O1"]), "n=6: {:?}", set(6)?);
    for n in 4..=64 {
        let max = maximal_finite_subgroups(n).map_err(|e| e.to_string())?;
        ensure!(max.contains(&GroupName::I) == [0, 2, 12, 20].contains(&(n % 30)), "I at n={n}");
        for g in max {
            ensure!(orders_admissible(n, g)?, "{g} at n={n} has an inadmissible element order");
        }
    }
    Ok(())
}

fn conjugacy_counts() -> Outcome {
    for n in 4..=16 {
        let mut descriptors = vec![SubgroupDescriptor::any(GroupName::Cyclic(4))];
        descriptors.extend((2..=n).map(|r| SubgroupDescriptor::any(GroupName::Dic(4 * r))));
        for d in descriptors.into_iter().filter(|d| is_realizable(n, d)) {
            let got = conjugacy_class_count(n, &d).map_err(|e| e.to_string())?;
            let r = d.order() / 4;
            let want = if n % 2 == 0 && (r == 1 || (n / 2) % r == 0 || ((n - 2) / 2) % r == 0) { 2 } else { 1 };
            ensure!(got == want, "n={n} {}: {got}, want {want}", d.group);
            if n % 2 == 1 {
                ensure!(got == 1, "odd n={n} {}: {got}", d.group);
            }
            if got == 2 && n <= 8 {
                two_classes_separated(n, r)?;
            }
        }
    }
    Ok(())
}

/// Two realizations of the order-4r group whose π-fixed-point profiles
/// differ, so they cannot be conjugate.
fn two_classes_separated(n: usize, r: usize) -> Outcome {
    let delta = w(CanonicalName::Delta, n);
    let (x, big_n) = if (n / 2).is_multiple_of(r) { (w(CanonicalName::A0, n), n) } else { (w(CanonicalName::X, n), n - 2) };
    let c = x.pow((big_n / r) as i64);
    let (a, b) = if r == 1 {
        (close(std::slice::from_ref(&delta))?, close(&[&x * &delta])?)
    } else {
        (close(&[c.clone(), delta.clone()])?, close(&[c, &x * &delta])?)
    };
    ensure!(a.table.order() == 2 * r && b.table.order() == 2 * r, "n={n} r={r}: image orders");
    ensure!(observed_fixed_counts(&a) != observed_fixed_counts(&b), "n={n} r={r}: profiles agree");
    Ok(())
}

fn gamma2_rule() -> Outcome {
    for n in [4, 6, 8, 10, 12] {
        for big_n in [n, n - 2] {
            let (l, k) = two_adic(big_n);
            for j in 0..=l {
                for q in (1..=k).filter(|q| k % q == 0) {
                    for s in family_members(n, big_n, j, q).map_err(|e| e.to_string())? {
                        let by_xi = s.generators.iter().all(|g| xi(g).is_zero());
                        // x^{2^0 q} has odd exponent sum, so j = 0 never lies in Γ2
                        let rule = j >= 1 && (n / 2 + s.i) % 2 == 0;
                        ensure!(by_xi == rule, "n={n} N={big_n} j={j} q={q} i={}: ξ says {by_xi}", s.i);
                        ensure!(s.in_gamma2() == rule, "family rule at n={n} N={big_n} j={j} q={q} i={}", s.i);
                        let g = if s.order == 4 { GroupName::Cyclic(4) } else { GroupName::Dic(s.order) };
                        let v = gamma2_membership(n, &SubgroupDescriptor::any(g)).map_err(|e| e.to_string())?;
                        ensure!(
                            v.classes.contains(&Membership::from_bool(by_xi)),
                            "n={n} {g}: classifier {:?} lacks {by_xi}",
                            v.classes
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn geometry_cross_validation() -> Outcome {
    let mut cases = vec![];
    for n in 1..=62 {
        cases.push((Polyhedron::Cube, n));
    }
    for k in 0..=2 {
        cases.push((Polyhedron::Tetrahedron, 6 * k + 4));
        for r in [0, 2, 12, 20] {
            cases.push((Polyhedron::Icosahedron, 30 * k + r));
        }
    }
    let mut built = 0;
    for (p, n) in cases {
        let Ok(c) = build_configuration(p, n) else { continue };
        built += 1;
        ensure!(c.points.len() == n && c.is_invariant(), "{p} n={n} not invariant");
        for class in c.group.classes() {
            let m = &c.group.elements[class.representative];
            let observed = fixed_point_placement(&c, m).map_err(|e| e.to_string())?;
            let d = c.group.lift_descriptor(class.representative).ok_or("no lift")?;
            let v = torsion_placement(n, &d).map_err(|e| e.to_string())?;
            ensure!(v.classes.len() == 1, "{p} n={n} {d}: {} classes", v.classes.len());
            ensure!(v.classes[0].contained_in == vec![observed], "{p} n={n} {d}: observed {observed:?}");
        }
    }
    ensure!(built == 20 + 3 + 10, "built {built} configurations");
    Ok(())
}

fn murasugi_coverage() -> Outcome {
    for n in [5, 7] {
        for k in 2..=4 * n {
            let words = murasugi_realizations(n, k).map_err(|e| e.to_string())?;
            let divides = [2 * n, 2 * (n - 1), 2 * (n - 2)].iter().any(|m| m % k == 0);
            ensure!(words.is_empty() != divides, "n={n} k={k}");
            for (i, word) in words {
                let got = full_order(&word).map_err(|e| e.to_string())?;
                ensure!(got == OrderResult::Exact { order: k as u64 }, "n={n} k={k} α{i}: {got}");
                if k > 2 {
                    ensure!(pi(&word).fixed_points() == i, "n={n} k={k}: α{i} power fixes the wrong strands");
                    let v = torsion_placement(n, &SubgroupDescriptor::any(GroupName::Cyclic(k)));
                    let v = v.map_err(|e| e.to_string())?;
                    let placed = v.classes.iter().any(|c| c.contained_in.contains(&GClass::from_index(i).unwrap()));
                    ensure!(placed, "n={n} Z{k} not placed in G{i}");
                }
            }
        }
    }
    Ok(())
}

fn honesty_guard() -> Outcome {
    for n in (4..=10).step_by(2) {
        let got = full_order(&w(CanonicalName::A1, n)).map_err(|e| e.to_string())?;
        let m = (n - 1) as u64;
        ensure!(got == OrderResult::AmbiguousCentral { m, doubled: 2 * m }, "n={n}: {got}");
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 14] = [
        ("oracle well-definedness", oracle_well_defined),
        ("projective roots", projective_roots),
        ("exact orders for odd n", odd_full_orders),
        ("M03 enumeration", m03_enumeration),
        ("dihedral images", dihedral_images),
        ("T1 realizations", t1_realizations),
        ("presentation orders", presentation_orders),
        ("periodicity conditions", periodicity_conditions),
        ("classifier spot values", classifier_spot_values),
        ("conjugacy counts", conjugacy_counts),
        ("commutator subgroup rule", gamma2_rule),
        ("geometry cross-validation", geometry_cross_validation),
        ("Murasugi coverage", murasugi_coverage),
        ("honesty guard", honesty_guard),
    ];
    let mut failed = vec![];
    // written straight to stdout so the lines survive output capture
    let mut out = std::io::stdout();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let line = match &outcome {
            Ok(()) => format!("criterion {:>2} {name}: pass\n", i + 1),
            Err(why) => format!("criterion {:>2} {name}: FAIL ({why})\n", i + 1),
        };
        out.write_all(line.as_bytes()).unwrap();
        if outcome.is_err() {
            failed.push(i + 1);
        }
    }
    out.flush().unwrap();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
