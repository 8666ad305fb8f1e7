use super::tables::ROWS;
use super::*;
use crate::braid_words::xi;
use GroupName::{Cyclic, Dic};

fn desc(s: &str) -> SubgroupDescriptor {
    s.parse().unwrap()
}

fn names(v: &[GroupName]) -> Vec<String> {
    v.iter().map(|g| g.to_string()).collect()
}

#[test]
fn maximal_examples() {
    assert_eq!(names(&maximal_finite_subgroups(4).unwrap()), ["Q16", "T1"]);
    assert_eq!(names(&maximal_finite_subgroups(5).unwrap()), ["Z8", "Dic20", "Dic12"]);
    assert_eq!(names(&maximal_finite_subgroups(6).unwrap()), ["Z10", "Dic24", "O1"]);
    assert_eq!(names(&maximal_finite_subgroups(30).unwrap()), ["Z58", "Dic120", "Dic112", "O1", "I"]);
    assert_eq!(names(&maximal_finite_subgroups(3).unwrap()), ["Dic12"]);
    assert!(matches!(maximal_finite_subgroups(2), Err(ClassifierError::Domain { .. })));
}

#[test]
fn t1_and_o1_never_together() {
    for n in 3..=200 {
        let m = maximal_finite_subgroups(n).unwrap();
        assert!(!(m.contains(&GroupName::T1) && m.contains(&GroupName::O1)), "n = {n}");
        assert!(m.contains(&Dic(4 * n)));
    }
}

#[test]
fn class_count_examples() {
    assert_eq!(conjugacy_class_count(6, &desc("Z4")).unwrap(), 2);
    assert_eq!(conjugacy_class_count(6, &desc("Q8")).unwrap(), 2);
    assert_eq!(conjugacy_class_count(7, &desc("Dic28")).unwrap(), 1);
    assert!(matches!(conjugacy_class_count(7, &desc("Q8")), Err(ClassifierError::NotRealizable { .. })));
}

#[test]
fn class_counts_match_enumerated_classes() {
    for n in 3..=40 {
        let mut descs = vec![desc("Z4")];
        descs.extend((2..=n).map(|r| SubgroupDescriptor::any(Dic(4 * r))));
        for d in descs {
            let Ok(v) = classify(n, &d) else { continue };
            assert_eq!(v.classes.len(), conjugacy_class_count(n, &d).unwrap(), "n = {n}, {d}");
            if n % 2 == 1 {
                assert_eq!(v.classes.len(), 1);
            }
        }
    }
}

#[test]
fn murasugi_examples() {
    let r = murasugi_realizations(7, 4).unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].0, 1);
    assert_eq!(r[0].1, canonical_word(CanonicalName::A1, 7).unwrap().pow(3));
    assert!(murasugi_realizations(5, 7).unwrap().is_empty());
    let r = murasugi_realizations(6, 12).unwrap();
    assert_eq!(r, vec![(0, canonical_word(CanonicalName::A0, 6).unwrap())]);
}

#[test]
fn placement_examples() {
    let v = torsion_placement(18, &desc("Q16@O1")).unwrap();
    assert_eq!(v.classes.len(), 1);
    assert_eq!(v.classes[0].contained_in, vec![GClass::G2]);
    let v = torsion_placement(10, &desc("T1")).unwrap();
    assert_eq!(v.classes[0].contained_in, vec![GClass::G1, GClass::G2]);
    assert_eq!(v.classes[0].meets, vec![GClass::G1, GClass::G2]);
    // 8 | n but 8 ∤ n/2
    let v = torsion_placement(8, &desc("Dic32")).unwrap();
    assert_eq!(v.classes.len(), 1);
    assert_eq!(v.classes[0].contained_in, vec![GClass::G0, GClass::G2]);
    // 4 | n/2: two classes, one inside G0
    let v = torsion_placement(8, &desc("Q16")).unwrap();
    let ps: Vec<Placement> = v.classes.iter().map(|c| Placement::from_classes(c.contained_in.clone()).unwrap()).collect();
    assert_eq!(ps, vec![Placement::G0, Placement::G0_G2]);
}

#[test]
fn gamma2_examples() {
    assert_eq!(gamma2_membership(10, &desc("Z4@T1")).unwrap().classes, vec![Membership::Yes]);
    assert_eq!(gamma2_membership(6, &desc("Z8@O1")).unwrap().classes, vec![Membership::No]);
    let v = gamma2_membership(8, &desc("Q16")).unwrap().classes;
    assert_eq!(v.len(), 2);
    assert_ne!(v[0], v[1]);
    assert_eq!(gamma2_membership(7, &desc("Z2")).unwrap().classes, vec![Membership::No]);
    assert_eq!(gamma2_membership(8, &desc("Z2")).unwrap().classes, vec![Membership::Yes]);
}

fn ambient_maximal(ambient: &str, n: usize) -> bool {
    match ambient {
        "T1" => t1_maximal(n),
        "O1" => o1_maximal(n),
        _ => i_maximal(n),
    }
}

#[test]
fn tables_cover_their_congruences_exactly() {
    for row in ROWS {
        for n in 3..=240 {
            assert_eq!(row.lookup(n).is_some(), ambient_maximal(row.ambient, n), "{} n = {n}", row.case);
        }
    }
}

/// `i` with `k | 2(n - i)`, or the two candidates for `Z_4` and `n` even.
fn cyclic_candidates(n: usize, k: usize) -> Vec<Placement> {
    (0..=2).filter(|&i| (2 * (n - i)).is_multiple_of(k)).map(|i| Placement::single(GClass::ALL[i])).collect()
}

#[test]
fn cyclic_rows_agree_with_orders() {
    for row in ROWS {
        let Cyclic(k) = row.group else { continue };
        for n in (3..=240).filter(|&n| ambient_maximal(row.ambient, n)) {
            let p = row.lookup(n).unwrap();
            assert!(cyclic_candidates(n, k).contains(&p), "{} n = {n}", row.case);
        }
    }
}

/// The verdict of a subgroup is the union of the verdicts of the cyclic
/// subgroups generating it.
#[test]
fn noncyclic_rows_are_unions_of_cyclic_rows() {
    let gens: &[(&str, &str, &[&str])] = &[
        ("T1@T1", "T1", &["Z4@T1", "Z6@T1"]),
        ("Q8@T1", "T1", &["Z4@T1"]),
        ("I@I", "I", &["Z4@I", "Z6@I", "Z10@I"]),
        ("T1@I", "I", &["Z4@I", "Z6@I"]),
        ("Dic12@I", "I", &["Z4@I", "Z6@I"]),
        ("Dic20@I", "I", &["Z4@I", "Z10@I"]),
        ("Q8@I", "I", &["Z4@I"]),
        ("O1@O1", "O1", &["Z8@O1", "Z4@O1:not-t1", "Z6@O1"]),
        ("T1@O1", "O1", &["Z4@O1:t1", "Z6@O1"]),
        ("Q16@O1", "O1", &["Z8@O1", "Z4@O1:not-t1"]),
        ("Dic12@O1", "O1", &["Z6@O1", "Z4@O1:not-t1"]),
        ("Q8@O1:t1", "O1", &["Z4@O1:t1"]),
        ("Q8@O1:not-t1", "O1", &["Z4@O1:t1", "Z4@O1:not-t1"]),
    ];
    for &(big, ambient, parts) in gens {
        for n in (3..=240).filter(|&n| ambient_maximal(ambient, n)) {
            let whole = classify(n, &desc(big)).unwrap().classes[0].placement();
            let union = parts
                .iter()
                .map(|p| classify(n, &desc(p)).unwrap().classes[0].placement())
                .reduce(Placement::union)
                .unwrap();
            assert_eq!(whole, union, "{big} at n = {n}");
            let g2 = classify(n, &desc(big)).unwrap().classes[0].gamma2.is_yes();
            let g2_parts = parts.iter().all(|p| classify(n, &desc(p)).unwrap().classes[0].gamma2.is_yes());
            assert_eq!(g2, g2_parts, "Γ2 of {big} at n = {n}");
        }
    }
}

/// Inside a polyhedral group, each class is one of the classes of the
/// abstract group.
#[test]
fn polyhedral_classes_are_abstract_classes() {
    for n in 3..=240 {
        for row in ROWS.iter().filter(|r| ambient_maximal(r.ambient, n)) {
            let mut d = SubgroupDescriptor::new(row.group, row.ambient.parse().unwrap());
            if row.ambient == "O1" {
                d = d.with_t1_tag(row.class == O1Class::InsideT1);
            }
            let inside = classify(n, &d).unwrap().classes;
            let abstract_classes = classify(n, &SubgroupDescriptor::any(row.group)).unwrap().classes;
            for c in inside {
                assert!(
                    abstract_classes.iter().any(|a| a.placement() == c.placement() && a.gamma2 == c.gamma2),
                    "{d} at n = {n}: {c:?} not among {abstract_classes:?}"
                );
            }
        }
    }
}

#[test]
fn odd_prime_cyclic_verdicts_are_single() {
    for n in 3..=60 {
        for p in [3usize, 5, 7, 11, 13] {
            let Ok(v) = classify(n, &SubgroupDescriptor::any(Cyclic(p))) else { continue };
            assert_eq!(v.classes.len(), 1);
            let pl = v.classes[0].placement();
            assert!(pl.is_single());
            let i = pl.classes()[0].index();
            assert_eq!((2 * (n - i)) % p, 0);
        }
    }
}

#[test]
fn realizable_orders_are_torsion_orders() {
    for n in 3..=64 {
        for s in ["Z3", "Z4", "Z5", "Z6", "Z8", "Z10", "Q8", "Q16", "Dic12", "Dic20", "T1", "O1", "I"] {
            let d = desc(s);
            let Ok(v) = classify(n, &d) else { continue };
            assert!(!v.classes.is_empty());
            // every element order of the model divides some 2(n - i)
            let model = quaternion_model(d.group).unwrap();
            for (k, _) in model.table.census() {
                assert!(torsion_order_exists(n, k), "{s} at n = {n} has an element of order {k}");
            }
        }
    }
}

#[test]
fn lattice_realizability() {
    let o = subgroup_types(GroupName::O1);
    for t in ["Z8", "Q16", "Dic12", "T1", "Q8", "Z6"] {
        assert!(o.contains(t), "{t}");
    }
    assert!(!o.contains("Dic20"));
    let i = subgroup_types(GroupName::I);
    assert!(i.contains("Dic20") && i.contains("Z10") && !i.contains("Z8"));
    assert!(classify(6, &desc("Z8@O1")).is_ok());
    assert!(classify(12, &desc("Z8@I")).is_err());
    assert!(classify(4, &desc("Z5@T1")).is_err());
    assert!(classify(6, &desc("Z4@T1")).is_err());
}

#[test]
fn o1_has_two_classes_of_z4_and_q8() {
    let model = quaternion_model(GroupName::O1).unwrap();
    let g = &model.table;
    let subs = all_subgroups(g);
    let t1 = subs.iter().find(|h| h.order() == 24).unwrap();
    for ty in ["Z4", "Q8"] {
        let classes: Vec<_> = subgroup_classes(g, &subs)
            .into_iter()
            .filter(|c| isomorphism_type(&g.subgroup_table(&subs[c[0]].elements)).to_string() == ty)
            .collect();
        assert_eq!(classes.len(), 2, "{ty}");
        let inside: Vec<bool> = classes.iter().map(|c| subs[c[0]].is_subgroup_of(t1)).collect();
        assert_eq!(inside.iter().filter(|&&b| b).count(), 1, "{ty}");
    }
}

#[test]
fn family_examples() {
    let fam = family_members(8, 8, 1, 1).unwrap();
    assert_eq!(fam.len(), 2);
    assert!(fam.iter().all(|f| f.order == 16));
    assert!(!fam[0].conjugate_to(&fam[1]));
    // the two classes of Q8
    let fam = family_members(4, 4, 1, 1).unwrap();
    assert_eq!(fam.len(), 2);
    assert!(fam.iter().all(|f| f.order == 8));
    assert!(!fam[0].conjugate_to(&fam[1]));
    // four copies of Z4, two classes
    let fam = family_members(4, 4, 2, 1).unwrap();
    assert_eq!(fam.len(), 4);
    assert!(fam.iter().all(|f| f.order == 4));
    let classes: BTreeSet<usize> = fam.iter().map(|f| f.i % 2).collect();
    assert_eq!(classes.len(), 2);
    assert!(fam[0].conjugate_to(&fam[2]));
    let f = dicyclic_family(6, 4, 0, 1, 0).unwrap();
    assert_eq!(f.order, 16);
    assert_eq!(f.generators[0], canonical_word(CanonicalName::X, 6).unwrap());
    assert!(dicyclic_family(6, 4, 3, 1, 0).is_err());
    assert!(dicyclic_family(7, 7, 0, 1, 0).is_err());
}

#[test]
fn family_gamma2_matches_xi_of_generators() {
    for n in [4usize, 6, 8, 10, 12] {
        for big_n in [n, n - 2] {
            let (l, k) = two_adic(big_n);
            for j in 0..=l {
                for q in (1..=k).filter(|q| k % q == 0) {
                    for f in family_members(n, big_n, j, q).unwrap() {
                        let by_xi = f.generators.iter().all(|g| xi(g).is_zero());
                        assert_eq!(by_xi, f.in_gamma2(), "n = {n}, N = {big_n}, j = {j}, q = {q}, i = {}", f.i);
                        if j >= 1 {
                            assert_eq!(xi(&f.generators[1]).is_zero(), (n / 2 + f.i) % 2 == 0);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn verdict_json_shape() {
    let v = classify(6, &desc("Z4")).unwrap();
    let j = serde_json::to_value(&v).unwrap();
    assert_eq!(j["n"], 6);
    assert_eq!(j["descriptor"], "Z4");
    assert_eq!(j["classes"][0]["contained_in"], serde_json::json!(["G0"]));
    assert_eq!(j["classes"][1]["gamma2"], "yes");
    assert!(j["classes"][0]["case"].is_string());
}

#[test]
fn whole_group_for_three_strands() {
    let s = summary(3).unwrap();
    assert_eq!(s["whole_group"], "Dic12");
    let types: Vec<&str> = s["subgroup_classes"].as_array().unwrap().iter().map(|c| c["type"].as_str().unwrap()).collect();
    assert_eq!(types, ["Z1", "Z2", "Z3", "Z4", "Z6", "Dic12"]);
    assert!(summary(4).unwrap().get("whole_group").is_none());
}
