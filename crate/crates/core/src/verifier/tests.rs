use super::*;

fn run(c: CheckId, n: usize) -> Report {
    run_check(c, n).unwrap()
}

#[test]
fn check_ids_parse() {
    assert_eq!("GEOMETRY".parse::<CheckId>().unwrap(), CheckId::PlacementGeometry);
    assert_eq!("realize-t1-b4".parse::<CheckId>().unwrap(), CheckId::RealizeT1B4);
    for c in CheckId::ALL {
        assert_eq!(c.token().parse::<CheckId>().unwrap(), c);
    }
    assert!(matches!("NOPE".parse::<CheckId>(), Err(VerifierError::UnknownCheck(_))));
}

#[test]
fn maximal_five() {
    let r = run(CheckId::Maximal, 5);
    assert_eq!(r.status, Status::Pass, "{}", r.details);
    let ev = &r.details["evidence"];
    let orders: Vec<_> = (0..3).map(|i| ev[i]["image_order"].as_u64().unwrap()).collect();
    let types: Vec<_> = (0..3).map(|i| ev[i]["image_type"].as_str().unwrap().to_string()).collect();
    assert_eq!(orders, [4, 10, 6]);
    assert_eq!(types, ["Z4", "D10", "D6"]);
}

#[test]
fn maximal_three_to_eight() {
    let rs = cross_validate_range(3, 8, &[CheckId::Maximal]).unwrap();
    assert_eq!(rs.len(), 6);
    assert!(rs.iter().all(|r| r.status == Status::Pass));
}

#[test]
fn t1_realizations() {
    let r = run(CheckId::RealizeT1B6, 6);
    assert_eq!(r.status, Status::Pass, "{}", r.details);
    assert!(r.details["evidence"].as_array().unwrap().iter().any(|e| e["image_order"] == 12 && e["image_type"] == "A4"));
    assert_eq!(run(CheckId::RealizeT1B4, 4).status, Status::Pass);
    assert!(matches!(run_check(CheckId::RealizeT1B4, 5), Err(VerifierError::OutOfDomain { .. })));
}

#[test]
fn gamma2_six() {
    let r = run(CheckId::Gamma2Dic, 6);
    assert_eq!(r.status, Status::Pass, "{}", r.details);
    assert_eq!(r.details["evidence"][0]["xi_delta"], 5);
    assert_eq!(r.details["evidence"][0]["modulus"], 10);
}

#[test]
fn murasugi_three_enumerates_dic12() {
    let r = run(CheckId::Murasugi, 3);
    assert_eq!(r.status, Status::Pass, "{}", r.details);
    assert!(r.details["evidence"].as_array().unwrap().iter().any(|e| e["elements"] == 12));
}

#[test]
fn murasugi_even_is_graded_ambiguous() {
    let r = run(CheckId::Murasugi, 6);
    assert_eq!(r.status, Status::SkippedAmbiguous, "{}", r.details);
    assert!(r.facts_verified > 0);
}

#[test]
fn realize_dic_and_observed() {
    for n in 4..=8 {
        let r = run(CheckId::RealizeDic, n);
        assert_eq!(r.status, Status::Pass, "n={n} {}", r.details);
        let r = run(CheckId::ObservedPlacement, n);
        assert_eq!(r.status, Status::Pass, "n={n} {}", r.details);
    }
}

#[test]
fn zero_facts_fail() {
    let r = Tally::default().finish(CheckId::Maximal, 5);
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.details["witness"], "no facts verified");
}

#[test]
fn reports_are_sorted_and_deterministic() {
    let checks = [CheckId::RealizeDic, CheckId::Maximal, CheckId::Maximal];
    let a = cross_validate_range(4, 6, &checks).unwrap();
    let b = cross_validate_range(4, 6, &checks).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    let keys: Vec<_> = a.iter().map(|r| (r.check_id.token(), r.n)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(a.len(), 6);
    assert!(cross_validate_range(2, 5, &checks).is_err());
}

#[test]
fn report_json_keys() {
    let v = serde_json::to_value(run(CheckId::RealizeT1B4, 4)).unwrap();
    for k in ["check_id", "n", "status", "facts_verified", "details", "case"] {
        assert!(v.get(k).is_some(), "{k}");
    }
    assert_eq!(v["status"], "pass");
    assert_eq!(v["check_id"], "REALIZE-T1-B4");
}

#[test]
fn delta_t1_squares_to_full_twist() {
    let d = word(CanonicalName::DeltaT1, 6);
    let g = word(CanonicalName::Gamma, 6);
    assert!(crate::artin_action::projectively_equal(&d.pow(2), &g.pow(3)));
    assert!(xi(&d.pow(2)).is_zero());
    // without the σ5σ4σ5 factor the square is a non-central three-strand twist
    let short = BraidWord::reduce(&[-3, -4, -5, -2, -1, -2, 5, 4, 3], 6).unwrap();
    assert!(!crate::artin_action::artin_endo(&short.pow(2)).is_identity());
}

