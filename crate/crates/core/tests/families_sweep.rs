use fano_chern::families::{
    chk_verdict, consistency_check, enumerate, enumerate_ci, threshold_oracle, FamilyKind, FamilySpec, Status,
};
use fano_chern::numeric::{int, pow_int};

#[test]
fn every_family_is_consistent_up_to_n14() {
    for kind in [
        FamilyKind::Grassmannian,
        FamilyKind::GrassmannianHyperplane,
        FamilyKind::Orthogonal,
        FamilyKind::Symplectic,
        FamilyKind::SymplecticDegenerate,
        FamilyKind::G2P,
    ] {
        for spec in enumerate(kind, 2..=7, 4..=14) {
            let report = consistency_check(&spec).unwrap();
            let failures: Vec<_> = report.failures().collect();
            assert!(failures.is_empty(), "{spec}: {failures:?}");
        }
    }
    for n in 1..=14 {
        for spec in enumerate_ci(n, 3) {
            let report = consistency_check(&spec).unwrap();
            assert!(report.all_hold(), "{spec}: {:?}", report.failures().collect::<Vec<_>>());
        }
    }
}

#[test]
fn ci_verdicts_follow_power_sums() {
    for n in 1..=12 {
        for spec in enumerate_ci(n, 3) {
            let FamilySpec::CompleteIntersection { degrees, .. } = &spec else { unreachable!() };
            for k in 1..=5 {
                let s: fano_chern::Rational = degrees.iter().map(|&d| pow_int(d as i64, k)).sum();
                let expected = if s <= int(n as i64) {
                    Status::Positive
                } else if s == int(n as i64 + 1) {
                    Status::NefOnly
                } else {
                    Status::Neither
                };
                assert_eq!(chk_verdict(&spec, k).unwrap().status, expected, "{spec} k={k}");
                assert_eq!(threshold_oracle(&spec, k).unwrap(), expected, "{spec} k={k}");
            }
        }
    }
}

#[test]
fn de_jong_starr_grassmannians_are_positive() {
    for k in 2..=6 {
        for n in [2 * k, 2 * k + 1] {
            let spec = FamilySpec::Grassmannian { k, n };
            assert_eq!(chk_verdict(&spec, 2).unwrap().status, Status::Positive, "{spec}");
        }
    }
}

#[test]
fn higher_degree_grassmannian_verdicts_have_no_oracle() {
    let spec: FamilySpec = "G[3,7]".parse().unwrap();
    let v = chk_verdict(&spec, 3).unwrap();
    assert_eq!(v.note.as_deref(), Some("computed, no closed form"));
    assert!(threshold_oracle(&spec, 3).is_err());
}
