use fano_chern::catalog::{Catalog, Classification, ExceptionalCase, PolarizedPair, Positivity};
use fano_chern::numeric::int;

const CASES: [ExceptionalCase; 5] =
    [ExceptionalCase::A, ExceptionalCase::B, ExceptionalCase::C, ExceptionalCase::D, ExceptionalCase::E];

#[test]
fn exceptional_pairs_are_ample_and_recognized() {
    for m in 1..=6 {
        for case in CASES {
            let pair = PolarizedPair::case(case, m).unwrap();
            assert_eq!(pair.positivity_of_twist(), Positivity::Ample, "{}", pair.label);
            assert_eq!(pair.classify().unwrap(), Classification { case, m }, "{}", pair.label);
            assert_eq!(pair.dim, if case == ExceptionalCase::A { 2 * m } else { 2 * m + 1 });
        }
    }
}

#[test]
fn standard_catalog_is_valid() {
    let catalog = Catalog::standard(6, 8).unwrap();
    let report = catalog.validate();
    assert!(report.all_hold(), "{:?}", report.failures().collect::<Vec<_>>());
    for pair in &catalog.pairs {
        if !Catalog::is_lr_exception(pair) {
            assert!(pair.extremal_l_degrees().iter().all(|x| *x == int(1)), "{}", pair.label);
        }
    }
}

#[test]
fn special_twists() {
    assert_eq!(PolarizedPair::projective_space(1, 3).unwrap().twist_class(), vec![1]);
    for d in 1..=8 {
        let pair = PolarizedPair::projective_space(d, 2).unwrap();
        assert_eq!(pair.twist_class(), vec![2]);
        assert_eq!(pair.extremal_l_degrees(), vec![int(2)]);
    }
}

#[test]
fn hyperplane_pairs_follow_n_minus_2k() {
    for k in 3..=6u32 {
        for n in 2 * k..=2 * k + 3 {
            let pair = PolarizedPair::divisor_11(k - 1, n - k - 1).unwrap();
            let t = pair.twist_class();
            assert_eq!(t, vec![2 * k as i64 + 1 - n as i64, n as i64 - 2 * k as i64 + 1]);
            let expected = match n - 2 * k {
                0 => Positivity::Ample,
                1 => Positivity::NefOnly,
                _ => Positivity::Neither,
            };
            assert_eq!(pair.positivity_of_twist(), expected);
        }
    }
}

#[test]
fn non_ample_twists_are_not_classified() {
    let pair = PolarizedPair::divisor_11(2, 3).unwrap();
    assert!(pair.classify().is_err());
}

#[test]
fn catalog_document_uses_exact_strings() {
    let doc = serde_json::to_value(Catalog::standard(2, 3).unwrap().document()).unwrap();
    let pairs = doc["pairs"].as_array().unwrap();
    let c = pairs.iter().find(|p| p["label"] == "(Bl_(P^1) P^5, 2H-E)").unwrap();
    assert_eq!(c["canonical"], serde_json::json!(["-6", "3"]));
    assert_eq!(c["twist"], serde_json::json!(["2", "-1"]));
    assert_eq!(c["twist_positivity"], "AMPLE");
    assert_eq!(c["extremal_l_degrees"], serde_json::json!(["1", "1"]));
}
