use setopt::crossval::{oracle_problem, oracle_random};
use setopt::fixtures;
use setopt::{build_problem, ProblemDocument, SetValuedProblem};

#[test]
fn documents_round_trip_through_json() {
    for (name, doc) in fixtures::all() {
        let text = doc.to_json_pretty();
        let back = ProblemDocument::from_json(&text).unwrap();
        assert_eq!(back, doc, "{name}");
        let p = build_problem(&back).unwrap();
        assert_eq!(p.to_document(), doc, "{name}");
    }
}

#[test]
fn building_is_deterministic() {
    for (name, doc) in fixtures::all() {
        let a = build_problem(&doc).unwrap();
        let b = SetValuedProblem::from_json(&doc.to_json_pretty()).unwrap();
        assert_eq!(a.clouds(), b.clouds(), "{name}");
    }
}

#[test]
fn e14_ball_samples() {
    let p = build_problem(&fixtures::e14()).unwrap();
    let cloud = p.evaluate(&[1.0, 0.0]).unwrap();
    assert_eq!(cloud.len(), 360);
    for y in cloud.points() {
        let r = ((y[0] + 3.0).powi(2) + (y[1] - 2.0).powi(2)).sqrt();
        assert!((r - 1.0).abs() < 1e-12);
    }
}

#[test]
fn unknown_fields_and_versions_rejected() {
    let text = fixtures::constant().to_json_pretty();
    let extra = text.replacen('{', "{\"bogus\": 1,", 1);
    assert!(ProblemDocument::from_json(&extra).is_err());
    let wrong = text.replace("\"schema_version\": \"1\"", "\"schema_version\": \"2\"");
    assert!(SetValuedProblem::from_json(&wrong).is_err());
}

#[test]
fn oracle_cross_validation() {
    let s = oracle_random(42, 2000, 1e-9).unwrap();
    assert!(s.passed(), "{:?}", s);
    assert_eq!(s.problems, 100);
    assert_eq!(oracle_random(42, 2000, 1e-9).unwrap(), s);
    for (name, doc) in fixtures::all() {
        let s = oracle_problem(&build_problem(&doc).unwrap()).unwrap();
        assert!(s.passed(), "{name}: {s:?}");
    }
}
