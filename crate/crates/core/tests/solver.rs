use setopt::fixtures;
use setopt::random::{random_problem, rng};
use setopt::{argmin_scalarized, build_problem, solve, sweff_brute, weff_brute, SetValuedProblem};

fn load(doc: setopt::ProblemDocument) -> SetValuedProblem {
    build_problem(&doc).unwrap()
}

fn subset(a: &[Vec<f64>], b: &[Vec<f64>]) -> bool {
    a.iter().all(|x| b.contains(x))
}

#[test]
fn inclusions_on_random_problems() {
    let mut r = rng(2024);
    for _ in 0..200 {
        let p = random_problem(&mut r);
        let argmin = argmin_scalarized(&p);
        let sweff = sweff_brute(&p);
        let weff = weff_brute(&p);
        assert!(!argmin.is_empty());
        assert!(subset(&argmin, &sweff));
        assert!(subset(&sweff, &weff));
    }
}

#[test]
fn argmin_invariant_under_unit_scaling() {
    let mut r = rng(5);
    for _ in 0..50 {
        let p = random_problem(&mut r);
        let base = argmin_scalarized(&p);
        for t in [0.5, 3.0] {
            assert_eq!(argmin_scalarized(&p.with_scaled_unit(t).unwrap()), base);
        }
    }
}

#[test]
fn constant_map_everything_optimal() {
    let p = load(fixtures::constant());
    let rep = solve(&p).unwrap();
    let all = p.grid().points().to_vec();
    assert_eq!(rep.argmin_set, all);
    assert_eq!(rep.sweff_set, all);
    assert_eq!(rep.weff_set, all);
    assert!((rep.m_f_q.0 - 2.0).abs() < 1e-12);
    assert!(!rep.argmin_strictly_smaller);
}

#[test]
fn example_ii_minimizers() {
    let rep = solve(&load(fixtures::example_ii())).unwrap();
    assert_eq!(rep.argmin_set, vec![vec![0.0], vec![1.0]]);
    assert!(rep.m_f_q.0.abs() < 1e-12);
    // every point of [0, 1] is strictly weakly efficient
    assert!(rep.sweff_set.iter().all(|x| (-1e-9..=1.0 + 1e-9).contains(&x[0])));
    assert_eq!(rep.sweff_set.len(), 101);
    assert!(rep.argmin_strictly_smaller);
}

#[test]
fn e14_unique_minimizer() {
    let rep = solve(&load(fixtures::e14())).unwrap();
    assert_eq!(rep.argmin_set, vec![vec![1.0, 0.0]]);
    assert!((rep.m_f_q.0 + 4.0).abs() < 1e-9);
}

#[test]
fn cone_example_sweff_is_origin() {
    let p = load(fixtures::cone_example());
    assert_eq!(sweff_brute(&p), vec![vec![0.0]]);
    assert_eq!(argmin_scalarized(&p), vec![vec![0.0]]);
}

#[test]
fn report_json_keys() {
    let v = solve(&load(fixtures::example_ii())).unwrap().to_json();
    for key in ["argmin", "sweff", "weff", "m_f_q", "psi_table"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["argmin"], serde_json::json!([0.0, 1.0]));
}

#[test]
fn single_point_grid() {
    let mut doc = fixtures::constant();
    doc.domain = setopt::schema::DomainDocument::points(vec![vec![0.0, 0.0]]);
    let rep = solve(&load(doc)).unwrap();
    assert_eq!(rep.argmin_set, vec![vec![0.0, 0.0]]);
}
