use setopt::asymptotics::{check_condition_12, default_directions, default_lambda_schedule};
use setopt::fixtures;
use setopt::{build_problem, f_g_infty, horizon_limsup, m_f_q, RayOptions, RaySchedule, SetValuedProblem};

fn load(doc: setopt::ProblemDocument) -> SetValuedProblem {
    build_problem(&doc).unwrap()
}

fn value(p: &SetValuedProblem, u: Vec<f64>) -> f64 {
    f_g_infty(p, &RaySchedule::default_for(u).unwrap()).unwrap().value.0
}

#[test]
fn estimates_not_below_infimum() {
    for (name, doc) in fixtures::all() {
        let p = load(doc);
        let m = m_f_q(&p).0;
        for u in default_directions(p.grid().dim()) {
            let v = value(&p, u.clone());
            assert!(v >= m - 1e-9, "{name} along {u:?}: {v} < {m}");
        }
    }
}

#[test]
fn degree_zero_homogeneous() {
    for (name, doc) in [("e14", fixtures::e14()), ("remark_ii", fixtures::remark_ii())] {
        let p = load(doc);
        for u in default_directions(p.grid().dim()) {
            let base = value(&p, u.clone());
            for s in [0.5, 2.0, 10.0] {
                let v = value(&p, u.iter().map(|c| c * s).collect());
                assert!(base == v || (base - v).abs() <= 1e-9, "{name} {u:?} x{s}: {base} vs {v}");
            }
        }
    }
}

#[test]
fn monotone_in_the_map() {
    // G(x) = [|x| + 1, |2x| + 1] dominates F(x) = [|x|, |2x|] pointwise
    let f = load(fixtures::lsc_interval());
    let mut doc = fixtures::lsc_interval();
    if let setopt::MapModel::Interval { pieces, .. } = &mut doc.map {
        for piece in pieces {
            piece.lower.offset[0] += 1.0;
            piece.upper.offset[0] += 1.0;
        }
    }
    let g = load(doc);
    for u in [vec![1.0], vec![-1.0]] {
        assert!(value(&f, u.clone()) <= value(&g, u));
    }
}

#[test]
fn horizon_trivial_iff_condition_12() {
    for (name, doc) in fixtures::all() {
        let p = load(doc);
        let m = m_f_q(&p).0;
        let rep = horizon_limsup(&p, &default_lambda_schedule(m, 10), None, &RayOptions::default()).unwrap();
        assert!(rep.agrees_with_condition_12, "{name}: trivial {} cond12 {}", rep.trivial, rep.condition_12_holds);
    }
}

#[test]
fn remark_ii_condition_12_holds() {
    let p = load(fixtures::remark_ii());
    let rep = check_condition_12(&p, &default_directions(1), &RayOptions::default()).unwrap();
    assert!(rep.holds);
    assert!(rep.witness.is_none());
}

#[test]
fn e14_horizon_trivial() {
    let p = load(fixtures::e14());
    let m = m_f_q(&p).0;
    let rep = horizon_limsup(&p, &default_lambda_schedule(m, 10), None, &RayOptions::default()).unwrap();
    assert!(rep.trivial && rep.condition_12_holds);
}

#[test]
fn asymptotic_1d_left_direction() {
    let p = load(fixtures::asymptotic_1d());
    assert!((value(&p, vec![-1.0]) + 1.0).abs() <= 1e-6);
    let rep = check_condition_12(&p, &default_directions(1), &RayOptions::default()).unwrap();
    assert!(!rep.holds);
    assert_eq!(rep.witness, Some(vec![-1.0]));
}

#[test]
fn invalid_inputs() {
    let p = load(fixtures::e14());
    assert!(RaySchedule::default_for(vec![0.0, 0.0]).is_err());
    assert!(RaySchedule::geometric(vec![1.0, 0.0], 10.0, 1.0, 5).is_err());
    assert!(check_condition_12(&p, &[vec![1.0]], &RayOptions::default()).is_err());
    let m = m_f_q(&p).0;
    assert!(horizon_limsup(&p, &[m + 1.0, m + 2.0], None, &RayOptions::default()).is_err());
    assert!(horizon_limsup(&p, &[m], None, &RayOptions::default()).is_err());
    assert!(horizon_limsup(&p, &[], None, &RayOptions::default()).is_err());
}
