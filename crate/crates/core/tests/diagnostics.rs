use setopt::asymptotics::{check_condition_12, default_directions};
use setopt::diagnostics::default_lambda_probe;
use setopt::fixtures;
use setopt::{
    build_problem, check_attainment, check_colevel_compact_at, check_sgicc, check_srgi, check_transfer_closed, m_f_q,
    weierstrass_report, RayOptions, SetValuedProblem, Verdict,
};

fn load(doc: setopt::ProblemDocument) -> SetValuedProblem {
    build_problem(&doc).unwrap()
}

/// Closed-form `Ψ_F` for the one-dimensional fixtures.
fn closed_form(name: &str) -> Option<fn(f64) -> f64> {
    let f: fn(f64) -> f64 = match name {
        "interval_srgi" => |x| if x < 1.0 { x.abs() } else { 2.0 * x },
        "asymptotic_1d" => |x| if x >= 0.0 { x } else { -1.0 },
        "remark_ii" => |x| {
            if x <= -0.5 {
                1.0
            } else if x < 1.5 {
                0.75 * x + 0.875
            } else {
                x - 1.5
            }
        },
        "lsc_interval" => |x| x * x,
        "example_ii" => |x| if (0.0..=1.0).contains(&x) { (2.0 * x).min(2.0 - 2.0 * x) } else { 6.0 },
        "cone_example" => |x| if x == 0.0 { -2.0 } else { 1.0 },
        _ => return None,
    };
    Some(f)
}

/// Regular global infimum from one-sided limits of the closed form.
fn rgi_by_definition(p: &SetValuedProblem, psi: fn(f64) -> f64) -> bool {
    let m = m_f_q(p).0;
    let margin = 10.0 * p.tolerances().tie_tol;
    let (lo, hi) = p.grid().hull();
    p.grid().points().iter().map(|x| x[0]).all(|x| {
        if psi(x) <= m + margin {
            return true;
        }
        let eps = 1e-9;
        let mut liminf = f64::INFINITY;
        if x - eps >= lo[0] {
            liminf = liminf.min(psi(x - eps));
        }
        if x + eps <= hi[0] {
            liminf = liminf.min(psi(x + eps));
        }
        liminf > m + margin
    })
}

#[test]
fn srgi_matches_closed_form_on_1d_fixtures() {
    let mut checked = 0;
    for (name, doc) in fixtures::all() {
        let Some(psi) = closed_form(name) else { continue };
        let p = load(doc);
        for i in 0..p.grid().len() {
            let x = p.grid().point(i)[0];
            assert!((setopt::psi_f(&p, &[x]).unwrap().0 - psi(x)).abs() < 1e-9, "{name} at {x}");
        }
        let expected = rgi_by_definition(&p, psi);
        let got = check_srgi(&p, None).unwrap().verdict;
        assert_eq!(got == Verdict::Holds, expected, "{name}: {got:?}");
        assert_ne!(got, Verdict::Inconclusive, "{name}");
        checked += 1;
    }
    assert_eq!(checked, 6);
}

#[test]
fn srgi_fails_on_unit_ball_for_remark_ii() {
    let p = load(fixtures::remark_ii()).restricted_to_ball(1.0).unwrap();
    let c = check_srgi(&p, None).unwrap();
    assert_eq!(c.verdict, Verdict::Fails);
    let x = c.witness.unwrap().point.unwrap();
    assert!((x[0] + 0.5).abs() < 1e-9);
}

#[test]
fn sgicc_implies_condition_12() {
    for (name, doc) in fixtures::all() {
        let p = load(doc);
        let m = m_f_q(&p).0;
        let sgicc = check_sgicc(&p, default_lambda_probe(m)).unwrap();
        if sgicc.verdict == Verdict::Holds {
            let dirs = default_directions(p.grid().dim());
            assert!(check_condition_12(&p, &dirs, &RayOptions::default()).unwrap().holds, "{name}");
        }
    }
}

#[test]
fn transfer_closed_on_closed_examples() {
    let p = load(fixtures::interval_srgi());
    let m = m_f_q(&p).0;
    let c = check_transfer_closed(&p, &[2.0, 1.5, m + 0.5, m + 0.01]).unwrap();
    assert_eq!(c.verdict, Verdict::Holds);
    for doc in [fixtures::constant(), fixtures::lsc_interval()] {
        assert_eq!(check_transfer_closed(&load(doc), &[]).unwrap().verdict, Verdict::Holds);
    }
}

#[test]
fn transfer_rejects_low_lambda() {
    let p = load(fixtures::lsc_interval());
    assert!(check_transfer_closed(&p, &[0.0]).is_err());
}

#[test]
fn attainment_caveat_for_sampled_hyperbola() {
    let c = check_attainment(&load(fixtures::example_i()));
    assert_eq!(c.verdict, Verdict::HoldsWithCaveat);
    assert!(c.caveat.is_some());
    assert_eq!(check_attainment(&load(fixtures::constant())).verdict, Verdict::Holds);
}

#[test]
fn constant_map() {
    let p = load(fixtures::constant());
    assert_eq!(check_srgi(&p, None).unwrap().verdict, Verdict::Holds);
    assert_eq!(check_sgicc(&p, 3.0).unwrap().verdict, Verdict::Fails);
    // every point is strictly weakly efficient, so the disjunction holds anyway
    let c = check_colevel_compact_at(&p, &[0.0, 0.0]).unwrap();
    assert_eq!(c.verdict, Verdict::Fails);
    assert_eq!(c.evidence["in_sweff"], true);
}

#[test]
fn sgicc_examples() {
    let e14 = load(fixtures::e14());
    assert_eq!(check_sgicc(&e14, default_lambda_probe(m_f_q(&e14).0)).unwrap().verdict, Verdict::Holds);
    let a = load(fixtures::asymptotic_1d());
    assert_eq!(check_sgicc(&a, default_lambda_probe(m_f_q(&a).0)).unwrap().verdict, Verdict::Fails);
    assert!(check_sgicc(&a, m_f_q(&a).0).is_err());
}

#[test]
fn colevel_compact_at_examples() {
    let e14 = load(fixtures::e14());
    // every x with |x_2| <= 2 has a point of F(x) below the ball around (-3, 2),
    // so the colevel set at F(1, 0) is an unbounded strip
    let c = check_colevel_compact_at(&e14, &[1.0, 0.0]).unwrap();
    assert_eq!(c.verdict, Verdict::Fails);
    assert!(c.witness.unwrap().point.unwrap()[1].abs() <= 2.0);
    let ex = load(fixtures::example_ii());
    let c = check_colevel_compact_at(&ex, &[0.0]).unwrap();
    assert_eq!(c.verdict, Verdict::Holds);
    assert_eq!(c.evidence["in_sweff"], true);
    assert!(check_colevel_compact_at(&ex, &[0.123456]).is_err());
}

#[test]
fn weierstrass_reports() {
    let e14 = weierstrass_report(&load(fixtures::e14())).unwrap();
    assert!(e14.coercive_applicable);
    assert!(e14.sweff.contains(&vec![1.0, 0.0]));

    let cone = weierstrass_report(&load(fixtures::cone_example())).unwrap();
    assert_eq!(cone.sweff, vec![vec![0.0]]);

    let r = weierstrass_report(&load(fixtures::remark_ii())).unwrap();
    assert_eq!(r.condition_12.verdict, Verdict::Holds);
    assert_eq!(r.srgi_on_balls.first().map(|(n, c)| (*n, c.verdict)), Some((1, Verdict::Fails)));
    assert!(!r.noncoercive_applicable);
    assert!(!r.noncoercive_blocked_by.is_empty());

    let json = serde_json::to_string(&r.to_json()).unwrap();
    assert!(json.contains("\"verdict\""));
}
