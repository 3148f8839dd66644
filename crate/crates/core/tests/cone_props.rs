use proptest::prelude::*;
use setopt::random::{random_cone, rng, ConeFamily};
use setopt::ConeSpec;

fn family(i: usize) -> ConeFamily {
    ConeFamily::ALL[i % 3]
}

fn cone_and_points(seed: u64, fam: usize, k: usize) -> (ConeSpec, Vec<Vec<f64>>) {
    let mut r = rng(seed);
    let f = family(fam);
    let cone = random_cone(&mut r, f);
    let pts = (0..k).map(|_| setopt::random::random_point(&mut r, f.dim(), 10.0)).collect();
    (cone, pts)
}

fn shift(y: &[f64], q: &[f64], a: f64) -> Vec<f64> {
    y.iter().zip(q).map(|(v, w)| v + a * w).collect()
}

fn psi(c: &ConeSpec, y: &[f64]) -> f64 {
    c.gerstewitz(y).unwrap().0
}

proptest! {
    #[test]
    fn translation_invariance(seed in any::<u64>(), fam in 0usize..3, a in -20.0f64..20.0) {
        let (c, pts) = cone_and_points(seed, fam, 1);
        let y = &pts[0];
        let lhs = psi(&c, &shift(y, c.order_unit(), a));
        prop_assert!((lhs - (psi(&c, y) + a)).abs() <= 1e-9);
    }

    #[test]
    fn monotone(seed in any::<u64>(), fam in 0usize..3) {
        let (c, pts) = cone_and_points(seed, fam, 2);
        let d: Vec<f64> = pts[1].iter().zip(&pts[0]).map(|(a, b)| a - b).collect();
        if c.contains(&d).unwrap() {
            prop_assert!(psi(&c, &pts[0]) <= psi(&c, &pts[1]) + 1e-12);
        }
        if c.contains_interior(&d).unwrap() {
            prop_assert!(psi(&c, &pts[0]) < psi(&c, &pts[1]));
        }
        // an interior step always increases the value
        let up = shift(&pts[0], c.order_unit(), 0.5);
        prop_assert!(psi(&c, &pts[0]) < psi(&c, &up));
    }

    #[test]
    fn positively_homogeneous_and_subadditive(seed in any::<u64>(), fam in 0usize..3, t in 0.01f64..50.0) {
        let (c, pts) = cone_and_points(seed, fam, 2);
        let scaled: Vec<f64> = pts[0].iter().map(|v| t * v).collect();
        prop_assert!((psi(&c, &scaled) - t * psi(&c, &pts[0])).abs() <= 1e-9 * t.max(1.0));
        let sum: Vec<f64> = pts[0].iter().zip(&pts[1]).map(|(a, b)| a + b).collect();
        prop_assert!(psi(&c, &sum) >= psi(&c, &pts[0]) + psi(&c, &pts[1]) - 1e-9);
    }

    #[test]
    fn level_set_identities(seed in any::<u64>(), fam in 0usize..3, l in -15.0f64..15.0) {
        let (c, pts) = cone_and_points(seed, fam, 1);
        let y = &pts[0];
        let v = psi(&c, y);
        prop_assert!(c.contains(&shift(y, c.order_unit(), -v)).unwrap());
        let s = shift(y, c.order_unit(), -l);
        prop_assert_eq!(v > l, c.contains_interior(&s).unwrap());
        prop_assert_eq!(v >= l, c.contains(&s).unwrap());
    }

    #[test]
    fn oracle_agrees(seed in any::<u64>(), fam in 0usize..3) {
        let (c, pts) = cone_and_points(seed, fam, 1);
        let exact = psi(&c, &pts[0]);
        let approx = c.gerstewitz_oracle(&pts[0], 1e-9).unwrap().0;
        prop_assert!((exact - approx).abs() <= 1e-9);
    }
}

#[test]
fn oracle_with_unusual_order_unit() {
    let c = ConeSpec::nonnegative_orthant(vec![1.0, 2.0, 4.0]).unwrap();
    assert!(c.gerstewitz_oracle(&[0.0, 0.0, 0.0], 1e-9).unwrap().0.abs() <= 1e-9);
    let w = ConeSpec::new(vec![vec![1.0, 1.0], vec![1.0, -1.0]], vec![1.0, 0.0]).unwrap();
    for (x, y) in [(3.0, 1.5), (-2.0, -4.0), (0.0, 7.0)] {
        let got = w.gerstewitz_oracle(&[x, y], 1e-9).unwrap().0;
        assert!((got - (x - f64::abs(y))).abs() <= 1e-9);
    }
}

#[test]
fn invalid_cones_rejected() {
    assert!(ConeSpec::new(vec![vec![0.0, 0.0]], vec![1.0, 1.0]).is_err());
    assert!(ConeSpec::new(vec![vec![1.0, 0.0], vec![0.0, 1.0]], vec![0.0, 1.0])
        .unwrap_err()
        .to_string()
        .contains("order unit not interior"));
    assert!(ConeSpec::new(vec![vec![1.0, 0.0]], vec![1.0, 0.0, 0.0]).is_err());
}
