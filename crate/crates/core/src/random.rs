//! Seeded random cones, points and problems for property checks and the
//! oracle cross-validation.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cone::ConeSpec;
use crate::problem::{DomainGrid, MapModel, SetValuedProblem, TableEntry};
use crate::schema::{Flags, Tolerances};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeFamily {
    Orthant2,
    Orthant3,
    /// `{(x, y) : -x <= y <= x}`.
    Wedge,
}

impl ConeFamily {
    pub const ALL: [ConeFamily; 3] = [ConeFamily::Orthant2, ConeFamily::Orthant3, ConeFamily::Wedge];

    pub fn dim(self) -> usize {
        match self {
            ConeFamily::Orthant3 => 3,
            _ => 2,
        }
    }
}

/// A cone of the given family with a random interior order unit.
pub fn random_cone(rng: &mut impl Rng, family: ConeFamily) -> ConeSpec {
    match family {
        ConeFamily::Orthant2 | ConeFamily::Orthant3 => {
            let q = (0..family.dim()).map(|_| rng.gen_range(0.1..2.0)).collect();
            ConeSpec::nonnegative_orthant(q).expect("positive order unit")
        }
        ConeFamily::Wedge => {
            let a: f64 = rng.gen_range(0.5..2.0);
            let b = rng.gen_range(-0.9 * a..0.9 * a);
            ConeSpec::new(vec![vec![1.0, 1.0], vec![1.0, -1.0]], vec![a, b]).expect("|b| < a")
        }
    }
}

pub fn random_point(rng: &mut impl Rng, m: usize, bound: f64) -> Vec<f64> {
    (0..m).map(|_| rng.gen_range(-bound..=bound)).collect()
}

/// Cone, point `y ∈ [-10, 10]^m` and the family used.
pub fn random_triple(rng: &mut impl Rng) -> (ConeFamily, ConeSpec, Vec<f64>) {
    let family = *ConeFamily::ALL.choose(rng).expect("nonempty");
    let cone = random_cone(rng, family);
    let y = random_point(rng, family.dim(), 10.0);
    (family, cone, y)
}

/// Half-integer coordinates in `[-4, 4]`, so ties and exact dominance occur.
fn coarse(rng: &mut impl Rng, m: usize) -> Vec<f64> {
    (0..m).map(|_| rng.gen_range(-8i32..=8) as f64 / 2.0).collect()
}

/// A table problem with image dimension 2 or 3, at most 50 grid points on
/// the line and at most 6 points per cloud.
pub fn random_problem(rng: &mut impl Rng) -> SetValuedProblem {
    let family = *ConeFamily::ALL.choose(rng).expect("nonempty");
    let cone = random_cone(rng, family);
    let m = family.dim();
    let n_points = rng.gen_range(1..=50);
    let mut xs: Vec<i32> = (0..100).collect();
    xs.shuffle(rng);
    let mut xs: Vec<f64> = xs[..n_points].iter().map(|&v| v as f64 / 10.0).collect();
    xs.sort_by(f64::total_cmp);
    let entries = xs
        .iter()
        .map(|&x| {
            let k = rng.gen_range(1..=6);
            TableEntry { x: vec![x], points: (0..k).map(|_| coarse(rng, m)).collect() }
        })
        .collect();
    let grid = DomainGrid::from_points(xs.into_iter().map(|x| vec![x]).collect()).expect("distinct points");
    SetValuedProblem::new(grid, MapModel::Table { entries }, cone, Tolerances::default(), Flags::default())
        .expect("random problems are valid")
}
