//! Problem documents for the worked examples shipped with the library.
//!
//! One-dimensional interval examples use `P = R_+` and `q = 1`. Every fixture
//! asserts the `K_q_set` flag.

use crate::problem::{AffineMap, CenterPiece, CloudSpec, IntervalPiece, MapModel, Piece, Region};
use crate::schema::{ConeDocument, DomainDocument, Flags, ProblemDocument, Tolerances, SCHEMA_VERSION};

fn document(cone: ConeDocument, domain: DomainDocument, map: MapModel) -> ProblemDocument {
    ProblemDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        cone,
        domain,
        map,
        tolerances: Tolerances::default(),
        flags: Flags { k_q_set: true },
    }
}

fn orthant(q: Vec<f64>) -> ConeDocument {
    let m = q.len();
    let gens = (0..m).map(|i| (0..m).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
    ConeDocument { dual_generators: gens, q }
}

fn line(lo: f64, hi: f64, points: usize) -> DomainDocument {
    DomainDocument::boxed(vec![[lo, hi]], vec![points])
}

/// `a + b x` on the real line.
fn affine1(a: f64, b: f64) -> AffineMap {
    AffineMap::new(vec![a], vec![vec![b]])
}

fn interval_piece(region: Region, lower: AffineMap, upper: AffineMap) -> IntervalPiece {
    IntervalPiece { region, lower, upper }
}

fn interval_1d(domain: DomainDocument, pieces: Vec<IntervalPiece>) -> ProblemDocument {
    document(orthant(vec![1.0]), domain, MapModel::Interval { pieces, samples: 2 })
}

/// `F(x) = {(x, 1 - x)}` on `[0, 1]` and the square `[3, 4]²` elsewhere,
/// with `q = (1/2, 1/2)`.
pub fn example_ii() -> ProblemDocument {
    let map = MapModel::Piecewise {
        pieces: vec![
            Piece {
                region: Region::interval(Some(0.0), true, Some(1.0), true),
                cloud: CloudSpec::Affine { maps: vec![AffineMap::new(vec![0.0, 1.0], vec![vec![1.0], vec![-1.0]])] },
            },
            Piece {
                region: Region::All,
                cloud: CloudSpec::Box {
                    lower: vec![3.0, 3.0],
                    upper: vec![4.0, 4.0],
                    resolution: vec![11, 11],
                    exclude: Vec::new(),
                },
            },
        ],
    };
    document(orthant(vec![0.5, 0.5]), line(-1.0, 2.0, 301), map)
}

/// `F(0) = {(0, 0)}` and `F(x) = {(a, b) : b >= 1/a, a > 0}` elsewhere,
/// sampled on `count` log-spaced abscissae.
pub fn example_i_with(count: usize) -> ProblemDocument {
    let map = MapModel::Piecewise {
        pieces: vec![
            Piece { region: Region::Point { at: vec![0.0] }, cloud: CloudSpec::points(vec![vec![0.0, 0.0]]) },
            Piece { region: Region::All, cloud: CloudSpec::Hyperbola { count, log10_step: 0.001, scale: 1.0 } },
        ],
    };
    document(orthant(vec![1.0, 1.0]), line(-1.0, 1.0, 21), map)
}

pub fn example_i() -> ProblemDocument {
    example_i_with(1000)
}

/// `F(x, y) = (-3, 2) + B` at `(1, 0)` and `(|x|, |y|) + B` elsewhere, with the
/// unit ball sampled on 360 angles.
pub fn e14() -> ProblemDocument {
    let identity = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
    let map = MapModel::Ball {
        centers: vec![
            CenterPiece { region: Region::Point { at: vec![1.0, 0.0] }, center: AffineMap::constant(vec![-3.0, 2.0]) },
            CenterPiece { region: Region::All, center: AffineMap::new(vec![0.0, 0.0], identity).with_abs() },
        ],
        radius: 1.0,
        samples: 360,
    };
    document(
        orthant(vec![1.0, 1.0]),
        DomainDocument::boxed(vec![[-3.0, 3.0], [-3.0, 3.0]], vec![13, 13]),
        map,
    )
}

/// `P = {(x, y) : -x <= y <= x}`, `q = (1, 0)`; `F(0)` samples
/// `{x >= 0, 0 <= y <= 2} \ {(0, 0)}` and `F(x) = {(1, 0)}` elsewhere.
pub fn cone_example() -> ProblemDocument {
    let cone = ConeDocument { dual_generators: vec![vec![1.0, 1.0], vec![1.0, -1.0]], q: vec![1.0, 0.0] };
    let map = MapModel::Piecewise {
        pieces: vec![
            Piece {
                region: Region::Point { at: vec![0.0] },
                cloud: CloudSpec::Box {
                    lower: vec![0.0, 0.0],
                    upper: vec![4.0, 2.0],
                    resolution: vec![41, 21],
                    exclude: vec![vec![0.0, 0.0]],
                },
            },
            Piece { region: Region::All, cloud: CloudSpec::points(vec![vec![1.0, 0.0]]) },
        ],
    };
    document(cone, line(-2.0, 2.0, 41), map)
}

/// `F = [F^L, |2x|]` with `F^L = |x|` for `x < 1` and `2x` for `x >= 1`.
pub fn interval_srgi_on(lo: f64, hi: f64, points: usize) -> ProblemDocument {
    interval_1d(
        line(lo, hi, points),
        vec![
            interval_piece(Region::interval(None, false, Some(0.0), false), affine1(0.0, -1.0), affine1(0.0, -2.0)),
            interval_piece(Region::interval(Some(0.0), true, Some(1.0), false), affine1(0.0, 1.0), affine1(0.0, 2.0)),
            interval_piece(Region::interval(Some(1.0), true, None, false), affine1(0.0, 2.0), affine1(0.0, 2.0)),
        ],
    )
}

pub fn interval_srgi() -> ProblemDocument {
    interval_srgi_on(-1.5, 2.5, 81)
}

/// `F(x) = [x, x + 1]` for `x >= 0` and `[-1, 0]` for `x < 0`.
pub fn asymptotic_1d() -> ProblemDocument {
    interval_1d(
        line(-10.0, 10.0, 201),
        vec![
            interval_piece(Region::interval(Some(0.0), true, None, false), affine1(0.0, 1.0), affine1(1.0, 1.0)),
            interval_piece(Region::interval(None, false, Some(0.0), false), affine1(-1.0, 0.0), affine1(0.0, 0.0)),
        ],
    )
}

/// Coercive but not regular on the unit ball:
/// `[1, 1/2 - x]` for `x <= -1/2`, `[3x/4 + 7/8, 2]` on `(-1/2, 3/2)` and
/// `{x - 3/2}` for `x >= 3/2`.
pub fn remark_ii() -> ProblemDocument {
    interval_1d(
        line(-3.0, 3.0, 121),
        vec![
            interval_piece(Region::interval(None, false, Some(-0.5), true), affine1(1.0, 0.0), affine1(0.5, -1.0)),
            interval_piece(
                Region::interval(Some(-0.5), false, Some(1.5), false),
                affine1(0.875, 0.75),
                affine1(2.0, 0.0),
            ),
            interval_piece(Region::interval(Some(1.5), true, None, false), affine1(-1.5, 1.0), affine1(-1.5, 1.0)),
        ],
    )
}

/// `F(x) = [x², x² + 1]`: lower semicontinuous, so every colevel set is closed.
pub fn lsc_interval() -> ProblemDocument {
    let lower = AffineMap::constant(vec![0.0]).with_quadratic(vec![vec![1.0]]);
    let upper = AffineMap::constant(vec![1.0]).with_quadratic(vec![vec![1.0]]);
    interval_1d(line(-2.0, 2.0, 41), vec![interval_piece(Region::All, lower, upper)])
}

/// `F(x) = {(2, 2)}` on a 5×5 box, with `q = (1, 1)`.
pub fn constant() -> ProblemDocument {
    document(
        orthant(vec![1.0, 1.0]),
        DomainDocument::boxed(vec![[-2.0, 2.0], [-2.0, 2.0]], vec![5, 5]),
        MapModel::Constant { cloud: CloudSpec::points(vec![vec![2.0, 2.0]]) },
    )
}

/// Every shipped fixture with its file stem.
pub fn all() -> Vec<(&'static str, ProblemDocument)> {
    vec![
        ("example_i", example_i()),
        ("example_ii", example_ii()),
        ("e14", e14()),
        ("cone_example", cone_example()),
        ("interval_srgi", interval_srgi()),
        ("asymptotic_1d", asymptotic_1d()),
        ("remark_ii", remark_ii()),
        ("lsc_interval", lsc_interval()),
        ("constant", constant()),
    ]
}
