//! Set-valued map models.
//!
//! Every kind except `table` is analytic: it can be evaluated at any point of
//! `R^n`, not only at grid points. Piecewise kinds use first-match region
//! semantics, so overlapping regions resolve to the earliest listed piece.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Result, SetOptError};
use crate::setrel::PointCloudSet;

fn is_false(b: &bool) -> bool {
    !*b
}

fn default_interval_samples() -> usize {
    2
}

fn default_scale() -> f64 {
    1.0
}

/// `y = offset + linear · φ(x) + quadratic · x²` where `φ(x) = x` or `|x|`
/// and `x²` are taken componentwise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffineMap {
    pub offset: Vec<f64>,
    /// `m × n` matrix; empty means zero.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub linear: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub abs: bool,
    /// `m × n` matrix acting on squared coordinates; empty means zero.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub quadratic: Vec<Vec<f64>>,
}

impl AffineMap {
    pub fn constant(offset: Vec<f64>) -> Self {
        AffineMap { offset, linear: Vec::new(), abs: false, quadratic: Vec::new() }
    }

    pub fn new(offset: Vec<f64>, linear: Vec<Vec<f64>>) -> Self {
        AffineMap { offset, linear, abs: false, quadratic: Vec::new() }
    }

    pub fn with_quadratic(mut self, quadratic: Vec<Vec<f64>>) -> Self {
        self.quadratic = quadratic;
        self
    }

    pub fn with_abs(mut self) -> Self {
        self.abs = true;
        self
    }

    fn validate(&self, m: usize, n: usize) -> Result<()> {
        check_dim(m, self.offset.len())?;
        if !self.linear.is_empty() {
            check_dim(m, self.linear.len())?;
            for row in &self.linear {
                check_dim(n, row.len())?;
            }
        }
        if !self.quadratic.is_empty() {
            check_dim(m, self.quadratic.len())?;
            for row in &self.quadratic {
                check_dim(n, row.len())?;
            }
        }
        Ok(())
    }

    pub fn eval(&self, x: &[f64]) -> Vec<f64> {
        let mut y = self.offset.clone();
        for (yi, row) in y.iter_mut().zip(&self.linear) {
            *yi += row
                .iter()
                .zip(x)
                .map(|(a, &xi)| a * if self.abs { xi.abs() } else { xi })
                .sum::<f64>();
        }
        for (yi, row) in y.iter_mut().zip(&self.quadratic) {
            *yi += row.iter().zip(x).map(|(a, &xi)| a * xi * xi).sum::<f64>();
        }
        y
    }
}

/// One axis of a half-open box region; a missing bound is infinite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisInterval {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lo: Option<f64>,
    #[serde(default)]
    pub lo_closed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hi: Option<f64>,
    #[serde(default)]
    pub hi_closed: bool,
}

impl AxisInterval {
    pub fn unbounded() -> Self {
        AxisInterval { lo: None, lo_closed: false, hi: None, hi_closed: false }
    }

    pub fn new(lo: Option<f64>, lo_closed: bool, hi: Option<f64>, hi_closed: bool) -> Self {
        AxisInterval { lo, lo_closed, hi, hi_closed }
    }

    fn contains(&self, v: f64) -> bool {
        let lo_ok = match self.lo {
            None => true,
            Some(lo) if self.lo_closed => v >= lo,
            Some(lo) => v > lo,
        };
        let hi_ok = match self.hi {
            None => true,
            Some(hi) if self.hi_closed => v <= hi,
            Some(hi) => v < hi,
        };
        lo_ok && hi_ok
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Region {
    All,
    Point { at: Vec<f64> },
    Box { axes: Vec<AxisInterval> },
}

const POINT_REGION_TOL: f64 = 1e-12;

impl Region {
    /// Single-axis region for one-dimensional domains.
    pub fn interval(lo: Option<f64>, lo_closed: bool, hi: Option<f64>, hi_closed: bool) -> Self {
        Region::Box { axes: vec![AxisInterval::new(lo, lo_closed, hi, hi_closed)] }
    }

    fn validate(&self, n: usize) -> Result<()> {
        match self {
            Region::All => Ok(()),
            Region::Point { at } => check_dim(n, at.len()),
            Region::Box { axes } => check_dim(n, axes.len()),
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        match self {
            Region::All => true,
            Region::Point { at } => at
                .iter()
                .zip(x)
                .all(|(a, b)| (a - b).abs() <= POINT_REGION_TOL * a.abs().max(1.0)),
            Region::Box { axes } => axes.iter().zip(x).all(|(ax, &v)| ax.contains(v)),
        }
    }
}

/// Constructor for one value `F(x)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CloudSpec {
    /// Fixed points.
    Points { points: Vec<Vec<f64>> },
    /// One point per affine map.
    Affine { maps: Vec<AffineMap> },
    /// `[lower(x), upper(x)] ⊂ R` sampled at `samples` evenly spaced points.
    Interval {
        lower: AffineMap,
        upper: AffineMap,
        #[serde(default = "default_interval_samples")]
        samples: usize,
    },
    /// Closed ball around `center(x)`; in `R^2` sampled on the angular lattice
    /// `2πk / samples`, which contains angle π whenever `samples` is even.
    Ball { center: AffineMap, radius: f64, samples: usize },
    /// Tensor grid over an axis-aligned box with optional excluded points.
    Box {
        lower: Vec<f64>,
        upper: Vec<f64>,
        resolution: Vec<usize>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        exclude: Vec<Vec<f64>>,
    },
    /// Boundary `{(a, scale / a) : a > 0}` sampled at
    /// `a_k = 10^(log10_step · (k - (count - 1) / 2))`. This truncates an
    /// unbounded set.
    Hyperbola {
        count: usize,
        log10_step: f64,
        #[serde(default = "default_scale")]
        scale: f64,
    },
}

impl CloudSpec {
    pub fn points(points: Vec<Vec<f64>>) -> Self {
        CloudSpec::Points { points }
    }

    /// True when the cloud samples a set on which the scalarization may not
    /// attain its infimum.
    pub fn is_truncated_sample(&self) -> bool {
        matches!(self, CloudSpec::Hyperbola { .. })
    }

    fn validate(&self, m: usize, n: usize) -> Result<()> {
        match self {
            CloudSpec::Points { points } => {
                if points.is_empty() {
                    return Err(SetOptError::EmptyCloud);
                }
                for p in points {
                    check_dim(m, p.len())?;
                }
            }
            CloudSpec::Affine { maps } => {
                if maps.is_empty() {
                    return Err(SetOptError::EmptyCloud);
                }
                for f in maps {
                    f.validate(m, n)?;
                }
            }
            CloudSpec::Interval { lower, upper, samples } => {
                if m != 1 {
                    return Err(SetOptError::Schema(format!("interval clouds need image dimension 1, got {m}")));
                }
                if *samples < 2 {
                    return Err(SetOptError::Schema("interval clouds need at least 2 samples".into()));
                }
                lower.validate(1, n)?;
                upper.validate(1, n)?;
            }
            CloudSpec::Ball { center, radius, samples } => {
                if !(m == 1 || m == 2) {
                    return Err(SetOptError::Schema(format!("ball clouds support image dimension 1 or 2, got {m}")));
                }
                if !(*radius >= 0.0 && radius.is_finite()) {
                    return Err(SetOptError::Schema(format!("ball radius {radius} must be finite and >= 0")));
                }
                if *samples == 0 {
                    return Err(SetOptError::Schema("ball clouds need at least one sample".into()));
                }
                center.validate(m, n)?;
            }
            CloudSpec::Box { lower, upper, resolution, exclude } => {
                check_dim(m, lower.len())?;
                check_dim(m, upper.len())?;
                check_dim(m, resolution.len())?;
                for ((lo, hi), r) in lower.iter().zip(upper).zip(resolution) {
                    if lo > hi || *r == 0 {
                        return Err(SetOptError::Schema(format!("bad box sampler axis [{lo}, {hi}] x {r}")));
                    }
                }
                for p in exclude {
                    check_dim(m, p.len())?;
                }
            }
            CloudSpec::Hyperbola { count, log10_step, scale } => {
                if m != 2 {
                    return Err(SetOptError::Schema(format!("hyperbola clouds need image dimension 2, got {m}")));
                }
                if *count == 0 || !(*log10_step >= 0.0) || !(*scale > 0.0) {
                    return Err(SetOptError::Schema("hyperbola needs count >= 1, log10_step >= 0, scale > 0".into()));
                }
            }
        }
        Ok(())
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<PointCloudSet> {
        match self {
            CloudSpec::Points { points } => PointCloudSet::new(points.clone()),
            CloudSpec::Affine { maps } => PointCloudSet::new(maps.iter().map(|f| f.eval(x)).collect()),
            CloudSpec::Interval { lower, upper, samples } => {
                let lo = lower.eval(x)[0];
                let hi = upper.eval(x)[0];
                if lo > hi {
                    return Err(SetOptError::IntervalViolation { x: x.to_vec(), lower: lo, upper: hi });
                }
                let pts = if lo == hi {
                    vec![vec![lo]]
                } else {
                    let n = *samples;
                    (0..n).map(|k| vec![lerp(lo, hi, k, n)]).collect()
                };
                Ok(PointCloudSet::new(pts)?.with_note(format!("{samples}-point sample of [{lo}, {hi}]")))
            }
            CloudSpec::Ball { center, radius, samples } => {
                let c = center.eval(x);
                let n = *samples;
                let pts: Vec<Vec<f64>> = if c.len() == 1 {
                    if n == 1 {
                        vec![vec![c[0]]]
                    } else {
                        (0..n).map(|k| vec![lerp(c[0] - radius, c[0] + radius, k, n)]).collect()
                    }
                } else {
                    (0..n)
                        .map(|k| {
                            let th = 2.0 * PI * k as f64 / n as f64;
                            vec![c[0] + radius * th.cos(), c[1] + radius * th.sin()]
                        })
                        .collect()
                };
                Ok(PointCloudSet::new(pts)?
                    .with_note(format!("angular lattice of {n} points on the sphere of radius {radius} around {c:?}")))
            }
            CloudSpec::Box { lower, upper, resolution, exclude } => {
                let axes: Vec<Vec<f64>> = lower
                    .iter()
                    .zip(upper)
                    .zip(resolution)
                    .map(|((&lo, &hi), &r)| axis_values(lo, hi, r))
                    .collect();
                let pts: Vec<Vec<f64>> = tensor(&axes)
                    .into_iter()
                    .filter(|p| !exclude.iter().any(|e| same_point(e, p)))
                    .collect();
                Ok(PointCloudSet::new(pts)?
                    .with_note(format!("tensor grid {resolution:?} over box {lower:?}..{upper:?}")))
            }
            CloudSpec::Hyperbola { count, log10_step, scale } => {
                let mid = (*count as f64 - 1.0) / 2.0;
                let pts: Vec<Vec<f64>> = (0..*count)
                    .map(|k| {
                        let a = 10f64.powf(log10_step * (k as f64 - mid));
                        vec![a, scale / a]
                    })
                    .collect();
                let a_min = pts[0][0];
                let a_max = pts[pts.len() - 1][0];
                Ok(PointCloudSet::new(pts)?.with_note(format!(
                    "truncated log-grid sample ({count} points, a in [{a_min:e}, {a_max:e}]) of the unbounded set b >= {scale}/a, a > 0"
                )))
            }
        }
    }
}

fn same_point(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= 1e-12 * x.abs().max(1.0))
}

/// `lo + (hi - lo) k / (n - 1)`, exact at both ends.
pub(crate) fn lerp(lo: f64, hi: f64, k: usize, n: usize) -> f64 {
    if n <= 1 {
        return lo;
    }
    if k + 1 == n {
        return hi;
    }
    lo + (hi - lo) * k as f64 / (n - 1) as f64
}

pub(crate) fn axis_values(lo: f64, hi: f64, r: usize) -> Vec<f64> {
    (0..r).map(|k| lerp(lo, hi, k, r)).collect()
}

/// Cartesian product, first axis slowest.
pub(crate) fn tensor(axes: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = vec![Vec::new()];
    for axis in axes {
        let mut next = Vec::with_capacity(out.len() * axis.len());
        for prefix in &out {
            for &v in axis {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub x: Vec<f64>,
    pub points: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Piece {
    pub region: Region,
    pub cloud: CloudSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntervalPiece {
    pub region: Region,
    pub lower: AffineMap,
    pub upper: AffineMap,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CenterPiece {
    pub region: Region,
    pub center: AffineMap,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "parameters", rename_all = "snake_case")]
pub enum MapModel {
    /// Explicit clouds per grid point.
    Table { entries: Vec<TableEntry> },
    Constant { cloud: CloudSpec },
    /// `F(x) = [F^L(x), F^U(x)] ⊂ R` with piecewise-affine endpoints.
    Interval {
        pieces: Vec<IntervalPiece>,
        #[serde(default = "default_interval_samples")]
        samples: usize,
    },
    /// `F(x) = center(x) + radius · B`, center piecewise-affine.
    Ball { centers: Vec<CenterPiece>, radius: f64, samples: usize },
    Piecewise { pieces: Vec<Piece> },
}

impl MapModel {
    pub fn kind(&self) -> &'static str {
        match self {
            MapModel::Table { .. } => "table",
            MapModel::Constant { .. } => "constant",
            MapModel::Interval { .. } => "interval",
            MapModel::Ball { .. } => "ball",
            MapModel::Piecewise { .. } => "piecewise",
        }
    }

    pub fn is_analytic(&self) -> bool {
        !matches!(self, MapModel::Table { .. })
    }

    pub(crate) fn validate(&self, m: usize, n: usize) -> Result<()> {
        match self {
            MapModel::Table { entries } => {
                if entries.is_empty() {
                    return Err(SetOptError::Schema("table map has no entries".into()));
                }
                for e in entries {
                    check_dim(n, e.x.len())?;
                    CloudSpec::Points { points: e.points.clone() }.validate(m, n)?;
                }
            }
            MapModel::Constant { cloud } => cloud.validate(m, n)?,
            MapModel::Interval { pieces, samples } => {
                if pieces.is_empty() {
                    return Err(SetOptError::Schema("interval map has no pieces".into()));
                }
                for p in pieces {
                    p.region.validate(n)?;
                    CloudSpec::Interval { lower: p.lower.clone(), upper: p.upper.clone(), samples: *samples }
                        .validate(m, n)?;
                }
            }
            MapModel::Ball { centers, radius, samples } => {
                if centers.is_empty() {
                    return Err(SetOptError::Schema("ball map has no center pieces".into()));
                }
                for p in centers {
                    p.region.validate(n)?;
                    CloudSpec::Ball { center: p.center.clone(), radius: *radius, samples: *samples }.validate(m, n)?;
                }
            }
            MapModel::Piecewise { pieces } => {
                if pieces.is_empty() {
                    return Err(SetOptError::Schema("piecewise map has no pieces".into()));
                }
                for p in pieces {
                    p.region.validate(n)?;
                    p.cloud.validate(m, n)?;
                }
            }
        }
        Ok(())
    }

    /// Evaluates an analytic kind anywhere; `None` for tables.
    pub(crate) fn evaluate_analytic(&self, x: &[f64]) -> Result<Option<PointCloudSet>> {
        let no_region = || SetOptError::Schema(format!("no region matches x = {x:?}"));
        let cloud = match self {
            MapModel::Table { .. } => return Ok(None),
            MapModel::Constant { cloud } => cloud.evaluate(x)?,
            MapModel::Interval { pieces, samples } => {
                let p = pieces.iter().find(|p| p.region.contains(x)).ok_or_else(no_region)?;
                CloudSpec::Interval { lower: p.lower.clone(), upper: p.upper.clone(), samples: *samples }.evaluate(x)?
            }
            MapModel::Ball { centers, radius, samples } => {
                let p = centers.iter().find(|p| p.region.contains(x)).ok_or_else(no_region)?;
                CloudSpec::Ball { center: p.center.clone(), radius: *radius, samples: *samples }.evaluate(x)?
            }
            MapModel::Piecewise { pieces } => {
                let p = pieces.iter().find(|p| p.region.contains(x)).ok_or_else(no_region)?;
                p.cloud.evaluate(x)?
            }
        };
        Ok(Some(cloud))
    }

    /// Any cloud constructor that truncates an unbounded analytic set.
    pub fn truncated_samplers(&self) -> Vec<&CloudSpec> {
        match self {
            MapModel::Constant { cloud } => vec![cloud].into_iter().filter(|c| c.is_truncated_sample()).collect(),
            MapModel::Piecewise { pieces } => {
                pieces.iter().map(|p| &p.cloud).filter(|c| c.is_truncated_sample()).collect()
            }
            _ => Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_abs() {
        let f = AffineMap::new(vec![0.0, 0.0], vec![vec![1.0, 0.0], vec![0.0, 1.0]]).with_abs();
        assert_eq!(f.eval(&[-2.0, 3.0]), vec![2.0, 3.0]);
        let g = AffineMap::new(vec![1.0], vec![vec![-1.0]]);
        assert_eq!(g.eval(&[0.25]), vec![0.75]);
    }

    #[test]
    fn half_open_regions() {
        let r = Region::interval(Some(-0.5), false, Some(1.5), false);
        assert!(!r.contains(&[-0.5]));
        assert!(r.contains(&[0.0]));
        assert!(!r.contains(&[1.5]));
        let r = Region::interval(None, false, Some(-0.5), true);
        assert!(r.contains(&[-0.5]));
        assert!(r.contains(&[-1e9]));
    }

    #[test]
    fn ball_lattice_hits_extreme_points() {
        let c = CloudSpec::Ball { center: AffineMap::constant(vec![-3.0, 2.0]), radius: 1.0, samples: 4 };
        let cloud = c.evaluate(&[1.0, 0.0]).unwrap();
        let expected = [[-2.0, 2.0], [-3.0, 3.0], [-4.0, 2.0], [-3.0, 1.0]];
        for (p, e) in cloud.points().iter().zip(expected) {
            assert!((p[0] - e[0]).abs() < 1e-12 && (p[1] - e[1]).abs() < 1e-12, "{p:?} vs {e:?}");
        }
    }

    #[test]
    fn box_sampler_excludes_points() {
        let c = CloudSpec::Box {
            lower: vec![0.0, 0.0],
            upper: vec![1.0, 2.0],
            resolution: vec![2, 3],
            exclude: vec![vec![0.0, 0.0]],
        };
        let cloud = c.evaluate(&[0.0]).unwrap();
        assert_eq!(cloud.len(), 5);
        assert!(cloud.points().contains(&vec![0.0, 2.0]));
        assert!(!cloud.points().contains(&vec![0.0, 0.0]));
    }

    #[test]
    fn interval_rejects_inverted_endpoints() {
        let c = CloudSpec::Interval {
            lower: AffineMap::constant(vec![2.0]),
            upper: AffineMap::constant(vec![1.0]),
            samples: 2,
        };
        assert!(matches!(c.evaluate(&[0.0]), Err(SetOptError::IntervalViolation { .. })));
    }

    #[test]
    fn map_model_json_shape() {
        let m = MapModel::Constant { cloud: CloudSpec::points(vec![vec![1.0, 1.0]]) };
        let v = serde_json::to_value(&m).unwrap();
        assert_eq!(v["kind"], "constant");
        assert_eq!(v["parameters"]["cloud"]["type"], "points");
        let back: MapModel = serde_json::from_value(v).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn hyperbola_is_symmetric_in_log_space() {
        let c = CloudSpec::Hyperbola { count: 5, log10_step: 1.0, scale: 1.0 };
        let cloud = c.evaluate(&[0.0]).unwrap();
        assert!((cloud.points()[0][0] - 0.01).abs() < 1e-15);
        assert!((cloud.points()[4][0] - 100.0).abs() < 1e-12);
        assert!(cloud.sampling_note().unwrap().contains("truncated"));
    }
}
