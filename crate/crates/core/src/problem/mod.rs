//! The set optimization instance: a finite domain sample, a set-valued map
//! model, a cone and tolerances.

mod domain;
mod map;

use rayon::prelude::*;

pub use domain::{distance, norm, DomainGrid, GridBox};
pub use map::{AffineMap, AxisInterval, CenterPiece, CloudSpec, IntervalPiece, MapModel, Piece, Region, TableEntry};

use crate::cone::ConeSpec;
use crate::error::{check_dim, Result, SetOptError};
use crate::schema::{ConeDocument, DomainDocument, Flags, ProblemDocument, Tolerances, SCHEMA_VERSION};
use crate::setrel::PointCloudSet;

/// A validated problem. Every cloud `F(x)` on the grid is materialized at
/// construction, so evaluation on the grid cannot fail afterwards.
#[derive(Debug, Clone)]
pub struct SetValuedProblem {
    grid: DomainGrid,
    map: MapModel,
    cone: ConeSpec,
    tolerances: Tolerances,
    flags: Flags,
    restriction: Option<f64>,
    clouds: Vec<PointCloudSet>,
}

/// A cloud evaluated off the grid, with the distance to the point actually
/// used (zero for analytic kinds).
#[derive(Debug, Clone)]
pub struct OffGridValue {
    pub cloud: PointCloudSet,
    pub snap_distance: f64,
}

pub fn build_problem(doc: &ProblemDocument) -> Result<SetValuedProblem> {
    doc.check_shallow()?;
    doc.tolerances.validate()?;
    let cone = ConeSpec::with_tolerance(doc.cone.dual_generators.clone(), doc.cone.q.clone(), doc.tolerances.cone_tol)?;
    let grid = build_grid(&doc.domain)?;
    SetValuedProblem::new(grid, doc.map.clone(), cone, doc.tolerances, doc.flags)
}

fn build_grid(d: &DomainDocument) -> Result<DomainGrid> {
    match (&d.points, &d.bounds, &d.resolution) {
        (Some(points), None, None) => DomainGrid::from_points(points.clone()),
        (None, Some(bounds), Some(resolution)) => DomainGrid::from_box(GridBox {
            lower: bounds.iter().map(|b| b[0]).collect(),
            upper: bounds.iter().map(|b| b[1]).collect(),
            resolution: resolution.clone(),
        }),
        (None, Some(_), None) => Err(SetOptError::Schema("domain box requires resolution".into())),
        _ => Err(SetOptError::Schema("domain needs exactly one of points or box+resolution".into())),
    }
}

impl SetValuedProblem {
    pub fn new(grid: DomainGrid, map: MapModel, cone: ConeSpec, tolerances: Tolerances, flags: Flags) -> Result<Self> {
        tolerances.validate()?;
        map.validate(cone.dim(), grid.dim())?;
        let clouds = materialize(&grid, &map, cone.dim())?;
        Ok(SetValuedProblem { grid, map, cone, tolerances, flags, restriction: None, clouds })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        build_problem(&ProblemDocument::from_json(text)?)
    }

    pub fn grid(&self) -> &DomainGrid {
        &self.grid
    }

    pub fn map(&self) -> &MapModel {
        &self.map
    }

    pub fn cone(&self) -> &ConeSpec {
        &self.cone
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tolerances
    }

    pub fn flags(&self) -> &Flags {
        &self.flags
    }

    /// Radius of the norm ball the grid was restricted to, if any.
    pub fn restriction(&self) -> Option<f64> {
        self.restriction
    }

    pub fn clouds(&self) -> &[PointCloudSet] {
        &self.clouds
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<&PointCloudSet> {
        check_dim(self.grid.dim(), x.len())?;
        let i = self.grid.index_of(x).ok_or_else(|| SetOptError::NotInGrid(x.to_vec()))?;
        Ok(&self.clouds[i])
    }

    pub fn evaluate_index(&self, i: usize) -> &PointCloudSet {
        &self.clouds[i]
    }

    /// `F(x)` at an arbitrary point: analytic kinds are evaluated directly,
    /// tables snap to the nearest grid point.
    pub fn evaluate_at(&self, x: &[f64]) -> Result<OffGridValue> {
        check_dim(self.grid.dim(), x.len())?;
        if let Some(cloud) = self.map.evaluate_analytic(x)? {
            return Ok(OffGridValue { cloud, snap_distance: 0.0 });
        }
        let (i, d) = self.grid.nearest(x);
        Ok(OffGridValue { cloud: self.clouds[i].clone(), snap_distance: d })
    }

    /// The same problem on `K_n = {x in grid : ‖x‖ <= radius}`.
    pub fn restricted_to_ball(&self, radius: f64) -> Result<Self> {
        if !(radius > 0.0) {
            return Err(SetOptError::InvalidArgument(format!("restriction radius {radius} must be positive")));
        }
        let keep: Vec<usize> = (0..self.grid.len())
            .filter(|&i| norm(self.grid.point(i)) <= radius * (1.0 + 1e-12))
            .collect();
        let grid = self.grid.restricted(radius)?;
        let clouds = keep.iter().map(|&i| self.clouds[i].clone()).collect();
        let restriction = Some(self.restriction.map_or(radius, |r| r.min(radius)));
        Ok(SetValuedProblem { grid, clouds, restriction, ..self.clone() })
    }

    /// Same problem with the order unit scaled by `t > 0`.
    pub fn with_scaled_unit(&self, t: f64) -> Result<Self> {
        Ok(SetValuedProblem { cone: self.cone.with_scaled_unit(t)?, ..self.clone() })
    }

    pub fn to_document(&self) -> ProblemDocument {
        let domain = match (self.grid.bbox(), self.restriction) {
            (Some(b), None) => DomainDocument::boxed(
                b.lower.iter().zip(&b.upper).map(|(&lo, &hi)| [lo, hi]).collect(),
                b.resolution.clone(),
            ),
            _ => DomainDocument::points(self.grid.points().to_vec()),
        };
        ProblemDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            cone: ConeDocument {
                dual_generators: self.cone.dual_generators().to_vec(),
                q: self.cone.order_unit().to_vec(),
            },
            domain,
            map: self.map.clone(),
            tolerances: self.tolerances,
            flags: self.flags,
        }
    }
}

fn materialize(grid: &DomainGrid, map: &MapModel, m: usize) -> Result<Vec<PointCloudSet>> {
    if let MapModel::Table { entries } = map {
        let mut slots: Vec<Option<PointCloudSet>> = vec![None; grid.len()];
        for e in entries {
            let i = grid.index_of(&e.x).ok_or_else(|| SetOptError::NotInGrid(e.x.clone()))?;
            if slots[i].is_some() {
                return Err(SetOptError::Schema(format!("duplicate table entry for x = {:?}", e.x)));
            }
            let cloud = PointCloudSet::new(e.points.clone())?;
            check_dim(m, cloud.dim())?;
            slots[i] = Some(cloud);
        }
        return slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or_else(|| SetOptError::Schema(format!("no table entry for grid point {:?}", grid.point(i)))))
            .collect();
    }
    grid.points()
        .par_iter()
        .map(|x| {
            let cloud = map.evaluate_analytic(x)?.expect("analytic kind");
            check_dim(m, cloud.dim())?;
            Ok(cloud)
        })
        .collect()
}
