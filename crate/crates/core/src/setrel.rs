//! Lower set-less relations on finite point clouds.
//!
//! For nonempty `A, B` and cone `P`:
//! * `A <=l B`  iff  `B ⊆ A + P`
//! * `A <l B`   iff  `B ⊆ A + int P`
//! * `A ~l B`   iff  both `A <=l B` and `B <=l A`

use serde::{Deserialize, Serialize};

use crate::cone::ConeSpec;
use crate::error::{check_dim, Result, SetOptError};

/// A nonempty finite set of image-space points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointCloudSet {
    points: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sampling_note: Option<String>,
}

impl PointCloudSet {
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        let dim = points.first().ok_or(SetOptError::EmptyCloud)?.len();
        if dim == 0 {
            return Err(SetOptError::Schema("cloud points must have positive dimension".into()));
        }
        for p in &points {
            check_dim(dim, p.len())?;
            if p.iter().any(|v| !v.is_finite()) {
                return Err(SetOptError::Schema(format!("non-finite cloud point {p:?}")));
            }
        }
        Ok(PointCloudSet { points, sampling_note: None })
    }

    pub fn singleton(point: Vec<f64>) -> Result<Self> {
        Self::new(vec![point])
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.sampling_note = Some(note.into());
        self
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn sampling_note(&self) -> Option<&str> {
        self.sampling_note.as_deref()
    }

    /// Minimum of the cone scalarization over the cloud; always attained.
    pub fn min_gerstewitz(&self, cone: &ConeSpec) -> Result<f64> {
        check_dim(cone.dim(), self.dim())?;
        Ok(self
            .points
            .iter()
            .map(|p| cone.gerstewitz_unchecked(p))
            .fold(f64::INFINITY, f64::min))
    }
}

/// Generator pairings `<w_j, y>` of every point of a cloud, laid out row-major.
/// Relation scans compare these instead of recomputing differences.
#[derive(Debug, Clone)]
pub(crate) struct ProjectedCloud {
    k: usize,
    data: Vec<f64>,
    // per-generator minimum over the cloud
    mins: Vec<f64>,
}

impl ProjectedCloud {
    pub(crate) fn new(cloud: &PointCloudSet, cone: &ConeSpec) -> Self {
        let k = cone.dual_generators().len();
        let mut data = Vec::with_capacity(k * cloud.len());
        for p in cloud.points() {
            data.extend(cone.pairings_unchecked(p));
        }
        let mut mins = vec![f64::INFINITY; k];
        for row in data.chunks_exact(k) {
            for (m, v) in mins.iter_mut().zip(row) {
                *m = m.min(*v);
            }
        }
        ProjectedCloud { k, data, mins }
    }

    fn rows(&self) -> std::slice::ChunksExact<'_, f64> {
        self.data.chunks_exact(self.k)
    }
}

/// `B ⊆ A + int P` (strict) or `B ⊆ A + P` on projected clouds.
pub(crate) fn dominated_projected(a: &ProjectedCloud, b: &ProjectedCloud, tol: f64, strict: bool) -> bool {
    // the minimizer of each pairing over B needs a partner in A, which bounds
    // the per-generator minima; this rejects most pairs without a full scan
    let feasible = b.mins.iter().zip(&a.mins).all(|(mb, ma)| {
        let d = mb - ma;
        if strict {
            d > tol
        } else {
            d >= -tol
        }
    });
    if !feasible {
        return false;
    }
    b.rows().all(|pb| {
        a.rows().any(|pa| {
            pb.iter().zip(pa).all(|(vb, va)| {
                let d = vb - va;
                if strict {
                    d > tol
                } else {
                    d >= -tol
                }
            })
        })
    })
}

fn check_pair(a: &PointCloudSet, b: &PointCloudSet, cone: &ConeSpec) -> Result<()> {
    check_dim(cone.dim(), a.dim())?;
    check_dim(cone.dim(), b.dim())
}

fn dominated(a: &PointCloudSet, b: &PointCloudSet, cone: &ConeSpec, strict: bool) -> Result<bool> {
    check_pair(a, b, cone)?;
    let mut diff = vec![0.0; cone.dim()];
    for pb in b.points() {
        let mut found = false;
        for pa in a.points() {
            for (d, (x, y)) in diff.iter_mut().zip(pb.iter().zip(pa)) {
                *d = x - y;
            }
            let ok = if strict { cone.contains_interior(&diff)? } else { cone.contains(&diff)? };
            if ok {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn lower_less(a: &PointCloudSet, b: &PointCloudSet, cone: &ConeSpec) -> Result<bool> {
    dominated(a, b, cone, false)
}

pub fn strictly_lower_less(a: &PointCloudSet, b: &PointCloudSet, cone: &ConeSpec) -> Result<bool> {
    dominated(a, b, cone, true)
}

pub fn equivalent_l(a: &PointCloudSet, b: &PointCloudSet, cone: &ConeSpec) -> Result<bool> {
    Ok(lower_less(a, b, cone)? && lower_less(b, a, cone)?)
}
