use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Result, SetOptError};
use crate::problem::map::{axis_values, tensor};

/// Axis-aligned box with a per-axis point count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridBox {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub resolution: Vec<usize>,
}

impl GridBox {
    /// Distance between neighbouring lattice values on `axis`; zero for a
    /// single-value axis.
    pub fn step(&self, axis: usize) -> f64 {
        let r = self.resolution[axis];
        if r <= 1 {
            0.0
        } else {
            (self.upper[axis] - self.lower[axis]) / (r - 1) as f64
        }
    }

    /// Largest per-axis step.
    pub fn max_step(&self) -> f64 {
        (0..self.lower.len()).map(|a| self.step(a)).fold(0.0, f64::max)
    }

    /// True when `x` is at least one grid step away from every face
    /// (a small relative slack absorbs rounding).
    pub fn strictly_inside(&self, x: &[f64]) -> bool {
        x.iter().enumerate().all(|(a, &v)| {
            let h = self.step(a);
            if h == 0.0 {
                return true;
            }
            let slack = 1e-9 * h;
            v - self.lower[a] >= h - slack && self.upper[a] - v >= h - slack
        })
    }
}

/// Finite sample of the decision space `R^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainGrid {
    dim: usize,
    points: Vec<Vec<f64>>,
    bbox: Option<GridBox>,
}

const MATCH_TOL: f64 = 1e-9;

impl DomainGrid {
    pub fn from_points(points: Vec<Vec<f64>>) -> Result<Self> {
        let dim = points.first().ok_or(SetOptError::EmptyGrid)?.len();
        if dim == 0 {
            return Err(SetOptError::Schema("domain points must have positive dimension".into()));
        }
        for p in &points {
            check_dim(dim, p.len())?;
            if p.iter().any(|v| !v.is_finite()) {
                return Err(SetOptError::Schema(format!("non-finite domain point {p:?}")));
            }
        }
        let mut sorted: Vec<&Vec<f64>> = points.iter().collect();
        sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(SetOptError::Schema(format!("duplicate domain point {:?}", w[0])));
        }
        Ok(DomainGrid { dim, points, bbox: None })
    }

    pub fn from_box(bbox: GridBox) -> Result<Self> {
        let n = bbox.lower.len();
        if n == 0 {
            return Err(SetOptError::EmptyGrid);
        }
        check_dim(n, bbox.upper.len())?;
        check_dim(n, bbox.resolution.len())?;
        for a in 0..n {
            let (lo, hi, r) = (bbox.lower[a], bbox.upper[a], bbox.resolution[a]);
            if r == 0 {
                return Err(SetOptError::EmptyGrid);
            }
            if !(lo.is_finite() && hi.is_finite()) || lo > hi || (r == 1 && lo != hi) || (r > 1 && lo == hi) {
                return Err(SetOptError::Schema(format!("bad box axis {a}: [{lo}, {hi}] with resolution {r}")));
            }
        }
        let axes: Vec<Vec<f64>> = (0..n)
            .map(|a| axis_values(bbox.lower[a], bbox.upper[a], bbox.resolution[a]))
            .collect();
        let points = tensor(&axes);
        Ok(DomainGrid { dim: n, points, bbox: Some(bbox) })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn bbox(&self) -> Option<&GridBox> {
        self.bbox.as_ref()
    }

    pub fn index_of(&self, x: &[f64]) -> Option<usize> {
        if x.len() != self.dim {
            return None;
        }
        let (i, d) = self.nearest(x);
        let scale = x.iter().map(|v| v.abs()).fold(1.0, f64::max);
        (d <= MATCH_TOL * scale).then_some(i)
    }

    /// Index of, and Euclidean distance to, the closest grid point.
    pub fn nearest(&self, x: &[f64]) -> (usize, f64) {
        self.points
            .iter()
            .enumerate()
            .map(|(i, p)| (i, distance(p, x)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("grid is nonempty")
    }

    /// Componentwise lower and upper bounds: the box when present, otherwise
    /// the hull of the points.
    pub fn hull(&self) -> (Vec<f64>, Vec<f64>) {
        if let Some(b) = &self.bbox {
            return (b.lower.clone(), b.upper.clone());
        }
        let mut lo = self.points[0].clone();
        let mut hi = self.points[0].clone();
        for p in &self.points {
            for a in 0..self.dim {
                lo[a] = lo[a].min(p[a]);
                hi[a] = hi[a].max(p[a]);
            }
        }
        (lo, hi)
    }

    /// Characteristic spacing: the largest box step, or the smallest
    /// nearest-neighbour distance for scattered points.
    pub fn spacing(&self) -> f64 {
        if let Some(b) = &self.bbox {
            let h = b.max_step();
            if h > 0.0 {
                return h;
            }
        }
        let mut best = f64::INFINITY;
        for (i, p) in self.points.iter().enumerate() {
            for q in &self.points[i + 1..] {
                best = best.min(distance(p, q));
            }
        }
        if best.is_finite() {
            best
        } else {
            1.0
        }
    }

    pub fn max_norm(&self) -> f64 {
        self.points.iter().map(|p| norm(p)).fold(0.0, f64::max)
    }

    /// Grid points of norm at most `radius`; box metadata is kept since the
    /// surviving points still lie on the same lattice.
    pub(crate) fn restricted(&self, radius: f64) -> Result<Self> {
        let points: Vec<Vec<f64>> = self
            .points
            .iter()
            .filter(|p| norm(p) <= radius * (1.0 + 1e-12))
            .cloned()
            .collect();
        if points.is_empty() {
            return Err(SetOptError::EmptyGrid);
        }
        Ok(DomainGrid { dim: self.dim, points, bbox: self.bbox.clone() })
    }
}

pub fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}
