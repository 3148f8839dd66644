//! The scalarization `Ψ_F(x) = min_{z in F(x)} ψ(z)`, its infimum `M_F^q`
//! and colevel sets.
//!
//! Colevel sets are computed from the definition
//! `Colev(F, λq) = {x : λq ⊀ˡ F(x)}` and from the scalar sublevel set
//! `{Ψ_F <= λ}`; both must agree up to the tie tolerance.

use rayon::prelude::*;

use crate::cone::ScalarValue;
use crate::error::{check_dim, Result, SetOptError};
use crate::problem::SetValuedProblem;
use crate::report;
use crate::setrel::{dominated_projected, strictly_lower_less, PointCloudSet, ProjectedCloud};

/// `Ψ_F` on every grid point together with its minimum.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    points: Vec<Vec<f64>>,
    values: Vec<ScalarValue>,
    m_f_q: ScalarValue,
}

impl ScalarField {
    pub fn compute(problem: &SetValuedProblem) -> Self {
        let cone = problem.cone();
        let values: Vec<ScalarValue> = problem
            .clouds()
            .par_iter()
            .map(|c| ScalarValue(c.min_gerstewitz(cone).expect("clouds validated against the cone")))
            .collect();
        let m = values.iter().map(|v| v.0).fold(f64::INFINITY, f64::min);
        ScalarField { points: problem.grid().points().to_vec(), values, m_f_q: ScalarValue(m) }
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn values(&self) -> &[ScalarValue] {
        &self.values
    }

    pub fn value(&self, i: usize) -> f64 {
        self.values[i].0
    }

    pub fn m_f_q(&self) -> ScalarValue {
        self.m_f_q
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Grid indices with `Ψ_F <= M_F^q + tie_tol`.
    pub fn argmin_indices(&self, tie_tol: f64) -> Vec<usize> {
        let bound = self.m_f_q.0 + tie_tol;
        (0..self.len()).filter(|&i| self.values[i].0 <= bound).collect()
    }

    /// Grid indices with `Ψ_F <= λ + tie_tol`.
    pub fn sublevel_indices(&self, lambda: f64, tie_tol: f64) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.values[i].0 <= lambda + tie_tol).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let table: Vec<serde_json::Value> = self
            .points
            .iter()
            .zip(&self.values)
            .map(|(x, v)| report::object([("x", report::point(x)), ("psi", report::num(v.0))]))
            .collect();
        report::object([
            ("m_f_q", report::num(self.m_f_q.0)),
            ("values", serde_json::Value::Array(table)),
        ])
    }
}

/// `Ψ_F(x)` at a grid point.
pub fn psi_f(problem: &SetValuedProblem, x: &[f64]) -> Result<ScalarValue> {
    let cloud = problem.evaluate(x)?;
    Ok(ScalarValue(cloud.min_gerstewitz(problem.cone())?))
}

/// `Ψ_F(x)` anywhere, through the analytic map or by snapping for tables.
/// Returns the value and the snap distance.
pub fn psi_f_at(problem: &SetValuedProblem, x: &[f64]) -> Result<(f64, f64)> {
    let v = problem.evaluate_at(x)?;
    Ok((v.cloud.min_gerstewitz(problem.cone())?, v.snap_distance))
}

pub fn m_f_q(problem: &SetValuedProblem) -> ScalarValue {
    ScalarField::compute(problem).m_f_q()
}

/// Colevel set at `λq` as grid indices, using a precomputed field.
pub fn colevel_indices(problem: &SetValuedProblem, field: &ScalarField, lambda: f64) -> Result<Vec<usize>> {
    if !lambda.is_finite() {
        return Err(SetOptError::InvalidArgument(format!("lambda {lambda} must be finite")));
    }
    let cone = problem.cone();
    let tie = problem.tolerances().tie_tol;
    let level: Vec<f64> = cone.order_unit().iter().map(|q| lambda * q).collect();
    let probe = ProjectedCloud::new(&PointCloudSet::singleton(level)?, cone);
    // the definitional path compares pairings with slack cone_tol, which on
    // the Ψ scale is cone_tol / <w_j, q>
    let min_unit = cone.unit_pairings().iter().copied().fold(f64::INFINITY, f64::min);
    let band = 2.0 * tie + cone.tolerance() / min_unit;

    let verdicts: Vec<Result<bool>> = problem
        .clouds()
        .par_iter()
        .enumerate()
        .map(|(i, cloud)| {
            let by_definition = !dominated_projected(&probe, &ProjectedCloud::new(cloud, cone), cone.tolerance(), true);
            let psi = field.value(i);
            let by_scalar = psi <= lambda + tie;
            if by_definition != by_scalar && (psi - lambda).abs() > band {
                return Err(SetOptError::Internal(format!(
                    "colevel paths disagree at x = {:?}: definition {by_definition}, Psi = {psi}, lambda = {lambda}",
                    field.points()[i]
                )));
            }
            Ok(by_scalar)
        })
        .collect();
    let mut out = Vec::new();
    for (i, v) in verdicts.into_iter().enumerate() {
        if v? {
            out.push(i);
        }
    }
    Ok(out)
}

/// Colevel set `Colev(F, λq)` as grid points.
pub fn colevel(problem: &SetValuedProblem, lambda: f64) -> Result<Vec<Vec<f64>>> {
    let field = ScalarField::compute(problem);
    let idx = colevel_indices(problem, &field, lambda)?;
    Ok(idx.into_iter().map(|i| problem.grid().point(i).to_vec()).collect())
}

/// `Colev(F, B) = {x : B ⊀ˡ F(x)}` as grid indices.
pub fn colevel_at_set_indices(problem: &SetValuedProblem, b: &PointCloudSet) -> Result<Vec<usize>> {
    let cone = problem.cone();
    check_dim(cone.dim(), b.dim())?;
    let pb = ProjectedCloud::new(b, cone);
    let keep: Vec<bool> = problem
        .clouds()
        .par_iter()
        .map(|c| !dominated_projected(&pb, &ProjectedCloud::new(c, cone), cone.tolerance(), true))
        .collect();
    Ok(keep.iter().enumerate().filter(|(_, &k)| k).map(|(i, _)| i).collect())
}

pub fn colevel_at_set(problem: &SetValuedProblem, b: &PointCloudSet) -> Result<Vec<Vec<f64>>> {
    Ok(colevel_at_set_indices(problem, b)?
        .into_iter()
        .map(|i| problem.grid().point(i).to_vec())
        .collect())
}

/// Definitional check used by tests: `Ψ_F(x) >= λ` iff every point of `F(x)`
/// lies in `λq + P`.
pub fn above_level_by_definition(problem: &SetValuedProblem, i: usize, lambda: f64) -> bool {
    let cone = problem.cone();
    problem.evaluate_index(i).points().iter().all(|y| {
        let shifted: Vec<f64> = y.iter().zip(cone.order_unit()).map(|(a, q)| a - lambda * q).collect();
        cone.contains(&shifted).expect("dimensions validated")
    })
}

/// Direct definitional colevel test at one grid index, kept for cross-checks.
pub fn in_colevel_by_definition(problem: &SetValuedProblem, i: usize, lambda: f64) -> Result<bool> {
    let level: Vec<f64> = problem.cone().order_unit().iter().map(|q| lambda * q).collect();
    let probe = PointCloudSet::singleton(level)?;
    Ok(!strictly_lower_less(&probe, problem.evaluate_index(i), problem.cone())?)
}
