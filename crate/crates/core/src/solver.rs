//! Minimizers of `Ψ_F` and brute-force efficient sets.
//!
//! * `x̄` is strictly weakly efficient if no `x != x̄` has `F(x) <ˡ F(x̄)`.
//! * `x̄` is weakly efficient if `F(x) <ˡ F(x̄)` implies `F(x̄) <ˡ F(x)`.
//!
//! Every minimizer of `Ψ_F` is strictly weakly efficient, and the report
//! verifies this on the grid.

use rayon::prelude::*;

use crate::cone::ScalarValue;
use crate::error::{Result, SetOptError};
use crate::problem::SetValuedProblem;
use crate::report;
use crate::scalarizer::ScalarField;
use crate::setrel::{dominated_projected, ProjectedCloud};

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub m_f_q: ScalarValue,
    pub argmin_set: Vec<Vec<f64>>,
    pub sweff_set: Vec<Vec<f64>>,
    pub weff_set: Vec<Vec<f64>>,
    pub inclusion_argmin_in_sweff: bool,
    pub inclusion_sweff_in_weff: bool,
    /// True when some strictly weakly efficient point is not a minimizer.
    pub argmin_strictly_smaller: bool,
    pub psi_table: Vec<(Vec<f64>, ScalarValue)>,
}

impl SolveReport {
    pub fn to_json(&self) -> serde_json::Value {
        let table: Vec<serde_json::Value> = self
            .psi_table
            .iter()
            .map(|(x, v)| report::object([("x", report::point(x)), ("psi", report::num(v.0))]))
            .collect();
        report::object([
            ("m_f_q", report::num(self.m_f_q.0)),
            ("argmin", report::points(&self.argmin_set)),
            ("sweff", report::points(&self.sweff_set)),
            ("weff", report::points(&self.weff_set)),
            ("inclusion_argmin_in_sweff", self.inclusion_argmin_in_sweff.into()),
            ("inclusion_sweff_in_weff", self.inclusion_sweff_in_weff.into()),
            ("argmin_strictly_smaller", self.argmin_strictly_smaller.into()),
            ("psi_table", serde_json::Value::Array(table)),
        ])
    }
}

fn projected(problem: &SetValuedProblem) -> Vec<ProjectedCloud> {
    let cone = problem.cone();
    problem.clouds().par_iter().map(|c| ProjectedCloud::new(c, cone)).collect()
}

fn to_points(problem: &SetValuedProblem, idx: &[usize]) -> Vec<Vec<f64>> {
    idx.iter().map(|&i| problem.grid().point(i).to_vec()).collect()
}

pub fn argmin_indices(problem: &SetValuedProblem) -> Vec<usize> {
    ScalarField::compute(problem).argmin_indices(problem.tolerances().tie_tol)
}

pub fn argmin_scalarized(problem: &SetValuedProblem) -> Vec<Vec<f64>> {
    to_points(problem, &argmin_indices(problem))
}

fn sweff_with(problem: &SetValuedProblem, proj: &[ProjectedCloud]) -> Vec<usize> {
    let tol = problem.cone().tolerance();
    (0..proj.len())
        .into_par_iter()
        .filter(|&xb| !(0..proj.len()).any(|x| x != xb && dominated_projected(&proj[x], &proj[xb], tol, true)))
        .collect()
}

fn weff_with(problem: &SetValuedProblem, proj: &[ProjectedCloud]) -> Vec<usize> {
    let tol = problem.cone().tolerance();
    (0..proj.len())
        .into_par_iter()
        .filter(|&xb| {
            (0..proj.len()).all(|x| {
                !dominated_projected(&proj[x], &proj[xb], tol, true) || dominated_projected(&proj[xb], &proj[x], tol, true)
            })
        })
        .collect()
}

pub fn sweff_indices(problem: &SetValuedProblem) -> Vec<usize> {
    sweff_with(problem, &projected(problem))
}

pub fn sweff_brute(problem: &SetValuedProblem) -> Vec<Vec<f64>> {
    to_points(problem, &sweff_indices(problem))
}

pub fn weff_brute(problem: &SetValuedProblem) -> Vec<Vec<f64>> {
    to_points(problem, &weff_with(problem, &projected(problem)))
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // both sorted ascending
    a.iter().all(|i| b.binary_search(i).is_ok())
}

pub fn solve(problem: &SetValuedProblem) -> Result<SolveReport> {
    let field = ScalarField::compute(problem);
    let argmin = field.argmin_indices(problem.tolerances().tie_tol);
    let proj = projected(problem);
    let sweff = sweff_with(problem, &proj);
    let weff = weff_with(problem, &proj);
    let inclusion_argmin_in_sweff = is_subset(&argmin, &sweff);
    let inclusion_sweff_in_weff = is_subset(&sweff, &weff);
    if !inclusion_argmin_in_sweff {
        let missing: Vec<usize> = argmin.iter().copied().filter(|i| sweff.binary_search(i).is_err()).collect();
        return Err(SetOptError::Internal(format!(
            "minimizers of Psi_F outside the strictly weakly efficient set: {:?}",
            to_points(problem, &missing)
        )));
    }
    if !inclusion_sweff_in_weff {
        return Err(SetOptError::Internal("strictly weakly efficient set is not inside the weakly efficient set".into()));
    }
    Ok(SolveReport {
        m_f_q: field.m_f_q(),
        argmin_strictly_smaller: argmin.len() < sweff.len(),
        argmin_set: to_points(problem, &argmin),
        sweff_set: to_points(problem, &sweff),
        weff_set: to_points(problem, &weff),
        inclusion_argmin_in_sweff,
        inclusion_sweff_in_weff,
        psi_table: field.points().iter().cloned().zip(field.values().iter().copied()).collect(),
    })
}
