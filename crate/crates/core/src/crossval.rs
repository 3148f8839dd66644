//! Cross-validation of the fast paths against brute-force oracles: the
//! closed-form scalarization against bisection, and minimizers of `Ψ_F`
//! against the pairwise strictly-weakly-efficient scan.

use serde_json::Value;

use crate::error::Result;
use crate::problem::SetValuedProblem;
use crate::random::{random_problem, random_triple, rng};
use crate::report;
use crate::scalarizer::ScalarField;
use crate::solver::sweff_indices;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleSummary {
    pub seed: Option<u64>,
    pub samples: usize,
    pub tolerance: f64,
    pub max_deviation: f64,
    pub within_tolerance: bool,
    pub problems: usize,
    pub inclusion_violations: usize,
}

impl OracleSummary {
    pub fn passed(&self) -> bool {
        self.within_tolerance && self.inclusion_violations == 0
    }

    pub fn to_json(&self) -> Value {
        report::object([
            ("seed", self.seed.map_or(Value::Null, Value::from)),
            ("samples", self.samples.into()),
            ("tolerance", report::num(self.tolerance)),
            ("max_deviation", report::num(self.max_deviation)),
            ("within_tolerance", self.within_tolerance.into()),
            ("problems", self.problems.into()),
            ("inclusion_violations", self.inclusion_violations.into()),
            ("passed", self.passed().into()),
        ])
    }
}

fn inclusion_holds(problem: &SetValuedProblem) -> bool {
    let argmin = ScalarField::compute(problem).argmin_indices(problem.tolerances().tie_tol);
    let sweff = sweff_indices(problem);
    argmin.iter().all(|i| sweff.binary_search(i).is_ok())
}

/// `count` random (cone, y) triples and `max(1, count / 20)` random table
/// problems from one seed.
pub fn oracle_random(seed: u64, count: usize, tol: f64) -> Result<OracleSummary> {
    let mut r = rng(seed);
    let mut max_deviation: f64 = 0.0;
    for _ in 0..count {
        let (_, cone, y) = random_triple(&mut r);
        let exact = cone.gerstewitz(&y)?.0;
        let bisected = cone.gerstewitz_oracle(&y, tol)?.0;
        max_deviation = max_deviation.max((exact - bisected).abs());
    }
    let problems = (count / 20).max(1);
    let mut inclusion_violations = 0;
    for _ in 0..problems {
        if !inclusion_holds(&random_problem(&mut r)) {
            inclusion_violations += 1;
        }
    }
    Ok(OracleSummary {
        seed: Some(seed),
        samples: count,
        tolerance: tol,
        max_deviation,
        within_tolerance: max_deviation <= tol,
        problems,
        inclusion_violations,
    })
}

/// Both comparisons on one problem, over every cloud point on the grid.
pub fn oracle_problem(problem: &SetValuedProblem) -> Result<OracleSummary> {
    let cone = problem.cone();
    let tol = problem.tolerances().scal_tol;
    let mut max_deviation: f64 = 0.0;
    let mut samples = 0;
    for cloud in problem.clouds() {
        for y in cloud.points() {
            let d = (cone.gerstewitz(y)?.0 - cone.gerstewitz_oracle(y, tol)?.0).abs();
            max_deviation = max_deviation.max(d);
            samples += 1;
        }
    }
    Ok(OracleSummary {
        seed: None,
        samples,
        tolerance: tol,
        max_deviation,
        within_tolerance: max_deviation <= tol,
        problems: 1,
        inclusion_violations: usize::from(!inclusion_holds(problem)),
    })
}
