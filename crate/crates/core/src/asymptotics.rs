//! Behaviour at infinity: asymptotic cones of sampled sets, the asymptotic
//! function `F^{G,∞}(u)`, the strict-gap condition `F^{G,∞}(u) > M_F^q` for
//! all nonzero directions, and horizon limits of colevel sets.
//!
//! `F^{G,∞}(u)` equals the infimum of `liminf Ψ_F(t_n d_n)` over all
//! `t_n -> ∞`, `d_n -> u`. The estimator fixes `d_n = u`, which can only
//! overestimate; every estimate carries a note saying so.

use rayon::prelude::*;

use crate::cone::ScalarValue;
use crate::error::{Result, SetOptError};
use crate::problem::{norm, SetValuedProblem};
use crate::report;
use crate::scalarizer::{colevel_indices, psi_f_at, ScalarField};

pub const DEFAULT_T_MIN: f64 = 1.0;
pub const DEFAULT_T_MAX: f64 = 1e6;
pub const DEFAULT_STEPS: usize = 40;
/// A ray counts as diverging when its tail is nondecreasing and rises by more
/// than this amount.
pub const DIVERGENCE_RISE: f64 = 1.0;
/// Directions closer than this angle (radians) are merged.
pub const CLUSTER_ANGLE: f64 = 0.05;
/// Default far-point threshold as a fraction of the largest grid norm.
pub const RADIUS_FRACTION: f64 = 0.75;

pub const SURROGATE_NOTE: &str =
    "constant direction sequence d_n = u; the estimate is an upper bound for the infimum over drifting directions";

#[derive(Debug, Clone, PartialEq)]
pub struct RaySchedule {
    direction: Vec<f64>,
    t_values: Vec<f64>,
}

impl RaySchedule {
    pub fn new(direction: Vec<f64>, t_values: Vec<f64>) -> Result<Self> {
        check_direction(&direction)?;
        if t_values.len() < 2 {
            return Err(SetOptError::InvalidSchedule("need at least two t values".into()));
        }
        if !(t_values[0] > 0.0) || t_values.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(SetOptError::InvalidSchedule("t values must be positive and strictly increasing".into()));
        }
        let last = t_values[t_values.len() - 1];
        if !(last >= 1e4 && last.is_finite()) {
            return Err(SetOptError::InvalidSchedule(format!("final t value {last} must be finite and >= 1e4")));
        }
        Ok(RaySchedule { direction, t_values })
    }

    pub fn geometric(direction: Vec<f64>, t_min: f64, t_max: f64, steps: usize) -> Result<Self> {
        if !(t_min > 0.0 && t_max > t_min) || steps < 2 {
            return Err(SetOptError::InvalidSchedule(format!(
                "geometric schedule needs 0 < t_min < t_max and steps >= 2, got {t_min}, {t_max}, {steps}"
            )));
        }
        let ratio = (t_max / t_min).ln() / (steps - 1) as f64;
        let t = (0..steps)
            .map(|k| if k + 1 == steps { t_max } else { t_min * (ratio * k as f64).exp() })
            .collect();
        Self::new(direction, t)
    }

    pub fn default_for(direction: Vec<f64>) -> Result<Self> {
        Self::geometric(direction, DEFAULT_T_MIN, DEFAULT_T_MAX, DEFAULT_STEPS)
    }

    pub fn direction(&self) -> &[f64] {
        &self.direction
    }

    pub fn t_values(&self) -> &[f64] {
        &self.t_values
    }
}

/// Geometric t-range shared by multi-direction routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayOptions {
    pub t_min: f64,
    pub t_max: f64,
    pub steps: usize,
}

impl Default for RayOptions {
    fn default() -> Self {
        RayOptions { t_min: DEFAULT_T_MIN, t_max: DEFAULT_T_MAX, steps: DEFAULT_STEPS }
    }
}

impl RayOptions {
    pub fn schedule(&self, direction: Vec<f64>) -> Result<RaySchedule> {
        RaySchedule::geometric(direction, self.t_min, self.t_max, self.steps)
    }
}

fn check_direction(u: &[f64]) -> Result<()> {
    if u.iter().any(|v| !v.is_finite()) {
        return Err(SetOptError::InvalidArgument(format!("direction {u:?} has non-finite entries")));
    }
    if u.iter().all(|&v| v == 0.0) {
        return Err(SetOptError::ZeroDirection);
    }
    Ok(())
}

fn unit(u: &[f64]) -> Vec<f64> {
    let n = norm(u);
    u.iter().map(|v| v / n).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct TracePoint {
    pub t: f64,
    pub psi: f64,
    pub snap_distance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticEstimate {
    /// Unit direction.
    pub direction: Vec<f64>,
    pub value: ScalarValue,
    pub diverging: bool,
    pub liminf_trace: Vec<TracePoint>,
    pub max_snap_distance: f64,
    pub m_f_q: ScalarValue,
}

impl AsymptoticEstimate {
    pub fn to_json(&self) -> serde_json::Value {
        let trace: Vec<serde_json::Value> = self
            .liminf_trace
            .iter()
            .map(|p| report::object([("t", report::num(p.t)), ("psi", report::num(p.psi))]))
            .collect();
        report::object([
            ("direction", report::vector(&self.direction)),
            ("value", report::num(self.value.0)),
            ("diverging", self.diverging.into()),
            ("m_f_q", report::num(self.m_f_q.0)),
            ("max_snap_distance", report::num(self.max_snap_distance)),
            ("surrogate", SURROGATE_NOTE.into()),
            ("liminf_trace", serde_json::Value::Array(trace)),
        ])
    }
}

/// Unit vectors of the far points `‖x‖ >= radius_threshold`, merged when
/// closer than [`CLUSTER_ANGLE`]. Bounded sets give the empty set, which
/// stands for the trivial cone `{0}`.
pub fn asymptotic_cone_estimate(points: &[Vec<f64>], radius_threshold: f64) -> Result<Vec<Vec<f64>>> {
    if !(radius_threshold > 0.0) {
        return Err(SetOptError::InvalidArgument(format!("radius threshold {radius_threshold} must be positive")));
    }
    let cos_tol = CLUSTER_ANGLE.cos();
    let mut reps: Vec<Vec<f64>> = Vec::new();
    for p in points {
        if norm(p) < radius_threshold {
            continue;
        }
        let d = unit(p);
        let close = reps.iter().any(|r| r.iter().zip(&d).map(|(a, b)| a * b).sum::<f64>() >= cos_tol);
        if !close {
            reps.push(d);
        }
    }
    Ok(report::sorted_points(reps))
}

fn estimate_with(problem: &SetValuedProblem, m: ScalarValue, schedule: &RaySchedule) -> Result<AsymptoticEstimate> {
    let u = schedule.direction();
    let trace: Vec<TracePoint> = schedule
        .t_values()
        .par_iter()
        .map(|&t| {
            let x: Vec<f64> = u.iter().map(|v| t * v).collect();
            let (psi, snap_distance) = psi_f_at(problem, &x)?;
            Ok(TracePoint { t, psi, snap_distance })
        })
        .collect::<Result<_>>()?;
    let k = trace.len().div_ceil(4);
    let tail = &trace[trace.len() - k..];
    let nondecreasing = tail.windows(2).all(|w| w[1].psi >= w[0].psi);
    let rise = tail[tail.len() - 1].psi - tail[0].psi;
    let diverging = nondecreasing && rise > DIVERGENCE_RISE;
    let value = if diverging {
        f64::INFINITY
    } else {
        tail.iter().map(|p| p.psi).fold(f64::INFINITY, f64::min)
    };
    let max_snap_distance = trace.iter().map(|p| p.snap_distance).fold(0.0, f64::max);
    Ok(AsymptoticEstimate {
        direction: unit(u),
        value: ScalarValue(value),
        diverging,
        liminf_trace: trace,
        max_snap_distance,
        m_f_q: m,
    })
}

/// Estimate of `F^{G,∞}(u)`: the minimum of `Ψ_F(t u)` over the last quarter
/// of the schedule, or `+∞` when that tail climbs steadily.
pub fn f_g_infty(problem: &SetValuedProblem, schedule: &RaySchedule) -> Result<AsymptoticEstimate> {
    if schedule.direction().len() != problem.grid().dim() {
        return Err(SetOptError::DimensionMismatch {
            expected: problem.grid().dim(),
            found: schedule.direction().len(),
        });
    }
    estimate_with(problem, ScalarField::compute(problem).m_f_q(), schedule)
}

/// `±e_i` and, in two or more dimensions, `(±e_i ± e_j) / √2`.
pub fn default_directions(n: usize) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for s in [1.0, -1.0] {
            let mut e = vec![0.0; n];
            e[i] = s;
            out.push(e);
        }
    }
    let h = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..n {
        for j in i + 1..n {
            for (si, sj) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                let mut e = vec![0.0; n];
                e[i] = si * h;
                e[j] = sj * h;
                out.push(e);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct Condition12Report {
    pub m_f_q: ScalarValue,
    pub margin: f64,
    pub estimates: Vec<AsymptoticEstimate>,
    pub holds: bool,
    /// First direction whose estimate is not above `M_F^q + margin`.
    pub witness: Option<Vec<f64>>,
    pub sparse_sampling: bool,
}

impl Condition12Report {
    pub fn direction_holds(&self, i: usize) -> bool {
        self.estimates[i].value.0 > self.m_f_q.0 + self.margin
    }

    pub fn to_json(&self) -> serde_json::Value {
        let dirs: Vec<serde_json::Value> = (0..self.estimates.len())
            .map(|i| {
                let e = &self.estimates[i];
                report::object([
                    ("direction", report::vector(&e.direction)),
                    ("value", report::num(e.value.0)),
                    ("diverging", e.diverging.into()),
                    ("max_snap_distance", report::num(e.max_snap_distance)),
                    ("holds", self.direction_holds(i).into()),
                ])
            })
            .collect();
        report::object([
            ("m_f_q", report::num(self.m_f_q.0)),
            ("margin", report::num(self.margin)),
            ("holds", self.holds.into()),
            ("witness", self.witness.as_deref().map_or(serde_json::Value::Null, report::vector)),
            ("sparse_sampling", self.sparse_sampling.into()),
            ("surrogate", SURROGATE_NOTE.into()),
            ("directions", serde_json::Value::Array(dirs)),
        ])
    }
}

/// Holds when every sampled direction has `F^{G,∞}(u) > M_F^q + margin`,
/// with margin `10 · tie_tol`.
pub fn check_condition_12(
    problem: &SetValuedProblem,
    directions: &[Vec<f64>],
    options: &RayOptions,
) -> Result<Condition12Report> {
    if directions.is_empty() {
        return Err(SetOptError::InvalidArgument("at least one direction is required".into()));
    }
    let n = problem.grid().dim();
    let m = ScalarField::compute(problem).m_f_q();
    let margin = 10.0 * problem.tolerances().tie_tol;
    let mut estimates = Vec::with_capacity(directions.len());
    for u in directions {
        if u.len() != n {
            return Err(SetOptError::DimensionMismatch { expected: n, found: u.len() });
        }
        estimates.push(estimate_with(problem, m, &options.schedule(u.clone())?)?);
    }
    let witness = estimates.iter().find(|e| !(e.value.0 > m.0 + margin)).map(|e| e.direction.clone());
    Ok(Condition12Report {
        m_f_q: m,
        margin,
        holds: witness.is_none(),
        witness,
        sparse_sampling: directions.len() < 2 * n,
        estimates,
    })
}

/// `λ_n = M_F^q + 1/n` for `n = 1..=count`.
pub fn default_lambda_schedule(m_f_q: f64, count: usize) -> Vec<f64> {
    (1..=count).map(|n| m_f_q + 1.0 / n as f64).collect()
}

pub fn default_radius_threshold(problem: &SetValuedProblem) -> f64 {
    let r = RADIUS_FRACTION * problem.grid().max_norm();
    if r > 0.0 {
        r
    } else {
        1.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HorizonReport {
    pub directions: Vec<Vec<f64>>,
    pub trivial: bool,
    pub lambdas_used: Vec<f64>,
    pub radius_threshold: f64,
    pub condition_12_holds: bool,
    /// Whether triviality of the horizon limit matches the asymptotic condition.
    pub agrees_with_condition_12: bool,
}

impl HorizonReport {
    pub fn to_json(&self) -> serde_json::Value {
        report::object([
            ("directions", report::point_arrays(&self.directions)),
            ("trivial", self.trivial.into()),
            ("lambdas_used", serde_json::Value::Array(self.lambdas_used.iter().map(|&l| report::num(l)).collect())),
            ("radius_threshold", report::num(self.radius_threshold)),
            ("condition_12_holds", self.condition_12_holds.into()),
            ("agrees_with_condition_12", self.agrees_with_condition_12.into()),
        ])
    }
}

/// Union of the asymptotic-cone estimates of `Colev(F, λ_n q)` over the last
/// half of a strictly decreasing schedule above `M_F^q`.
pub fn horizon_limsup(
    problem: &SetValuedProblem,
    lambdas: &[f64],
    radius_threshold: Option<f64>,
    options: &RayOptions,
) -> Result<HorizonReport> {
    let field = ScalarField::compute(problem);
    let m = field.m_f_q().0;
    if lambdas.is_empty() {
        return Err(SetOptError::InvalidSchedule("lambda schedule is empty".into()));
    }
    if lambdas.windows(2).any(|w| !(w[1] < w[0])) {
        return Err(SetOptError::InvalidSchedule("lambda schedule must be strictly decreasing".into()));
    }
    if let Some(l) = lambdas.iter().find(|&&l| !(l > m)) {
        return Err(SetOptError::InvalidSchedule(format!("lambda {l} is not above M_F^q = {m}")));
    }
    let threshold = radius_threshold.unwrap_or_else(|| default_radius_threshold(problem));
    let tail = &lambdas[lambdas.len() / 2..];
    let mut far: Vec<Vec<f64>> = Vec::new();
    for &l in tail {
        for i in colevel_indices(problem, &field, l)? {
            far.push(problem.grid().point(i).to_vec());
        }
    }
    let directions = asymptotic_cone_estimate(&far, threshold)?;
    let cond = check_condition_12(problem, &default_directions(problem.grid().dim()), options)?;
    let trivial = directions.is_empty();
    Ok(HorizonReport {
        trivial,
        directions,
        lambdas_used: tail.to_vec(),
        radius_threshold: threshold,
        condition_12_holds: cond.holds,
        agrees_with_condition_12: trivial == cond.holds,
    })
}
