//! Numerical evidence for the hypotheses of the two existence theorems.
//!
//! Every check returns one of four verdicts. A `fails` verdict always carries
//! a witness and an `inconclusive` verdict always names the resource that ran
//! out (grid resolution, missing box metadata, a table map that cannot be
//! refined).
//!
//! On a finite grid with the discrete topology every function is regular, so
//! the regularity checks refine around each grid point instead: analytic map
//! kinds are evaluated on a small lattice inside shrinking punctured balls.

use serde_json::{json, Value};

use crate::asymptotics::{check_condition_12, default_directions, Condition12Report, RayOptions};
use crate::error::{Result, SetOptError};
use crate::problem::{distance, norm, SetValuedProblem};
use crate::report;
use crate::scalarizer::{colevel_at_set_indices, colevel_indices, psi_f_at, ScalarField};
use crate::solver::sweff_indices;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    HoldsWithCaveat,
    Fails,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::HoldsWithCaveat => "holds_with_caveat",
            Verdict::Fails => "fails",
            Verdict::Inconclusive => "inconclusive",
        }
    }

    pub fn is_satisfied(self) -> bool {
        matches!(self, Verdict::Holds | Verdict::HoldsWithCaveat)
    }
}

/// Concrete evidence behind a `fails` verdict.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Witness {
    pub point: Option<Vec<f64>>,
    pub lambda: Option<f64>,
    pub direction: Option<Vec<f64>>,
    pub radius: Option<f64>,
    pub detail: String,
}

impl Witness {
    fn to_json(&self) -> Value {
        report::object([
            ("point", self.point.as_deref().map_or(Value::Null, report::point)),
            ("lambda", report::opt_num(self.lambda)),
            ("direction", self.direction.as_deref().map_or(Value::Null, report::vector)),
            ("radius", report::opt_num(self.radius)),
            ("detail", self.detail.clone().into()),
        ])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub limiting_resource: Option<String>,
    pub caveat: Option<String>,
    pub evidence: Value,
}

impl Check {
    fn holds(name: &'static str, evidence: Value) -> Self {
        Check { name, verdict: Verdict::Holds, witness: None, limiting_resource: None, caveat: None, evidence }
    }

    fn with_caveat(name: &'static str, caveat: String, evidence: Value) -> Self {
        Check {
            name,
            verdict: Verdict::HoldsWithCaveat,
            witness: None,
            limiting_resource: None,
            caveat: Some(caveat),
            evidence,
        }
    }

    fn fails(name: &'static str, witness: Witness, evidence: Value) -> Self {
        Check { name, verdict: Verdict::Fails, witness: Some(witness), limiting_resource: None, caveat: None, evidence }
    }

    fn inconclusive(name: &'static str, resource: String, evidence: Value) -> Self {
        Check {
            name,
            verdict: Verdict::Inconclusive,
            witness: None,
            limiting_resource: Some(resource),
            caveat: None,
            evidence,
        }
    }

    pub fn to_json(&self) -> Value {
        report::object([
            ("name", self.name.into()),
            ("verdict", self.verdict.as_str().into()),
            ("witness", self.witness.as_ref().map_or(Value::Null, Witness::to_json)),
            ("limiting_resource", self.limiting_resource.clone().map_or(Value::Null, Value::from)),
            ("caveat", self.caveat.clone().map_or(Value::Null, Value::from)),
            ("evidence", self.evidence.clone()),
        ])
    }
}

fn margin(problem: &SetValuedProblem) -> f64 {
    10.0 * problem.tolerances().tie_tol
}

/// Finite clouds always attain the minimum of the scalarization. Clouds that
/// truncate an unbounded analytic set get a caveat naming the sampling.
pub fn check_attainment(problem: &SetValuedProblem) -> Check {
    if problem.map().truncated_samplers().is_empty() {
        return Check::holds("attainment", json!({"reason": "every value is a finite cloud, so the minimum is attained"}));
    }
    let mut notes: Vec<String> = problem
        .clouds()
        .iter()
        .filter_map(|c| c.sampling_note())
        .filter(|n| n.contains("truncated"))
        .map(str::to_string)
        .collect();
    notes.sort();
    notes.dedup();
    Check::with_caveat(
        "attainment",
        "minimum attained on the finite sample; the sampled analytic set may not attain its infimum".into(),
        json!({ "sampling_notes": notes }),
    )
}

/// Geometric radii starting at twice the grid spacing and shrinking by 4.
pub fn default_radii(problem: &SetValuedProblem) -> Vec<f64> {
    let h = problem.grid().spacing();
    (0..8).map(|k| 2.0 * h / 4f64.powi(k)).collect()
}

fn check_radii(radii: &[f64]) -> Result<()> {
    if radii.is_empty() || radii.iter().any(|r| !(*r > 0.0 && r.is_finite())) {
        return Err(SetOptError::InvalidArgument("radii must be nonempty, positive and finite".into()));
    }
    if radii.windows(2).any(|w| !(w[1] < w[0])) {
        return Err(SetOptError::InvalidArgument("radii must be strictly decreasing".into()));
    }
    Ok(())
}

/// Punctured neighbourhood minima of `Ψ_F` around grid points.
struct Neighbourhoods<'a> {
    problem: &'a SetValuedProblem,
    field: &'a ScalarField,
    hull: (Vec<f64>, Vec<f64>),
    offsets: Vec<Vec<f64>>,
}

impl<'a> Neighbourhoods<'a> {
    fn new(problem: &'a SetValuedProblem, field: &'a ScalarField) -> Self {
        let n = problem.grid().dim();
        // lattice {-2..2}^n / 2 inside the unit ball, without the origin
        let mut offsets: Vec<Vec<f64>> = vec![Vec::new()];
        for _ in 0..n {
            offsets = offsets
                .into_iter()
                .flat_map(|p| {
                    (-2..=2).map(move |i| {
                        let mut q = p.clone();
                        q.push(i as f64 / 2.0);
                        q
                    })
                })
                .collect();
        }
        offsets.retain(|o| {
            let r = norm(o);
            r > 0.0 && r <= 1.0 + 1e-12
        });
        Neighbourhoods { problem, field, hull: problem.grid().hull(), offsets }
    }

    fn grid_neighbours(&self, i: usize, r: f64) -> impl Iterator<Item = usize> + '_ {
        let x = self.problem.grid().point(i).to_vec();
        (0..self.field.len()).filter(move |&j| j != i && distance(self.problem.grid().point(j), &x) <= r * (1.0 + 1e-9))
    }

    fn admissible(&self, p: &[f64]) -> bool {
        let (lo, hi) = &self.hull;
        let in_hull = p.iter().enumerate().all(|(a, &v)| {
            let eps = 1e-12 * (hi[a] - lo[a]).abs().max(1.0);
            v >= lo[a] - eps && v <= hi[a] + eps
        });
        let in_ball = self.problem.restriction().is_none_or(|rad| norm(p) <= rad * (1.0 + 1e-12));
        in_hull && in_ball
    }

    /// Minimum of `Ψ_F` over the punctured ball of radius `r`: grid points,
    /// plus lattice points for analytic map kinds.
    fn refined_min(&self, i: usize, r: f64) -> Result<f64> {
        let mut best = self.grid_neighbours(i, r).map(|j| self.field.value(j)).fold(f64::INFINITY, f64::min);
        if self.problem.map().is_analytic() {
            let x = self.problem.grid().point(i);
            for o in &self.offsets {
                let p: Vec<f64> = x.iter().zip(o).map(|(a, b)| a + r * b).collect();
                if self.admissible(&p) {
                    best = best.min(psi_f_at(self.problem, &p)?.0);
                }
            }
        }
        Ok(best)
    }
}

enum PointStatus {
    Ok,
    Fails { minima: Vec<f64> },
    Inconclusive(String),
}

/// Regular-global-inf test for `Ψ_F`: every point with `Ψ_F(x₀)` above
/// `M_F^q + margin` must have a punctured neighbourhood on which `Ψ_F` stays
/// above that bound.
///
/// For analytic kinds the smallest radius decides `holds`; a point fails when
/// the bound is violated at every radius. Table kinds use the smallest radius
/// that reaches another grid point and cannot fail, only be inconclusive.
pub fn check_srgi(problem: &SetValuedProblem, radii: Option<&[f64]>) -> Result<Check> {
    let radii = radii.map_or_else(|| default_radii(problem), <[f64]>::to_vec);
    check_radii(&radii)?;
    let field = ScalarField::compute(problem);
    let m = field.m_f_q().0;
    let margin = margin(problem);
    let hoods = Neighbourhoods::new(problem, &field);
    let analytic = problem.map().is_analytic();
    let candidates: Vec<usize> = (0..field.len()).filter(|&i| field.value(i) > m + margin).collect();

    let mut first_failure: Option<(usize, Vec<f64>)> = None;
    let mut inconclusive: Vec<(usize, String)> = Vec::new();
    let mut ok = 0usize;
    for &i in &candidates {
        let status = if analytic {
            let smallest = radii[radii.len() - 1];
            if hoods.refined_min(i, smallest)? > m + margin {
                PointStatus::Ok
            } else {
                let minima = radii.iter().map(|&r| hoods.refined_min(i, r)).collect::<Result<Vec<_>>>()?;
                if minima.iter().all(|&v| v <= m + margin) {
                    PointStatus::Fails { minima }
                } else {
                    PointStatus::Inconclusive("neighbourhood minima do not settle across the radii".into())
                }
            }
        } else {
            let reaching = radii.iter().rev().find(|&&r| hoods.grid_neighbours(i, r).next().is_some());
            match reaching {
                None => PointStatus::Inconclusive("grid resolution: no radius reaches another grid point".into()),
                Some(&r) => {
                    if hoods.refined_min(i, r)? > m + margin {
                        PointStatus::Ok
                    } else {
                        PointStatus::Inconclusive(
                            "grid resolution: a table map cannot be refined below the grid spacing".into(),
                        )
                    }
                }
            }
        };
        match status {
            PointStatus::Ok => ok += 1,
            PointStatus::Fails { minima } => {
                if first_failure.is_none() {
                    first_failure = Some((i, minima));
                }
            }
            PointStatus::Inconclusive(why) => inconclusive.push((i, why)),
        }
    }

    let evidence = json!({
        "m_f_q": report::num(m),
        "margin": report::num(margin),
        "radii": radii.iter().map(|&r| report::num(r)).collect::<Vec<_>>(),
        "grid_spacing": report::num(problem.grid().spacing()),
        "candidates": candidates.len(),
        "bounded_away": ok,
        "refinement": if analytic { "grid and lattice" } else { "grid only" },
        "restriction": report::opt_num(problem.restriction()),
    });
    if let Some((i, minima)) = first_failure {
        let x = problem.grid().point(i).to_vec();
        let detail = format!(
            "Psi_F(x0) = {} but punctured neighbourhood minima {:?} stay within {} of M_F^q = {} at every radius",
            report::round12(field.value(i)),
            minima.iter().map(|&v| report::round12(v)).collect::<Vec<_>>(),
            margin,
            report::round12(m)
        );
        return Ok(Check::fails(
            "srgi",
            Witness { point: Some(x), radius: Some(radii[radii.len() - 1]), detail, ..Witness::default() },
            evidence,
        ));
    }
    if let Some((i, why)) = inconclusive.first() {
        let mut ev = evidence;
        ev["first_unresolved_point"] = report::point(problem.grid().point(*i));
        ev["unresolved"] = inconclusive.len().into();
        return Ok(Check::inconclusive("srgi", why.clone(), ev));
    }
    Ok(Check::holds("srgi", evidence))
}

fn neighbours_in_grid(problem: &SetValuedProblem, a: &[f64], b: &[f64]) -> bool {
    match problem.grid().bbox() {
        Some(bx) => (0..a.len()).all(|ax| (a[ax] - b[ax]).abs() <= bx.step(ax) * (1.0 + 1e-9)),
        None => distance(a, b) <= problem.grid().spacing() * (1.0 + 1e-9),
    }
}

/// `M_F^q + 2^{-k}` for `k = 0..12`.
pub fn default_transfer_lambdas(m_f_q: f64) -> Vec<f64> {
    (0..=12).map(|k| m_f_q + 0.5f64.powi(k)).collect()
}

/// Compares `∩ Colev(F, λq)` with the intersection of the one-step grid
/// dilations of the same sets. Points in the difference are candidates for a
/// closure gap; a candidate is confirmed only if refined punctured minima stay
/// at or below the smallest λ at every radius.
pub fn check_transfer_closed(problem: &SetValuedProblem, lambdas: &[f64]) -> Result<Check> {
    let field = ScalarField::compute(problem);
    let m = field.m_f_q().0;
    let lambdas = if lambdas.is_empty() { default_transfer_lambdas(m) } else { lambdas.to_vec() };
    if let Some(l) = lambdas.iter().find(|&&l| !(l > m && l.is_finite())) {
        return Err(SetOptError::InvalidArgument(format!("lambda {l} must be finite and above M_F^q = {m}")));
    }
    let n = field.len();
    let mut in_all = vec![true; n];
    let mut in_all_dilated = vec![true; n];
    for &l in &lambdas {
        let mut member = vec![false; n];
        for i in colevel_indices(problem, &field, l)? {
            member[i] = true;
        }
        let grid = problem.grid();
        for j in 0..n {
            in_all[j] &= member[j];
            if in_all_dilated[j] && !member[j] {
                let near = (0..n).any(|i| member[i] && neighbours_in_grid(problem, grid.point(i), grid.point(j)));
                in_all_dilated[j] = near;
            }
        }
    }
    let candidates: Vec<usize> = (0..n).filter(|&j| in_all_dilated[j] && !in_all[j]).collect();
    let lambda_min = lambdas.iter().copied().fold(f64::INFINITY, f64::min);
    let evidence = json!({
        "m_f_q": report::num(m),
        "lambdas": lambdas.iter().map(|&l| report::num(l)).collect::<Vec<_>>(),
        "intersection_size": in_all.iter().filter(|&&b| b).count(),
        "dilated_intersection_size": in_all_dilated.iter().filter(|&&b| b).count(),
        "candidates": candidates.iter().map(|&j| report::point(problem.grid().point(j))).collect::<Vec<_>>(),
    });
    if candidates.is_empty() {
        return Ok(Check::holds("transfer_closed", evidence));
    }
    if !problem.map().is_analytic() {
        return Ok(Check::inconclusive(
            "transfer_closed",
            "grid resolution: a table map cannot be refined between grid points".into(),
            evidence,
        ));
    }
    let radii = default_radii(problem);
    let hoods = Neighbourhoods::new(problem, &field);
    let tie = problem.tolerances().tie_tol;
    for &j in &candidates {
        let mut confirmed = true;
        for &r in &radii {
            if hoods.refined_min(j, r)? > lambda_min + tie {
                confirmed = false;
                break;
            }
        }
        if confirmed {
            return Ok(Check::fails(
                "transfer_closed",
                Witness {
                    point: Some(problem.grid().point(j).to_vec()),
                    lambda: Some(lambda_min),
                    radius: Some(radii[radii.len() - 1]),
                    detail: "point lies in the closure of every sampled colevel set but not in their intersection"
                        .into(),
                    ..Witness::default()
                },
                evidence,
            ));
        }
    }
    let mut ev = evidence;
    ev["discarded_after_refinement"] = candidates.len().into();
    Ok(Check::holds("transfer_closed", ev))
}

/// Coercivity: some colevel set above `M_F^q` lies strictly inside the domain
/// box. Probes `λ_k = M + (λ_probe - M) / 2^k` for `k = 0..=24`.
pub fn check_sgicc(problem: &SetValuedProblem, lambda_probe: f64) -> Result<Check> {
    let field = ScalarField::compute(problem);
    let m = field.m_f_q().0;
    if !(lambda_probe > m && lambda_probe.is_finite()) {
        return Err(SetOptError::InvalidArgument(format!(
            "lambda_probe {lambda_probe} must be finite and above M_F^q = {m}"
        )));
    }
    let Some(bbox) = problem.grid().bbox() else {
        return Ok(Check::inconclusive(
            "sgicc",
            "box size: the domain has no box metadata, so boundedness cannot be judged".into(),
            json!({ "m_f_q": report::num(m), "lambda_probe": report::num(lambda_probe) }),
        ));
    };
    let mut last: Option<(f64, Vec<f64>)> = None;
    for k in 0..=24 {
        let l = m + (lambda_probe - m) / 2f64.powi(k);
        let idx = colevel_indices(problem, &field, l)?;
        let pts: Vec<Vec<f64>> = idx.iter().map(|&i| problem.grid().point(i).to_vec()).collect();
        match pts.iter().find(|p| !bbox.strictly_inside(p)) {
            None if !pts.is_empty() => {
                return Ok(Check::holds(
                    "sgicc",
                    json!({
                        "m_f_q": report::num(m),
                        "lambda": report::num(l),
                        "probes_tried": k + 1,
                        "colevel": report::points(&pts),
                    }),
                ));
            }
            Some(p) => last = Some((l, p.clone())),
            None => {}
        }
    }
    let (l, p) = last.expect("colevel sets above M_F^q are nonempty");
    Ok(Check::fails(
        "sgicc",
        Witness {
            point: Some(p),
            lambda: Some(l),
            detail: "every probed colevel set reaches within one grid step of the domain box".into(),
            ..Witness::default()
        },
        json!({ "m_f_q": report::num(m), "lambda_probe": report::num(lambda_probe), "probes_tried": 25 }),
    ))
}

pub fn default_lambda_probe(m_f_q: f64) -> f64 {
    m_f_q + 1.0
}

/// Boundedness of `Colev(F, F(x₀))`. When it is bounded, either `x₀` is
/// strictly weakly efficient or the map is coercive; the check asserts this.
pub fn check_colevel_compact_at(problem: &SetValuedProblem, x0: &[f64]) -> Result<Check> {
    let b = problem.evaluate(x0)?;
    let idx = colevel_at_set_indices(problem, b)?;
    let pts: Vec<Vec<f64>> = idx.iter().map(|&i| problem.grid().point(i).to_vec()).collect();
    let i0 = problem.grid().index_of(x0).expect("evaluate succeeded");
    let in_sweff = sweff_indices(problem).binary_search(&i0).is_ok();
    let m = ScalarField::compute(problem).m_f_q().0;
    let sgicc = check_sgicc(problem, default_lambda_probe(m))?;
    let disjunction = in_sweff || sgicc.verdict == Verdict::Holds;
    let evidence = json!({
        "x0": report::point(x0),
        "colevel_size": pts.len(),
        "in_sweff": in_sweff,
        "sgicc": sgicc.verdict.as_str(),
        "disjunction_holds": disjunction,
    });
    let Some(bbox) = problem.grid().bbox() else {
        return Ok(Check::inconclusive(
            "colevel_compact_at",
            "box size: the domain has no box metadata, so boundedness cannot be judged".into(),
            evidence,
        ));
    };
    match pts.iter().find(|p| !bbox.strictly_inside(p)) {
        Some(p) => {
            let mut ev = evidence;
            ev["proposition_applicable"] = false.into();
            Ok(Check::fails(
                "colevel_compact_at",
                Witness {
                    point: Some(p.clone()),
                    detail: "colevel set at F(x0) reaches within one grid step of the domain box".into(),
                    ..Witness::default()
                },
                ev,
            ))
        }
        None => {
            if !disjunction {
                return Err(SetOptError::Internal(format!(
                    "colevel set at F({x0:?}) is bounded but x0 is not strictly weakly efficient and the map is not coercive"
                )));
            }
            let mut ev = evidence;
            ev["proposition_applicable"] = true.into();
            Ok(Check::holds("colevel_compact_at", ev))
        }
    }
}

fn condition_12_check(report: &Condition12Report) -> Check {
    let evidence = report.to_json();
    match &report.witness {
        None => Check::holds("condition_12", evidence),
        Some(u) => {
            let i = report.estimates.iter().position(|e| &e.direction == u).expect("witness is an estimate");
            Check::fails(
                "condition_12",
                Witness {
                    direction: Some(u.clone()),
                    detail: format!(
                        "F^G(u) estimate {} is not above M_F^q = {}",
                        report.estimates[i].value, report.m_f_q
                    ),
                    ..Witness::default()
                },
                evidence,
            )
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HypothesisReport {
    pub m_f_q: f64,
    pub attainment: Check,
    pub srgi: Check,
    pub sgicc: Check,
    pub condition_12: Check,
    /// `check_srgi` on `K_n = {‖x‖ <= n}` for `n = 1, 2, ...` up to the grid radius.
    pub srgi_on_balls: Vec<(u32, Check)>,
    pub k_q_set_asserted: bool,
    pub coercive_applicable: bool,
    pub noncoercive_applicable: bool,
    /// Hypotheses of the noncoercive theorem that are not satisfied.
    pub noncoercive_blocked_by: Vec<String>,
    pub sweff: Vec<Vec<f64>>,
}

impl HypothesisReport {
    pub fn to_json(&self) -> Value {
        let balls: Vec<Value> = self
            .srgi_on_balls
            .iter()
            .map(|(n, c)| report::object([("n", (*n).into()), ("check", c.to_json())]))
            .collect();
        report::object([
            ("m_f_q", report::num(self.m_f_q)),
            ("attainment", self.attainment.to_json()),
            ("srgi", self.srgi.to_json()),
            ("sgicc", self.sgicc.to_json()),
            ("condition_12", self.condition_12.to_json()),
            ("srgi_on_balls", Value::Array(balls)),
            ("p_bounded", json!({"verdict": "holds", "reason": "F(X) is a finite union of finite clouds"})),
            ("k_q_set_asserted", self.k_q_set_asserted.into()),
            (
                "theorems",
                report::object([
                    ("coercive", self.coercive_applicable.into()),
                    ("noncoercive", self.noncoercive_applicable.into()),
                    ("noncoercive_blocked_by", self.noncoercive_blocked_by.clone().into()),
                ]),
            ),
            ("sweff", report::points(&self.sweff)),
            ("sweff_nonempty", (!self.sweff.is_empty()).into()),
        ])
    }
}

/// Runs every hypothesis check and decides which existence theorem applies.
///
/// * coercive: attainment, srgi and sgicc (P-boundedness is automatic);
/// * noncoercive: attainment, srgi on every `K_n`, the asymptotic condition and the
///   user-asserted `K_q_set` flag.
///
/// Whenever a theorem applies the strictly weakly efficient set must be
/// nonempty; otherwise an internal error is returned.
pub fn weierstrass_report(problem: &SetValuedProblem) -> Result<HypothesisReport> {
    let field = ScalarField::compute(problem);
    let m = field.m_f_q().0;
    let attainment = check_attainment(problem);
    let srgi = check_srgi(problem, None)?;
    let sgicc = check_sgicc(problem, default_lambda_probe(m))?;
    let cond = check_condition_12(problem, &default_directions(problem.grid().dim()), &RayOptions::default())?;
    let condition_12 = condition_12_check(&cond);

    let max_n = problem.grid().max_norm().ceil().max(1.0) as u32;
    let mut srgi_on_balls = Vec::new();
    for n in 1..=max_n {
        let check = match problem.restricted_to_ball(n as f64) {
            Ok(k) => check_srgi(&k, None)?,
            Err(SetOptError::EmptyGrid) => {
                Check::holds("srgi", json!({"restriction": n, "reason": "no grid points in the ball"}))
            }
            Err(e) => return Err(e),
        };
        srgi_on_balls.push((n, check));
    }

    let coercive_applicable =
        attainment.verdict.is_satisfied() && srgi.verdict == Verdict::Holds && sgicc.verdict == Verdict::Holds;
    let mut blocked = Vec::new();
    if !attainment.verdict.is_satisfied() {
        blocked.push("attainment".to_string());
    }
    for (n, c) in &srgi_on_balls {
        if c.verdict != Verdict::Holds {
            blocked.push(format!("srgi on K_{n}: {}", c.verdict.as_str()));
        }
    }
    if condition_12.verdict != Verdict::Holds {
        blocked.push("condition_12".to_string());
    }
    if !problem.flags().k_q_set {
        blocked.push("K_q_set not asserted".to_string());
    }
    let noncoercive_applicable = blocked.is_empty();

    let sweff: Vec<Vec<f64>> =
        sweff_indices(problem).into_iter().map(|i| problem.grid().point(i).to_vec()).collect();
    if (coercive_applicable || noncoercive_applicable) && sweff.is_empty() {
        return Err(SetOptError::Internal(
            "an existence theorem applies but the strictly weakly efficient set is empty".into(),
        ));
    }
    Ok(HypothesisReport {
        m_f_q: m,
        attainment,
        srgi,
        sgicc,
        condition_12,
        srgi_on_balls,
        k_q_set_asserted: problem.flags().k_q_set,
        coercive_applicable,
        noncoercive_applicable,
        noncoercive_blocked_by: blocked,
        sweff,
    })
}

/// The asymptotic condition as a verdict, for callers that only need the check.
pub fn condition_12_verdict(problem: &SetValuedProblem, directions: &[Vec<f64>], options: &RayOptions) -> Result<Check> {
    Ok(condition_12_check(&check_condition_12(problem, directions, options)?))
}
