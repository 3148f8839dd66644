//! Polyhedral ordering cones and the Gerstewitz scalarization.
//!
//! A cone is given by dual generators `w_1..w_k`:
//!
//! ```text
//! P = { y : <w_j, y> >= 0 for all j }
//! ```
//!
//! together with an order unit `q` satisfying `<w_j, q> > 0`, so `q` lies in
//! the interior of `P`. For such a cone the scalarization
//!
//! ```text
//! psi(y) = sup { t : y - t q in P }
//! ```
//!
//! has the closed form `min_j <w_j, y> / <w_j, q>`. An independent bracketing
//! and bisection routine is kept alongside for cross-validation.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_dim, Result, SetOptError};

pub const DEFAULT_CONE_TOL: f64 = 1e-12;

/// Extended real value: finite, `+inf` or `-inf`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ScalarValue(pub f64);

impl ScalarValue {
    pub const INFINITY: ScalarValue = ScalarValue(f64::INFINITY);
    pub const NEG_INFINITY: ScalarValue = ScalarValue(f64::NEG_INFINITY);

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }
}

impl From<f64> for ScalarValue {
    fn from(v: f64) -> Self {
        ScalarValue(v)
    }
}

impl fmt::Display for ScalarValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == f64::INFINITY {
            write!(f, "inf")
        } else if self.0 == f64::NEG_INFINITY {
            write!(f, "-inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

// JSON has no infinities; they travel as the strings "inf" / "-inf".
impl Serialize for ScalarValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            s.serialize_f64(self.0)
        } else if self.0 > 0.0 {
            s.serialize_str("inf")
        } else if self.0 < 0.0 {
            s.serialize_str("-inf")
        } else {
            s.serialize_str("nan")
        }
    }
}

impl<'de> Deserialize<'de> for ScalarValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(f64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(ScalarValue(v)),
            Repr::Text(t) => match t.as_str() {
                "inf" | "+inf" => Ok(ScalarValue::INFINITY),
                "-inf" => Ok(ScalarValue::NEG_INFINITY),
                other => Err(serde::de::Error::custom(format!(
                    "invalid scalar value {other:?}"
                ))),
            },
        }
    }
}

/// A solid, proper, closed convex polyhedral cone with an interior order unit.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeSpec {
    dual_generators: Vec<Vec<f64>>,
    order_unit: Vec<f64>,
    tol: f64,
    // <w_j, q>, all strictly positive
    unit_pairings: Vec<f64>,
}

impl ConeSpec {
    pub fn new(dual_generators: Vec<Vec<f64>>, order_unit: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(dual_generators, order_unit, DEFAULT_CONE_TOL)
    }

    pub fn with_tolerance(
        dual_generators: Vec<Vec<f64>>,
        order_unit: Vec<f64>,
        tol: f64,
    ) -> Result<Self> {
        let m = order_unit.len();
        if m == 0 {
            return Err(SetOptError::InvalidCone("image dimension must be positive".into()));
        }
        if dual_generators.is_empty() {
            return Err(SetOptError::InvalidCone("at least one dual generator is required".into()));
        }
        if !(tol >= 0.0 && tol.is_finite()) {
            return Err(SetOptError::InvalidCone(format!("cone tolerance {tol} must be finite and >= 0")));
        }
        if order_unit.iter().any(|v| !v.is_finite()) {
            return Err(SetOptError::InvalidCone("order unit has non-finite entries".into()));
        }
        let mut unit_pairings = Vec::with_capacity(dual_generators.len());
        for (j, w) in dual_generators.iter().enumerate() {
            check_dim(m, w.len())?;
            if w.iter().any(|v| !v.is_finite()) {
                return Err(SetOptError::InvalidCone(format!("dual generator {j} has non-finite entries")));
            }
            if w.iter().all(|&v| v == 0.0) {
                return Err(SetOptError::InvalidCone(format!("dual generator {j} is zero")));
            }
            let pairing = dot(w, &order_unit);
            if pairing <= 0.0 {
                return Err(SetOptError::OrderUnitNotInterior { index: j, pairing });
            }
            unit_pairings.push(pairing);
        }
        Ok(ConeSpec { dual_generators, order_unit, tol, unit_pairings })
    }

    /// `R^m_+` with the given order unit.
    pub fn nonnegative_orthant(order_unit: Vec<f64>) -> Result<Self> {
        let m = order_unit.len();
        let gens = (0..m)
            .map(|i| (0..m).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        Self::new(gens, order_unit)
    }

    pub fn dim(&self) -> usize {
        self.order_unit.len()
    }

    pub fn dual_generators(&self) -> &[Vec<f64>] {
        &self.dual_generators
    }

    pub fn order_unit(&self) -> &[f64] {
        &self.order_unit
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// Same cone, order unit scaled by `t > 0`.
    pub fn with_scaled_unit(&self, t: f64) -> Result<Self> {
        let q = self.order_unit.iter().map(|v| v * t).collect();
        Self::with_tolerance(self.dual_generators.clone(), q, self.tol)
    }

    /// `<w_j, y>` for every generator.
    pub fn pairings(&self, y: &[f64]) -> Result<Vec<f64>> {
        check_dim(self.dim(), y.len())?;
        Ok(self.pairings_unchecked(y))
    }

    pub(crate) fn pairings_unchecked(&self, y: &[f64]) -> Vec<f64> {
        self.dual_generators.iter().map(|w| dot(w, y)).collect()
    }

    pub(crate) fn unit_pairings(&self) -> &[f64] {
        &self.unit_pairings
    }

    pub fn contains(&self, y: &[f64]) -> Result<bool> {
        check_dim(self.dim(), y.len())?;
        Ok(self.dual_generators.iter().all(|w| dot(w, y) >= -self.tol))
    }

    pub fn contains_interior(&self, y: &[f64]) -> Result<bool> {
        check_dim(self.dim(), y.len())?;
        Ok(self.dual_generators.iter().all(|w| dot(w, y) > self.tol))
    }

    pub fn gerstewitz(&self, y: &[f64]) -> Result<ScalarValue> {
        check_dim(self.dim(), y.len())?;
        Ok(ScalarValue(self.gerstewitz_unchecked(y)))
    }

    pub(crate) fn gerstewitz_unchecked(&self, y: &[f64]) -> f64 {
        self.dual_generators
            .iter()
            .zip(&self.unit_pairings)
            .map(|(w, wq)| dot(w, y) / wq)
            .fold(f64::INFINITY, f64::min)
    }

    /// Brackets `sup { t : y - t q in P }` by exponential search, then bisects
    /// until the bracket is no wider than `tol`. Membership is tested exactly
    /// (zero tolerance) so the result does not depend on `cone_tol`.
    pub fn gerstewitz_oracle(&self, y: &[f64], tol: f64) -> Result<ScalarValue> {
        check_dim(self.dim(), y.len())?;
        if !(tol > 0.0) {
            return Err(SetOptError::InvalidArgument(format!("oracle tolerance {tol} must be positive")));
        }
        let feasible = |t: f64| {
            let shifted: Vec<f64> = y.iter().zip(&self.order_unit).map(|(a, b)| a - t * b).collect();
            self.dual_generators.iter().all(|w| dot(w, &shifted) >= 0.0)
        };

        const MAX_DOUBLINGS: usize = 1100;
        let (mut lo, mut hi);
        if feasible(0.0) {
            lo = 0.0;
            let mut step = 1.0;
            hi = step;
            let mut n = 0;
            while feasible(hi) {
                lo = hi;
                step *= 2.0;
                hi = step;
                n += 1;
                if n > MAX_DOUBLINGS || !hi.is_finite() {
                    return Ok(ScalarValue::INFINITY);
                }
            }
        } else {
            hi = 0.0;
            let mut step = 1.0;
            lo = -step;
            let mut n = 0;
            while !feasible(lo) {
                hi = lo;
                step *= 2.0;
                lo = -step;
                n += 1;
                if n > MAX_DOUBLINGS || !lo.is_finite() {
                    return Ok(ScalarValue::NEG_INFINITY);
                }
            }
        }
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if feasible(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(ScalarValue(0.5 * (lo + hi)))
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
