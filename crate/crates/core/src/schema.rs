//! Problem-file schema (JSON, version "1").
//!
//! ```json
//! {
//!   "schema_version": "1",
//!   "cone": { "dual_generators": [[1, 0], [0, 1]], "q": [1, 1] },
//!   "domain": { "box": [[-3, 3], [-3, 3]], "resolution": [13, 13] },
//!   "map": { "kind": "constant", "parameters": { "cloud": { "type": "points", "points": [[0, 0]] } } },
//!   "tolerances": { "cone_tol": 1e-12, "scal_tol": 1e-9, "tie_tol": 1e-9 },
//!   "flags": { "K_q_set": true }
//! }
//! ```
//!
//! `domain` holds either `points` or `box` plus `resolution`. `tolerances` and
//! `flags` may be omitted.

use serde::{Deserialize, Serialize};

use crate::cone::DEFAULT_CONE_TOL;
use crate::error::{Result, SetOptError};
use crate::problem::MapModel;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeDocument {
    pub dual_generators: Vec<Vec<f64>>,
    pub q: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DomainDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<f64>>>,
    #[serde(default, rename = "box", skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolution: Option<Vec<usize>>,
}

impl DomainDocument {
    pub fn points(points: Vec<Vec<f64>>) -> Self {
        DomainDocument { points: Some(points), bounds: None, resolution: None }
    }

    pub fn boxed(bounds: Vec<[f64; 2]>, resolution: Vec<usize>) -> Self {
        DomainDocument { points: None, bounds: Some(bounds), resolution: Some(resolution) }
    }
}

fn default_cone_tol() -> f64 {
    DEFAULT_CONE_TOL
}

fn default_scal_tol() -> f64 {
    1e-9
}

fn default_tie_tol() -> f64 {
    1e-9
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    /// Absolute slack in cone membership predicates.
    #[serde(default = "default_cone_tol")]
    pub cone_tol: f64,
    /// Bracket width for the bisection oracle.
    #[serde(default = "default_scal_tol")]
    pub scal_tol: f64,
    /// Boundary tie-breaking for `Ψ_F(x) = λ` and argmin membership.
    #[serde(default = "default_tie_tol")]
    pub tie_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { cone_tol: default_cone_tol(), scal_tol: default_scal_tol(), tie_tol: default_tie_tol() }
    }
}

impl Tolerances {
    pub(crate) fn validate(&self) -> Result<()> {
        for (name, v) in [("cone_tol", self.cone_tol), ("scal_tol", self.scal_tol), ("tie_tol", self.tie_tol)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(SetOptError::Schema(format!("tolerance {name} = {v} must be positive and finite")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Flags {
    /// User assertion that the asymptotic compactness condition on minimizing
    /// sequences holds. It is not checked numerically.
    #[serde(default, rename = "K_q_set")]
    pub k_q_set: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub schema_version: String,
    pub cone: ConeDocument,
    pub domain: DomainDocument,
    pub map: MapModel,
    #[serde(default)]
    pub tolerances: Tolerances,
    #[serde(default)]
    pub flags: Flags,
}

impl ProblemDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ProblemDocument = serde_json::from_str(text).map_err(|e| SetOptError::Schema(e.to_string()))?;
        doc.check_shallow()?;
        Ok(doc)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Version and finiteness checks that do not need the full model.
    pub(crate) fn check_shallow(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(SetOptError::Schema(format!(
                "unsupported schema_version {:?}, expected {SCHEMA_VERSION:?}",
                self.schema_version
            )));
        }
        let json = serde_json::to_value(self).map_err(|e| SetOptError::Schema(e.to_string()))?;
        if contains_null(&json) {
            return Err(SetOptError::Schema("all numeric entries must be finite".into()));
        }
        Ok(())
    }
}

// serde_json writes non-finite floats as null
fn contains_null(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Null => true,
        serde_json::Value::Array(a) => a.iter().any(contains_null),
        serde_json::Value::Object(o) => o.values().any(contains_null),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{
        "schema_version": "1",
        "cone": {"dual_generators": [[1, 0], [0, 1]], "q": [1, 1]},
        "domain": {"points": [[0], [1]]},
        "map": {"kind": "constant", "parameters": {"cloud": {"type": "points", "points": [[0, 0]]}}}
    }"#;

    #[test]
    fn defaults_fill_in() {
        let d = ProblemDocument::from_json(MINIMAL).unwrap();
        assert_eq!(d.tolerances, Tolerances::default());
        assert!(!d.flags.k_q_set);
    }

    #[test]
    fn unknown_fields_rejected() {
        let bad = MINIMAL.replace("\"q\"", "\"extra\": 1, \"q\"");
        assert!(matches!(ProblemDocument::from_json(&bad), Err(SetOptError::Schema(_))));
    }

    #[test]
    fn version_checked() {
        let bad = MINIMAL.replace("\"1\"", "\"2\"");
        assert!(ProblemDocument::from_json(&bad).is_err());
    }

    #[test]
    fn flag_name_on_the_wire() {
        let mut d = ProblemDocument::from_json(MINIMAL).unwrap();
        d.flags.k_q_set = true;
        let v = serde_json::to_value(&d).unwrap();
        assert_eq!(v["flags"]["K_q_set"], true);
    }
}
