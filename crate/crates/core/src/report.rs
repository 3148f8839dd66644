//! JSON helpers shared by all reports.
//!
//! Reports are plain `serde_json::Value` trees. Objects use the default
//! sorted map, floats are rounded to 12 significant digits, and infinities
//! are written as the strings `"inf"` and `"-inf"`. Point lists are sorted
//! lexicographically; one-dimensional points are written as bare numbers.

use serde_json::{json, Map, Value};

/// Rounds to 12 significant digits; non-finite values pass through.
pub fn round12(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return if v == 0.0 { 0.0 } else { v };
    }
    format!("{v:.11e}").parse().expect("formatted float parses")
}

pub fn num(v: f64) -> Value {
    if v.is_nan() {
        Value::String("nan".into())
    } else if v == f64::INFINITY {
        Value::String("inf".into())
    } else if v == f64::NEG_INFINITY {
        Value::String("-inf".into())
    } else {
        json!(round12(v))
    }
}

pub fn opt_num(v: Option<f64>) -> Value {
    v.map_or(Value::Null, num)
}

pub fn vector(x: &[f64]) -> Value {
    Value::Array(x.iter().map(|&v| num(v)).collect())
}

/// A domain point: a bare number in one dimension, an array otherwise.
pub fn point(x: &[f64]) -> Value {
    if x.len() == 1 {
        num(x[0])
    } else {
        vector(x)
    }
}

pub fn sorted_points(mut pts: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    pts.sort_by(|a, b| {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    pts
}

pub fn points(pts: &[Vec<f64>]) -> Value {
    Value::Array(sorted_points(pts.to_vec()).iter().map(|p| point(p)).collect())
}

/// Like [`points`] but always nests coordinates, so `[[1.0, 0.0]]` stays a
/// list of arrays even for one point in two dimensions and `[[0.5]]` in one.
pub fn point_arrays(pts: &[Vec<f64>]) -> Value {
    Value::Array(sorted_points(pts.to_vec()).iter().map(|p| vector(p)).collect())
}

pub fn object(entries: impl IntoIterator<Item = (&'static str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in entries {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

pub fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize")
}
