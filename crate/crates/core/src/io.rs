//! JSON algebra files:
//!
//! ```json
//! {"name": "A", "dim": 2, "names": ["e", "a"], "unit": 0,
//!  "table": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "-1/2"]],
//!  "involution": ["1", "0", "0", "-1"]}
//! ```
//!
//! Omitted table entries are zero. `name`, `names`, `unit` and `involution` are optional.

use std::collections::HashSet;
use std::path::Path;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::algebra::{vbasis, Algebra, AlgebraError, StructureAlgebra};
use crate::linalg::Matrix;
use crate::scalar::{parse_rational, Rational};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("field `{field}`: {reason}")]
    Field { field: String, reason: String },
    #[error("table entry {index} {entry}: {reason}")]
    Entry { index: usize, entry: String, reason: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn field(f: &str, reason: impl Into<String>) -> LoadError {
    LoadError::Field { field: f.to_string(), reason: reason.into() }
}

fn rational(v: &Value) -> Result<Rational, String> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| e.to_string()),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        other => Err(format!("expected a \"p/q\" string, got {other}")),
    }
}

fn index(v: &Value, dim: usize) -> Result<usize, String> {
    match v.as_u64() {
        Some(i) if (i as usize) < dim => Ok(i as usize),
        Some(i) => Err(format!("index {i} out of range for dim {dim}")),
        None => Err(format!("expected a non-negative integer index, got {v}")),
    }
}

pub fn parse_algebra(text: &str, default_name: &str) -> Result<Algebra, LoadError> {
    let root: Value = serde_json::from_str(text).map_err(|e| LoadError::Json(e.to_string()))?;
    let obj: &Map<String, Value> = root.as_object().ok_or_else(|| LoadError::Json("top level is not an object".into()))?;
    for k in obj.keys() {
        if !["name", "dim", "names", "unit", "table", "involution"].contains(&k.as_str()) {
            return Err(field(k, "unknown field"));
        }
    }
    let dim = obj.get("dim").and_then(Value::as_u64).ok_or_else(|| field("dim", "missing or not a non-negative integer"))? as usize;
    if dim == 0 {
        return Err(field("dim", "must be positive"));
    }
    let name = match obj.get("name") {
        None => default_name.to_string(),
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(field("name", "not a string")),
    };
    let names: Vec<String> = match obj.get("names") {
        None => (0..dim).map(|i| format!("e{i}")).collect(),
        Some(Value::Array(a)) => {
            let n: Option<Vec<String>> = a.iter().map(|v| v.as_str().map(str::to_string)).collect();
            let n = n.ok_or_else(|| field("names", "entries must be strings"))?;
            if n.len() != dim {
                return Err(field("names", format!("{} names for dim {dim}", n.len())));
            }
            n
        }
        Some(_) => return Err(field("names", "not a list")),
    };
    let unit = match obj.get("unit") {
        None | Some(Value::Null) => None,
        Some(v) => Some(vbasis(dim, index(v, dim).map_err(|r| field("unit", r))?)),
    };
    let rows = obj.get("table").and_then(Value::as_array).ok_or_else(|| field("table", "missing or not a list"))?;
    let mut seen = HashSet::new();
    let mut table = Vec::with_capacity(rows.len());
    for (n, row) in rows.iter().enumerate() {
        let bad = |reason: String| LoadError::Entry { index: n, entry: row.to_string(), reason };
        let r = row.as_array().filter(|r| r.len() == 4).ok_or_else(|| bad("expected [i, j, k, \"p/q\"]".into()))?;
        let (i, j, k) = (index(&r[0], dim).map_err(bad)?, index(&r[1], dim).map_err(bad)?, index(&r[2], dim).map_err(bad)?);
        let c = rational(&r[3]).map_err(bad)?;
        if !seen.insert((i, j, k)) {
            return Err(bad("duplicate entry".into()));
        }
        table.push((i, j, k, c));
    }
    let involution = match obj.get("involution") {
        None | Some(Value::Null) => None,
        Some(Value::Array(a)) => {
            if a.len() != dim * dim {
                return Err(field("involution", format!("{} entries, expected {}", a.len(), dim * dim)));
            }
            let vals: Vec<Rational> = a
                .iter()
                .enumerate()
                .map(|(n, v)| rational(v).map_err(|r| field("involution", format!("entry {n}: {r}"))))
                .collect::<Result<_, _>>()?;
            Some(Matrix::from_fn(dim, dim, |i, j| vals[i * dim + j].clone()))
        }
        Some(_) => return Err(field("involution", "not a list")),
    };
    Ok(StructureAlgebra::from_table(name, names, table, unit, involution)?)
}

pub fn load_algebra(path: &Path) -> Result<Algebra, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io { path: path.display().to_string(), reason: e.to_string() })?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("file");
    parse_algebra(&text, stem)
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOOD: &str = r#"{"dim": 2, "names": ["e", "a"], "unit": 0,
        "table": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, 1], [1, 1, 0, "-1/2"]],
        "involution": ["1", "0", "0", "-1"]}"#;

    #[test]
    fn loads_a_small_algebra() {
        let a = parse_algebra(GOOD, "g").unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.name(), "g");
        assert_eq!(a.mul_vec(&vbasis(2, 1), &vbasis(2, 1)), vec![crate::scalar::q(-1, 2), Rational::from_integer(0.into())]);
        assert!(a.involution().is_some());
    }

    #[test]
    fn errors_cite_the_entry() {
        let bad = GOOD.replace("\"-1/2\"", "\"2/4\"");
        let e = parse_algebra(&bad, "g").unwrap_err().to_string();
        assert!(e.contains("table entry 3") && e.contains("2/4"), "{e}");
        let e = parse_algebra(&GOOD.replace("[1, 0, 1, 1]", "[1, 0, 2, 1]"), "g").unwrap_err().to_string();
        assert!(e.contains("table entry 2") && e.contains("out of range"), "{e}");
        let e = parse_algebra(&GOOD.replace("[1, 1, 0,", "[0, 1, 1,"), "g").unwrap_err().to_string();
        assert!(e.contains("duplicate"), "{e}");
        assert!(matches!(parse_algebra(&GOOD.replace("\"unit\": 0", "\"unit\": 1"), "g"), Err(LoadError::Algebra(AlgebraError::UnitLaw(_)))));
        assert!(matches!(parse_algebra("[1]", "g"), Err(LoadError::Json(_))));
        assert!(matches!(parse_algebra(&GOOD.replace("\"dim\"", "\"dims\""), "g"), Err(LoadError::Field { .. })));
    }
}
