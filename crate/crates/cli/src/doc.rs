//! JSON documents: matrices as `{"n", "entries"}` with `[re, im]` pairs,
//! scalars as `[re, im]`.

use std::path::Path;

use lieclosed::{Complex, RealMatrix, SquareMatrix};
use serde_json::{json, Value};

use crate::CliError;

/// Negative zeros are written as `0.0`.
pub fn complex(z: Complex) -> Value {
    json!([z.re + 0.0, z.im + 0.0])
}

pub fn complexes(zs: &[Complex]) -> Value {
    Value::Array(zs.iter().map(|z| complex(*z)).collect())
}

pub fn matrix(m: &SquareMatrix) -> Value {
    let entries: Vec<Value> = m.rows().iter().map(|row| complexes(row)).collect();
    json!({ "n": m.dim(), "entries": entries })
}

pub fn real_matrix(m: &RealMatrix) -> Value {
    let entries: Vec<Value> = (0..m.nrows())
        .map(|i| Value::Array((0..m.ncols()).map(|j| json!([m[(i, j)] + 0.0, 0.0])).collect()))
        .collect();
    json!({ "n": m.nrows(), "entries": entries })
}

pub fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        CliError::Input(format!(
            "{}: invalid JSON at line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })
}

/// A number or an `[re, im]` pair.
pub fn parse_complex(v: &Value, at: &str) -> Result<Complex, CliError> {
    let bad = || CliError::Input(format!("{at}: expected a number or an [re, im] pair, got {v}"));
    let z = match v {
        Value::Number(x) => Complex::new(x.as_f64().ok_or_else(bad)?, 0.0),
        Value::Array(pair) if pair.len() == 2 => Complex::new(
            pair[0].as_f64().ok_or_else(bad)?,
            pair[1].as_f64().ok_or_else(bad)?,
        ),
        _ => return Err(bad()),
    };
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(CliError::Input(format!("{at}: entry is not finite")));
    }
    Ok(z)
}

pub fn parse_matrix(v: &Value) -> Result<SquareMatrix, CliError> {
    let obj = v
        .as_object()
        .ok_or_else(|| CliError::Input("matrix document must be an object with n and entries".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError::Input("matrix document needs a non-negative integer n".into()))?
        as usize;
    let rows = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Input("matrix document needs an entries array".into()))?;
    if rows.len() != n {
        return Err(CliError::Input(format!("n = {n} but entries has {} rows", rows.len())));
    }
    let mut parsed = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| CliError::Input(format!("entries[{i}] is not an array")))?;
        if row.len() != n {
            return Err(CliError::Input(format!(
                "matrix is not square: row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        let row = row
            .iter()
            .enumerate()
            .map(|(j, x)| parse_complex(x, &format!("entries[{i}][{j}]")))
            .collect::<Result<Vec<_>, _>>()?;
        parsed.push(row);
    }
    if n == 0 {
        return Ok(SquareMatrix::zeros(0));
    }
    SquareMatrix::from_rows(&parsed).map_err(CliError::from)
}
