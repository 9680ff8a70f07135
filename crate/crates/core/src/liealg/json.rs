//! JSON form of [`LieAlgebraData`]:
//!
//! ```json
//! {"name": "sl2", "basis": ["e", "h", "f"],
//!  "c": [[0, 1, 0, "-2"], ...], "kappa": [["0", "0", "4"], ...],
//!  "rank": 1, "degrees": [2]}
//! ```
//!
//! Indices are 0-based; `c` lists every nonzero constant (both orders of
//! each pair). Rationals are `"p"` or `"p/q"` strings; plain JSON integers are
//! accepted too.

use super::{LieAlgebraData, LieError};
use crate::linalg::RatMatrix;
use crate::rational::{parse_rat, rat_to_string, Rat};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::path::Path;

#[derive(Serialize, Deserialize)]
struct Document {
    name: String,
    basis: Vec<String>,
    c: Vec<(usize, usize, usize, Value)>,
    kappa: Vec<Vec<Value>>,
    rank: usize,
    degrees: Vec<u32>,
}

fn scalar(v: &Value) -> Result<Rat, LieError> {
    let parsed = match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) => n.as_i64().map(crate::rational::rat),
        _ => None,
    };
    parsed.ok_or_else(|| LieError::Format(format!("not a rational: {v}")))
}

pub fn parse_json(text: &str) -> Result<LieAlgebraData, LieError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| LieError::Format(e.to_string()))?;
    let constants = doc
        .c
        .iter()
        .map(|(i, j, k, v)| Ok((*i, *j, *k, scalar(v)?)))
        .collect::<Result<Vec<_>, LieError>>()?;
    let n = doc.basis.len();
    if doc.kappa.len() != n || doc.kappa.iter().any(|r| r.len() != n) {
        return Err(LieError::Invariant {
            identity: "form shape",
            detail: format!("kappa must be {n}x{n}"),
        });
    }
    let rows = doc
        .kappa
        .iter()
        .map(|r| r.iter().map(scalar).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    LieAlgebraData::new(doc.name, doc.basis, &constants, RatMatrix::from_rows(rows), doc.rank, doc.degrees)
}

pub fn load_json(path: &Path) -> Result<LieAlgebraData, LieError> {
    let text = std::fs::read_to_string(path).map_err(|e| LieError::Format(format!("{}: {e}", path.display())))?;
    parse_json(&text)
}

pub fn to_json(data: &LieAlgebraData) -> String {
    let n = data.dim();
    let doc = Document {
        name: data.name().to_string(),
        basis: data.basis_labels().to_vec(),
        c: data
            .constants()
            .into_iter()
            .map(|(i, j, k, c)| (i, j, k, Value::String(rat_to_string(&c))))
            .collect(),
        kappa: (0..n)
            .map(|i| (0..n).map(|j| Value::String(rat_to_string(&data.kappa()[(i, j)]))).collect())
            .collect(),
        rank: data.rank(),
        degrees: data.degrees().to_vec(),
    };
    serde_json::to_string_pretty(&doc).expect("document serializes")
}
