//! JSON encoding of the shared data formats.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::{json, Map, Number, Value};

use k3lattice::clifford::{CliffordElement, EndoMatrix};
use k3lattice::{IntMatrix, IntVector, Isometry, Lattice, LatticeEmbedding};

use crate::CliError;

/// Integers above this magnitude become strings unless raw output is asked for.
const SAFE_INT_BITS: u64 = 53;

#[derive(Debug, Clone, Copy)]
pub struct Encoder {
    pub raw_ints: bool,
}

impl Encoder {
    pub fn int(&self, x: &BigInt) -> Value {
        if self.raw_ints || x.abs().bits() <= SAFE_INT_BITS {
            Value::Number(Number::from_str(&x.to_string()).expect("integer literal"))
        } else {
            Value::String(x.to_string())
        }
    }

    pub fn vector(&self, v: &[BigInt]) -> Value {
        Value::Array(v.iter().map(|x| self.int(x)).collect())
    }

    pub fn vectors(&self, vs: &[IntVector]) -> Value {
        Value::Array(vs.iter().map(|v| self.vector(v)).collect())
    }

    pub fn matrix(&self, m: &IntMatrix) -> Value {
        Value::Array(m.to_rows().iter().map(|r| self.vector(r)).collect())
    }

    pub fn lattice(&self, l: &Lattice) -> Value {
        let mut o = Map::new();
        if let Some(label) = l.label() {
            o.insert("label".into(), json!(label));
        }
        o.insert("rank".into(), json!(l.rank()));
        o.insert("gram".into(), self.matrix(l.gram()));
        Value::Object(o)
    }

    pub fn embedding(&self, e: &LatticeEmbedding) -> Value {
        json!({
            "source": self.lattice(e.source()),
            "target": self.lattice(e.target()),
            "matrix": self.matrix(e.matrix()),
        })
    }

    pub fn element(&self, x: &CliffordElement) -> Value {
        let terms: Vec<Value> = x
            .terms()
            .map(|(mask, c)| json!({"mask": mask, "coeff": c.to_string()}))
            .collect();
        json!({"rank": x.rank(), "terms": terms})
    }

    pub fn rational(&self, q: &BigRational) -> Value {
        if q.is_integer() {
            self.int(q.numer())
        } else {
            Value::String(q.to_string())
        }
    }
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, CliError> {
    v.get(key)
        .ok_or_else(|| bad(format!("missing field \"{key}\"")))
}

pub fn int(v: &Value) -> Result<BigInt, CliError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        _ => return Err(bad(format!("expected an integer, found {v}"))),
    };
    BigInt::from_str(&text).map_err(|_| bad(format!("not an integer: {text}")))
}

pub fn usize_of(v: &Value) -> Result<usize, CliError> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| bad(format!("expected a non-negative integer, found {v}")))
}

pub fn vector(v: &Value) -> Result<IntVector, CliError> {
    v.as_array()
        .ok_or_else(|| bad("expected an array of integers"))?
        .iter()
        .map(int)
        .collect()
}

pub fn matrix(v: &Value) -> Result<IntMatrix, CliError> {
    let rows = v
        .as_array()
        .ok_or_else(|| bad("expected an array of rows"))?
        .iter()
        .map(vector)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntMatrix::from_rows(rows)?)
}

pub fn lattice(v: &Value) -> Result<Lattice, CliError> {
    let gram = matrix(field(v, "gram")?)?;
    if let Some(r) = v.get("rank") {
        let rank = usize_of(r)?;
        if rank != gram.rows() {
            return Err(bad(format!(
                "rank {rank} does not match a {}x{} Gram matrix",
                gram.rows(),
                gram.cols()
            )));
        }
    }
    let mut l = Lattice::new(gram)?;
    if let Some(label) = v.get("label").and_then(Value::as_str) {
        l = l.with_label(label);
    }
    Ok(l)
}

pub fn embedding(v: &Value) -> Result<LatticeEmbedding, CliError> {
    Ok(LatticeEmbedding::new(
        lattice(field(v, "source")?)?,
        lattice(field(v, "target")?)?,
        matrix(field(v, "matrix")?)?,
    )?)
}

/// `{"lattice": ..., "matrix": ...}`; the lattice may come from elsewhere.
pub fn isometry(v: &Value, fallback: Option<Lattice>) -> Result<Isometry, CliError> {
    let l = match v.get("lattice") {
        Some(l) => lattice(l)?,
        None => fallback.ok_or_else(|| bad("isometry has no lattice and none was given"))?,
    };
    Ok(Isometry::new(l, matrix(field(v, "matrix")?)?)?)
}

pub fn element(v: &Value, host: &Arc<Lattice>) -> Result<CliffordElement, CliError> {
    let rank = usize_of(field(v, "rank")?)?;
    if rank != host.rank() {
        return Err(bad(format!(
            "element of rank {rank} over a host of rank {}",
            host.rank()
        )));
    }
    let terms = field(v, "terms")?
        .as_array()
        .ok_or_else(|| bad("\"terms\" must be an array"))?
        .iter()
        .map(|t| {
            let mask = field(t, "mask")?
                .as_u64()
                .ok_or_else(|| bad("mask must be a non-negative integer"))?;
            Ok((mask, int(field(t, "coeff")?)?))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(CliffordElement::from_terms(host, terms)?)
}

/// `{"rank": n, "matrix": [[...]]}` in the subset-mask basis.
pub fn endo(v: &Value) -> Result<EndoMatrix, CliError> {
    Ok(EndoMatrix::new(
        usize_of(field(v, "rank")?)?,
        matrix(field(v, "matrix")?)?,
    )?)
}

/// `1,-2,3` or a JSON array.
pub fn parse_vector_arg(s: &str) -> Result<IntVector, CliError> {
    let t = s.trim();
    if t.starts_with('[') {
        let v: Value = serde_json::from_str(t).map_err(|e| bad(e.to_string()))?;
        return vector(&v);
    }
    t.split(',')
        .map(|x| BigInt::from_str(x.trim()).map_err(|_| bad(format!("not an integer: {x}"))))
        .collect()
}
