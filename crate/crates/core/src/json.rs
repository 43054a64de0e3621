//! Canonical JSON encodings.
//!
//! Polynomials are strings in the text grammar (leading term first);
//! objects come out with sorted keys because `serde_json::Value` maps are
//! ordered.

use serde_json::{json, Value};

use crate::companion::AlternatingMatrix;
use crate::error::{Error, Result};
use crate::factorize::NormalizedFactorization;
use crate::genmat::GenericContext;
use crate::homology::HilbertSeries;
use crate::matfact::MatrixFactorization;
use crate::{Poly, PolyMat, Rational};

pub fn poly(p: &Poly) -> Value {
    Value::String(p.to_string())
}

/// `{"n_rows", "n_cols", "entries"}`.
pub fn matrix(m: &PolyMat) -> Value {
    json!({
        "n_rows": m.rows(),
        "n_cols": m.cols(),
        "entries": m.to_strings(),
    })
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field \"{key}\"")))
}

fn as_usize(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?.as_u64().map(|x| x as usize).ok_or_else(|| Error::Parse(format!("\"{key}\" is not a non-negative integer")))
}

fn as_poly(v: &Value, n: usize) -> Result<Poly> {
    let s = v.as_str().ok_or_else(|| Error::Parse("polynomial entries must be strings".into()))?;
    Poly::parse_in(s, n)
}

/// Reads a matrix in the schema of [`matrix`] over context `n`.
pub fn matrix_from(v: &Value, n: usize) -> Result<PolyMat> {
    let (rows, cols) = (as_usize(v, "n_rows")?, as_usize(v, "n_cols")?);
    let entries = field(v, "entries")?.as_array().ok_or_else(|| Error::Parse("\"entries\" must be an array".into()))?;
    if entries.len() != rows {
        return Err(Error::Parse(format!("expected {rows} rows, found {}", entries.len())));
    }
    let mut out = Vec::with_capacity(rows);
    for row in entries {
        let row = row.as_array().ok_or_else(|| Error::Parse("rows must be arrays".into()))?;
        if row.len() != cols {
            return Err(Error::Parse(format!("expected {cols} columns, found {}", row.len())));
        }
        out.push(row.iter().map(|e| as_poly(e, n)).collect::<Result<Vec<_>>>()?);
    }
    if rows == 0 {
        return Ok(PolyMat::zeros(n, 0, cols));
    }
    PolyMat::from_rows(n, out)
}

/// `{"phi", "psi", "f", "label"}`.
pub fn matrix_factorization(mf: &MatrixFactorization<Rational>) -> Value {
    json!({
        "phi": matrix(mf.phi()),
        "psi": matrix(mf.psi()),
        "f": poly(mf.f()),
        "label": mf.label.to_string(),
    })
}

/// `{"n", "J", "Z", "A", "U"}`.
pub fn normalized(nf: &NormalizedFactorization<Rational>) -> Value {
    json!({
        "n": nf.j.rows(),
        "J": matrix(&nf.j),
        "Z": matrix(&nf.z),
        "A": matrix(nf.a.matrix()),
        "U": matrix(&nf.u),
    })
}

/// Reads a normalized factorization without verifying it; see
/// [`NormalizedFactorization::verify`].
pub fn normalized_from(v: &Value) -> Result<NormalizedFactorization<Rational>> {
    let n = as_usize(v, "n")?;
    let get = |k: &str| matrix_from(field(v, k)?, n);
    Ok(NormalizedFactorization { j: get("J")?, z: get("Z")?, a: AlternatingMatrix::new(get("A")?)?, u: get("U")? })
}

pub fn hilbert(hs: &HilbertSeries) -> Value {
    json!({
        "numerator": hs.numerator.iter().map(|&(d, c)| json!([d, c])).collect::<Vec<_>>(),
        "denominator_power": hs.denominator_power,
        "text": hs.to_string(),
    })
}

pub fn context(ctx: &GenericContext<Rational>) -> Value {
    json!({
        "n": ctx.n,
        "X": matrix(&ctx.x),
        "adj": matrix(&ctx.adj),
        "det": poly(&ctx.det),
    })
}

/// Pretty-printed canonical form with a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("Value serializes");
    s.push('\n');
    s
}
