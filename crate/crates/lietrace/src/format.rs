//! Canonical JSON encodings: rationals as `"p/q"` strings, polynomials as
//! sorted term lists, algebraic reals with their defining data.

use lietrace_core::arith::{parse_q, q_to_string, Q};
use lietrace_core::poly::Poly;
use lietrace_core::upoly::{AlgebraicReal, RootLoc};
use serde_json::{json, Value};

pub const POLY_SCHEMA: &str = "lietrace.poly.v1";

pub fn rational(x: &Q) -> Value {
    Value::String(q_to_string(x))
}

pub fn poly(p: &Poly, prefix: &str) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({ "exp": e, "coeff": q_to_string(c) }))
        .collect();
    json!({
        "schema": POLY_SCHEMA,
        "nvars": p.nvars(),
        "prefix": prefix,
        "terms": terms,
        "text": p.to_string_with(prefix),
    })
}

/// Inverse of [`poly`]; `text` is ignored.
pub fn parse_poly_json(v: &Value) -> Result<(Poly, String), String> {
    if v.get("schema").and_then(Value::as_str) != Some(POLY_SCHEMA) {
        return Err(format!("expected a \"{POLY_SCHEMA}\" document"));
    }
    let nvars = v
        .get("nvars")
        .and_then(Value::as_u64)
        .ok_or("missing \"nvars\"")? as usize;
    let prefix = v
        .get("prefix")
        .and_then(Value::as_str)
        .unwrap_or("t")
        .to_string();
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or("missing \"terms\"")?;
    let mut p = Poly::zero(nvars);
    for t in terms {
        let exp: Vec<u32> = t
            .get("exp")
            .and_then(Value::as_array)
            .ok_or("term without \"exp\"")?
            .iter()
            .map(|e| e.as_u64().map(|x| x as u32).ok_or("exponent is not an integer"))
            .collect::<Result<_, _>>()?;
        if exp.len() != nvars {
            return Err(format!("exponent {exp:?} does not have {nvars} entries"));
        }
        let c = t
            .get("coeff")
            .and_then(Value::as_str)
            .and_then(parse_q)
            .ok_or("coefficient must be a \"p/q\" string")?;
        p.add_term(exp, c);
    }
    Ok((p, prefix))
}

/// `{"decimal", "rational"}` for rationals, `{"decimal", "poly",
/// "interval"}` otherwise.
pub fn algebraic(x: &AlgebraicReal, digits: u32) -> Value {
    match x.as_rational() {
        Some(r) => json!({ "rational": q_to_string(r), "decimal": x.decimal(digits) }),
        None => {
            let coeffs: Vec<Value> = x.poly().coeffs().iter().map(rational).collect();
            let (lo, hi) = match x.loc() {
                RootLoc::Exact(a) => (a.clone(), a.clone()),
                RootLoc::Open(a, b) => (a.clone(), b.clone()),
            };
            json!({
                "decimal": x.decimal(digits),
                "poly": coeffs,
                "interval": [q_to_string(&lo), q_to_string(&hi)],
            })
        }
    }
}

/// Exact string when rational, otherwise the decimal.
pub fn algebraic_text(x: &AlgebraicReal, digits: u32) -> String {
    match x.as_rational() {
        Some(r) => q_to_string(r),
        None => x.decimal(digits),
    }
}

/// Text field of an [`algebraic`] value.
pub fn algebraic_value_text(v: &Value) -> String {
    v.get("rational")
        .or_else(|| v.get("decimal"))
        .and_then(Value::as_str)
        .unwrap_or("?")
        .to_string()
}

/// Deterministic serialization used for files, hashing and stdout.
pub fn canonical(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}

pub fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}
