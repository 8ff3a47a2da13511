//! JSON forms of sequences and highest-weight functionals.
//!
//! ```text
//! sequence    {"exppoly": [{"base": "-1", "poly": ["0", "1"]}]}
//!             {"finite": {"0": "1"}}
//!             [{"base": "2", "poly": ["1"]}]          (bare exp-poly list)
//! functional  {"phi_d": <sequence>, "phi_c": <sequence>}
//! ```
//!
//! Rationals are strings (`"p"` or `"p/q"`); plain JSON integers are also
//! accepted on input. Output uses canonical rational strings and sorted keys.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::hw::HWFunctional;
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use crate::seq::{ExpPolySeq, FiniteSeq, Sequence};

fn bad(what: &'static str, v: &Value) -> Error {
    Error::Parse {
        what,
        token: v.to_string(),
    }
}

fn scalar_from(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_scalar(s),
        Value::Number(n) if n.is_i64() => parse_scalar(&n.to_string()),
        other => Err(bad("rational", other)),
    }
}

fn exppoly_from(v: &Value) -> Result<ExpPolySeq> {
    let items = v.as_array().ok_or_else(|| bad("exp-poly term list", v))?;
    let mut terms = Vec::with_capacity(items.len());
    for item in items {
        let obj = item.as_object().ok_or_else(|| bad("exp-poly term", item))?;
        let base = scalar_from(obj.get("base").ok_or_else(|| bad("exp-poly term (missing base)", item))?)?;
        let poly = obj
            .get("poly")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("exp-poly term (missing poly)", item))?
            .iter()
            .map(scalar_from)
            .collect::<Result<Vec<_>>>()?;
        terms.push((base, poly));
    }
    ExpPolySeq::new(terms)
}

pub fn sequence_from_json(v: &Value) -> Result<Sequence> {
    if v.is_array() {
        return Ok(exppoly_from(v)?.into());
    }
    let obj = v.as_object().ok_or_else(|| bad("sequence", v))?;
    match (obj.len(), obj.get("exppoly"), obj.get("finite")) {
        (1, Some(e), None) => Ok(exppoly_from(e)?.into()),
        (1, None, Some(f)) => {
            let map = f.as_object().ok_or_else(|| bad("finite sequence", f))?;
            let mut values = Vec::with_capacity(map.len());
            for (k, x) in map {
                let idx: i64 = k.trim().parse().map_err(|_| Error::Parse {
                    what: "sequence index",
                    token: k.clone(),
                })?;
                values.push((idx, scalar_from(x)?));
            }
            Ok(FiniteSeq::new(values).into())
        }
        _ => Err(bad("sequence", v)),
    }
}

pub fn sequence_to_json(s: &Sequence) -> Value {
    match s {
        Sequence::ExpPoly(e) => {
            let terms: Vec<Value> = e
                .terms()
                .iter()
                .map(|t| {
                    json!({
                        "base": format_scalar(t.base()),
                        "poly": t.poly().iter().map(format_scalar).collect::<Vec<_>>(),
                    })
                })
                .collect();
            json!({ "exppoly": terms })
        }
        Sequence::Finite(f) => {
            let map: Map<String, Value> = f
                .values()
                .map(|(k, x)| (k.to_string(), Value::String(format_scalar(x))))
                .collect();
            json!({ "finite": map })
        }
    }
}

pub fn functional_from_json(v: &Value) -> Result<HWFunctional> {
    let obj = v.as_object().ok_or_else(|| bad("functional", v))?;
    if let Some(extra) = obj.keys().find(|k| *k != "phi_d" && *k != "phi_c") {
        return Err(Error::Parse {
            what: "functional key",
            token: extra.clone(),
        });
    }
    let get = |key: &str| -> Result<Sequence> {
        match obj.get(key) {
            Some(s) => sequence_from_json(s),
            None => Ok(Sequence::zero()),
        }
    };
    Ok(HWFunctional::new(get("phi_d")?, get("phi_c")?))
}

pub fn functional_to_json(phi: &HWFunctional) -> Value {
    json!({
        "phi_c": sequence_to_json(&phi.phi_c),
        "phi_d": sequence_to_json(&phi.phi_d),
    })
}

/// Parses JSON text, naming the offending input on failure.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|_| Error::Parse {
        what: "JSON",
        token: text.to_string(),
    })
}
