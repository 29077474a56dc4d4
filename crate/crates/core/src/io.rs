//! JSON form of hypermatrices:
//! `{"order": d, "dim": n, "scalar": "rational"|"poly", "entries": [...]}`
//! with rationals as `"p/q"` strings and polynomials as arrays of such strings,
//! lowest degree first.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalar::rational::parse_rational;
use crate::scalar::{Rational, UniPoly};
use crate::tensor::Hypermatrix;

#[derive(Clone, Debug, PartialEq)]
pub enum AnyHypermatrix {
    Rational(Hypermatrix<Rational>),
    Poly(Hypermatrix<UniPoly>),
}

#[derive(Serialize, Deserialize)]
struct RawHypermatrix {
    order: usize,
    dim: usize,
    scalar: String,
    entries: Vec<Value>,
}

fn parse_entry_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        other => Err(Error::Parse(format!("expected a rational string, got {other}"))),
    }
}

fn parse_entry_poly(v: &Value) -> Result<UniPoly> {
    match v {
        Value::Array(cs) => Ok(UniPoly::new(
            cs.iter().map(parse_entry_rational).collect::<Result<_>>()?,
        )),
        other => Err(Error::Parse(format!("expected a coefficient array, got {other}"))),
    }
}

pub fn parse_hypermatrix(text: &str) -> Result<AnyHypermatrix> {
    let raw: RawHypermatrix = serde_json::from_str(text)?;
    match raw.scalar.as_str() {
        "rational" => {
            let entries = raw.entries.iter().map(parse_entry_rational).collect::<Result<_>>()?;
            Ok(AnyHypermatrix::Rational(Hypermatrix::new(raw.order, raw.dim, entries)?))
        }
        "poly" => {
            let entries = raw.entries.iter().map(parse_entry_poly).collect::<Result<_>>()?;
            Ok(AnyHypermatrix::Poly(Hypermatrix::new(raw.order, raw.dim, entries)?))
        }
        other => Err(Error::Parse(format!("unknown scalar kind {other:?}"))),
    }
}

pub fn rational_hypermatrix_json(m: &Hypermatrix<Rational>) -> Value {
    serde_json::json!({
        "order": m.order(),
        "dim": m.dim(),
        "scalar": "rational",
        "entries": m.entries().iter().map(|e| e.to_string()).collect::<Vec<_>>(),
    })
}

pub fn poly_hypermatrix_json(m: &Hypermatrix<UniPoly>) -> Value {
    let entries: Vec<Vec<String>> = m
        .entries()
        .iter()
        .map(|p| p.coeffs().iter().map(|c| c.to_string()).collect())
        .collect();
    serde_json::json!({
        "order": m.order(),
        "dim": m.dim(),
        "scalar": "poly",
        "entries": entries,
    })
}

impl AnyHypermatrix {
    pub fn to_json(&self) -> Value {
        match self {
            AnyHypermatrix::Rational(m) => rational_hypermatrix_json(m),
            AnyHypermatrix::Poly(m) => poly_hypermatrix_json(m),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::{int, rat};

    #[test]
    fn rational_roundtrip() {
        let m = Hypermatrix::matrix(vec![vec![int(1), rat(1, 2)], vec![rat(-1, 2), rat(1, 3)]]).unwrap();
        let any = AnyHypermatrix::Rational(m);
        let back = parse_hypermatrix(&any.to_json().to_string()).unwrap();
        assert_eq!(back, any);
    }

    #[test]
    fn poly_roundtrip() {
        let m = Hypermatrix::new(2, 1, vec![UniPoly::linear(int(1), rat(-2, 3))]).unwrap();
        let any = AnyHypermatrix::Poly(m);
        let text = any.to_json().to_string();
        assert!(text.contains(r#"[["-2/3","1"]]"#));
        assert_eq!(parse_hypermatrix(&text).unwrap(), any);
    }

    #[test]
    fn malformed() {
        assert!(parse_hypermatrix("{").is_err());
        assert!(parse_hypermatrix(r#"{"order":2,"dim":2,"scalar":"rational","entries":["1"]}"#).is_err());
        assert!(parse_hypermatrix(r#"{"order":2,"dim":1,"scalar":"real","entries":["1"]}"#).is_err());
        assert!(parse_hypermatrix(r#"{"order":2,"dim":1,"scalar":"rational","entries":["1/0"]}"#).is_err());
    }
}
