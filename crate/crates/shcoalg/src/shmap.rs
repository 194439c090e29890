//! JSON documents describing a family between two coalgebra documents.
//!
//! ```json
//! { "name": "f", "source": {...}, "target": {...},
//!   "theta": {"1": {"x": [[1, "x'"]]}, "2": {"y": [[1, "a'", "b'"]]}} }
//! ```

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;
use std::sync::Arc;

use chaincore::{BigInt, Element, Label};
use hopfalg::{load_document, CoalgebraDocument, DgCoalgebra, DocumentError};
use serde_json::Value;

use crate::family::ShFamily;

/// A validated family document.
#[derive(Clone, Debug)]
pub struct ShmapDocument {
    pub name: String,
    pub source: CoalgebraDocument,
    pub target: CoalgebraDocument,
    pub family: ShFamily,
}

fn field(f: impl Into<String>, m: impl Into<String>) -> DocumentError {
    DocumentError::Field {
        field: f.into(),
        message: m.into(),
    }
}

fn semantic(g: &str, m: impl Into<String>) -> DocumentError {
    DocumentError::Semantic {
        generator: g.to_string(),
        message: m.into(),
    }
}

fn coefficient(v: &Value, at: &str) -> Result<BigInt, DocumentError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| field(at, format!("coefficient {n} is not an integer"))),
        Value::String(s) => BigInt::from_str(s)
            .map_err(|_| field(at, format!("coefficient `{s}` is not an integer"))),
        other => Err(field(
            at,
            format!("expected an integer coefficient, found {other}"),
        )),
    }
}

fn names(c: &DgCoalgebra) -> Result<HashMap<String, Label>, DocumentError> {
    let mut out = HashMap::new();
    for g in c.generators() {
        match g {
            Label::Gen(n, _) => {
                out.insert(n.to_string(), g.clone());
            }
            other => return Err(semantic(&other.to_string(), "generator without a name")),
        }
    }
    Ok(out)
}

/// Parses and validates a family document.
pub fn load_shmap(text: &str) -> Result<ShmapDocument, DocumentError> {
    let raw: Value = serde_json::from_str(text).map_err(|e| DocumentError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = raw
        .as_object()
        .ok_or_else(|| field("document", "expected an object"))?;
    for key in obj.keys() {
        if !["name", "source", "target", "theta"].contains(&key.as_str()) {
            return Err(field(key.clone(), "unknown field"));
        }
    }
    let name = obj
        .get("name")
        .and_then(Value::as_str)
        .ok_or_else(|| field("name", "missing name"))?
        .to_string();
    let sub = |key: &str| -> Result<CoalgebraDocument, DocumentError> {
        let v = obj
            .get(key)
            .ok_or_else(|| field(key, "missing coalgebra"))?;
        load_document(&v.to_string()).map_err(|e| field(key, e.to_string()))
    };
    let source = sub("source")?;
    let target = sub("target")?;
    if source.ring != target.ring {
        return Err(field("target", "source and target rings differ"));
    }
    let ring = source.ring;
    let src_names = names(&source.coalgebra)?;
    let tgt_names = names(&target.coalgebra)?;
    let theta = obj
        .get("theta")
        .and_then(Value::as_object)
        .ok_or_else(|| field("theta", "missing theta"))?;
    let mut maps = BTreeMap::new();
    for (k, table) in theta {
        let k: usize = k
            .parse()
            .map_err(|_| field("theta", format!("level `{k}` is not an integer")))?;
        if k == 0 {
            return Err(field("theta", "levels start at 1"));
        }
        let table = table
            .as_object()
            .ok_or_else(|| field("theta", format!("level {k} is not an object")))?;
        let mut m = HashMap::new();
        for (g, terms) in table {
            let src = src_names
                .get(g)
                .ok_or_else(|| semantic(g, "undeclared source generator"))?;
            let terms = terms
                .as_array()
                .ok_or_else(|| semantic(g, "terms must be a list"))?;
            let mut e = Element::zero(ring, src.degree() + k as i64 - 1);
            for t in terms {
                let t = t.as_array().filter(|t| t.len() == k + 1).ok_or_else(|| {
                    semantic(g, format!("level {k} terms are [coeff, label × {k}]"))
                })?;
                let c = coefficient(&t[0], &format!("theta.{k}.{g}"))?;
                let mut factors = Vec::with_capacity(k);
                for l in &t[1..] {
                    let s = l.as_str().ok_or_else(|| {
                        semantic(g, format!("expected a label string, found {l}"))
                    })?;
                    factors.push(
                        tgt_names
                            .get(s)
                            .cloned()
                            .ok_or_else(|| semantic(g, format!("undeclared target label `{s}`")))?,
                    );
                }
                let l = if k == 1 {
                    factors.pop().unwrap()
                } else {
                    Label::Tensor(factors)
                };
                if l.degree() != e.degree() {
                    return Err(semantic(
                        g,
                        format!(
                            "term `{l}` has degree {}, expected {}",
                            l.degree(),
                            e.degree()
                        ),
                    ));
                }
                e.add_term(l, c);
            }
            m.insert(src.clone(), e);
        }
        maps.insert(k, m);
    }
    let family = ShFamily::new(
        Arc::new(source.coalgebra.clone()),
        Arc::new(target.coalgebra.clone()),
        maps,
    )
    .map_err(|e| field("theta", e.to_string()))?;
    Ok(ShmapDocument {
        name,
        source,
        target,
        family,
    })
}
