//! JSON documents describing coalgebras with optional higher structure.
//!
//! ```json
//! { "name": "S3", "ring": "Z", "cutoff": 8,
//!   "generators": [{"label": "x3", "degree": 3}],
//!   "d": {}, "delta": {},
//!   "psi": {"2": {"y": [[1, ["1","e"], ["a","1"]]]}} }
//! ```
//!
//! `"1"` names the unit inside coproduct and `psi` terms. Coefficients are
//! JSON integers or decimal strings.

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;

use chaincore::{BigInt, Element, Label, Ring};
use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::coalgebra::DgCoalgebra;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("generator `{generator}`: {message}")]
    Semantic { generator: String, message: String },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    name: String,
    ring: String,
    cutoff: i64,
    generators: Vec<RawGenerator>,
    #[serde(default)]
    d: BTreeMap<String, Vec<Vec<Value>>>,
    #[serde(default)]
    delta: BTreeMap<String, Vec<Vec<Value>>>,
    #[serde(default)]
    psi: BTreeMap<String, BTreeMap<String, Vec<Vec<Value>>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGenerator {
    label: String,
    degree: i64,
}

/// A validated coalgebra document.
#[derive(Clone, Debug)]
pub struct CoalgebraDocument {
    pub name: String,
    pub ring: Ring,
    pub cutoff: i64,
    pub coalgebra: DgCoalgebra,
    /// Higher structure maps `Ψ_k` for `k ≥ 2` on generators, with labels
    /// `Tensor([p₁, …, p_k])` where each `p_i = Tensor([a, b])`.
    pub psi: BTreeMap<usize, HashMap<Label, Element>>,
}

impl CoalgebraDocument {
    /// Same document over another ring and cutoff.
    pub fn with(&self, ring: Ring, cutoff: i64) -> CoalgebraDocument {
        let psi = self
            .psi
            .iter()
            .map(|(k, m)| {
                let m = m
                    .iter()
                    .map(|(l, e)| {
                        let mut f = Element::zero(ring, e.degree());
                        for (t, c) in e.iter() {
                            f.add_term(t.clone(), c.clone());
                        }
                        (l.clone(), f)
                    })
                    .collect();
                (*k, m)
            })
            .collect();
        CoalgebraDocument {
            name: self.name.clone(),
            ring,
            cutoff,
            coalgebra: self.coalgebra.with(ring, cutoff),
            psi,
        }
    }

    pub fn has_higher_structure(&self) -> bool {
        self.psi.values().any(|m| m.values().any(|e| !e.is_zero()))
    }
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
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| field(at, format!("coefficient {n} is not an integer"))),
        Value::String(s) => BigInt::from_str(s)
            .map_err(|_| field(at, format!("coefficient `{s}` is not an integer"))),
        other => Err(field(
            at,
            format!("expected an integer coefficient, found {other}"),
        )),
    }
}

/// Parses and validates a document.
pub fn load_document(text: &str) -> Result<CoalgebraDocument, DocumentError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| DocumentError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let ring = Ring::from_str(&raw.ring).map_err(|e| field("ring", e.to_string()))?;
    if raw.cutoff < 2 {
        return Err(field(
            "cutoff",
            format!("cutoff must be at least 2, got {}", raw.cutoff),
        ));
    }
    let mut labels: HashMap<String, Label> = HashMap::new();
    labels.insert("1".into(), Label::Unit);
    let mut generators = Vec::new();
    for g in &raw.generators {
        if g.label == "1" || g.label.is_empty() {
            return Err(semantic(&g.label, "reserved label"));
        }
        if g.degree < 1 {
            return Err(semantic(
                &g.label,
                format!("degree {} is not positive", g.degree),
            ));
        }
        let l = Label::gen(&g.label, g.degree);
        if labels.insert(g.label.clone(), l.clone()).is_some() {
            return Err(semantic(&g.label, "declared twice"));
        }
        generators.push(l);
    }
    let lookup = |g: &str, name: &Value, positive: bool| -> Result<Label, DocumentError> {
        let s = name
            .as_str()
            .ok_or_else(|| semantic(g, format!("expected a label string, found {name}")))?;
        match labels.get(s) {
            Some(Label::Unit) if positive => Err(semantic(g, "unit not allowed here")),
            Some(l) => Ok(l.clone()),
            None => Err(semantic(g, format!("undeclared label `{s}`"))),
        }
    };
    let source = |g: &str| -> Result<Label, DocumentError> {
        match labels.get(g) {
            Some(Label::Unit) | None => Err(semantic(g, "undeclared generator")),
            Some(l) => Ok(l.clone()),
        }
    };

    let mut d = HashMap::new();
    for (g, terms) in &raw.d {
        let src = source(g)?;
        let mut e = Element::zero(ring, src.degree() - 1);
        for t in terms {
            if t.len() != 2 {
                return Err(semantic(g, "differential terms are [coeff, label]"));
            }
            let c = coefficient(&t[0], &format!("d.{g}"))?;
            let l = lookup(g, &t[1], true)?;
            if l.degree() != src.degree() - 1 {
                return Err(semantic(
                    g,
                    format!("differential term `{l}` has degree {}", l.degree()),
                ));
            }
            e.add_term(l, c);
        }
        d.insert(src, e);
    }

    let mut delta = HashMap::new();
    for (g, terms) in &raw.delta {
        let src = source(g)?;
        let mut e = Element::zero(ring, src.degree());
        for t in terms {
            if t.len() != 3 {
                return Err(semantic(g, "coproduct terms are [coeff, label, label]"));
            }
            let c = coefficient(&t[0], &format!("delta.{g}"))?;
            let a = lookup(g, &t[1], true)?;
            let b = lookup(g, &t[2], true)?;
            let l = Label::tensor2(a, b);
            if l.degree() != src.degree() {
                return Err(semantic(
                    g,
                    format!("coproduct term `{l}` has degree {}", l.degree()),
                ));
            }
            e.add_term(l, c);
        }
        delta.insert(src, e);
    }

    let mut psi = BTreeMap::new();
    for (k, table) in &raw.psi {
        let k: usize = k
            .parse()
            .map_err(|_| field("psi", format!("level `{k}` is not an integer")))?;
        if k < 2 {
            return Err(field(
                "psi",
                format!("level {k} is given by the coproduct; use levels ≥ 2"),
            ));
        }
        let mut m = HashMap::new();
        for (g, terms) in table {
            let src = source(g)?;
            let expected = src.degree() + k as i64 - 1;
            let mut e = Element::zero(ring, expected);
            for t in terms {
                if t.len() != k + 1 {
                    return Err(semantic(
                        g,
                        format!("psi level {k} terms are [coeff, pair × {k}]"),
                    ));
                }
                let c = coefficient(&t[0], &format!("psi.{k}.{g}"))?;
                let mut factors = Vec::with_capacity(k);
                for p in &t[1..] {
                    let pair = p
                        .as_array()
                        .filter(|a| a.len() == 2)
                        .ok_or_else(|| semantic(g, "pairs are [label, label]"))?;
                    let a = lookup(g, &pair[0], false)?;
                    let b = lookup(g, &pair[1], false)?;
                    if a.is_unit() && b.is_unit() {
                        return Err(semantic(g, "pair 1⊗1 has no positive part"));
                    }
                    factors.push(Label::tensor2(a, b));
                }
                let l = Label::Tensor(factors);
                if l.degree() != expected {
                    return Err(semantic(
                        g,
                        format!(
                            "psi level {k} must raise degree by {}: term `{l}` has degree {}",
                            k - 1,
                            l.degree()
                        ),
                    ));
                }
                e.add_term(l, c);
            }
            m.insert(src, e);
        }
        psi.insert(k, m);
    }

    let coalgebra = DgCoalgebra::new(raw.name.clone(), ring, raw.cutoff, generators, d, delta)
        .map_err(|e| field("generators", e.to_string()))?;
    Ok(CoalgebraDocument {
        name: raw.name,
        ring,
        cutoff: raw.cutoff,
        coalgebra,
        psi,
    })
}

/// Serializes a label name back to the document syntax.
fn label_name(l: &Label) -> String {
    match l {
        Label::Unit => "1".into(),
        Label::Gen(n, _) => n.to_string(),
        other => other.to_string(),
    }
}

/// Writes a document in the syntax accepted by [`load_document`]. Only
/// coalgebras on named generators can be written.
pub fn write_document(doc: &CoalgebraDocument) -> Value {
    use crate::coalgebra::Coalgebra;
    let c = &doc.coalgebra;
    let gens: Vec<Value> = c
        .generators()
        .iter()
        .map(|g| serde_json::json!({"label": label_name(g), "degree": g.degree()}))
        .collect();
    let mut d = serde_json::Map::new();
    let mut delta = serde_json::Map::new();
    for g in c.generators() {
        let dg = c.differential(g);
        if !dg.is_zero() {
            let terms: Vec<Value> = dg
                .iter()
                .map(|(l, k)| serde_json::json!([k.to_string(), label_name(l)]))
                .collect();
            d.insert(label_name(g), Value::Array(terms));
        }
        let dl = c.reduced_coproduct(g);
        if !dl.is_zero() {
            let terms: Vec<Value> = dl
                .iter()
                .map(|(l, k)| {
                    let f = l.factors();
                    serde_json::json!([k.to_string(), label_name(&f[0]), label_name(&f[1])])
                })
                .collect();
            delta.insert(label_name(g), Value::Array(terms));
        }
    }
    let mut psi = serde_json::Map::new();
    for (k, m) in &doc.psi {
        let mut table = serde_json::Map::new();
        let mut keys: Vec<&Label> = m.keys().collect();
        keys.sort();
        for g in keys {
            let terms: Vec<Value> = m[g]
                .iter()
                .map(|(l, c)| {
                    let mut row = vec![Value::String(c.to_string())];
                    for p in l.factors() {
                        let f = p.factors();
                        row.push(serde_json::json!([label_name(&f[0]), label_name(&f[1])]));
                    }
                    Value::Array(row)
                })
                .collect();
            if !terms.is_empty() {
                table.insert(label_name(g), Value::Array(terms));
            }
        }
        psi.insert(k.to_string(), Value::Object(table));
    }
    serde_json::json!({
        "name": doc.name,
        "ring": doc.ring.code(),
        "cutoff": doc.cutoff,
        "generators": gens,
        "d": d,
        "delta": delta,
        "psi": psi,
    })
}
