use std::fmt::Write as _;

use chaincore::{ChainComplex, HomologyTable, Result, Ring};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Format, String> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!(
                "unknown format `{other}` (expected table, csv or json)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub degree: i64,
    pub rank: usize,
    pub betti: usize,
    pub torsion: Vec<String>,
}

/// Homology of one weight block (all weights when `weight` is `None`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub weight: Option<i64>,
    pub degrees: Vec<DegreeRow>,
}

impl Block {
    pub fn new(
        weight: Option<i64>,
        complex: &ChainComplex,
        homology: &HomologyTable,
        top: i64,
    ) -> Result<Block> {
        let degrees = (0..=top)
            .map(|n| {
                Ok(DegreeRow {
                    degree: n,
                    rank: complex.rank(n),
                    betti: homology.betti(n)?,
                    torsion: homology.torsion(n)?.iter().map(|t| t.to_string()).collect(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(Block { weight, degrees })
    }

    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|r| r.betti).collect()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|r| r.rank).collect()
    }
}

/// `[z_{p,i}]·[z_{q,j}]` in coordinates of degree `p + q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Product {
    pub left: (i64, usize),
    pub right: (i64, usize),
    pub coordinates: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub residues: usize,
    pub counterexample: Option<String>,
}

impl Check {
    pub fn new(name: &str, failures: &[String]) -> Check {
        Check {
            name: name.to_string(),
            passed: failures.is_empty(),
            residues: failures.len(),
            counterexample: failures.first().cloned(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub construction: String,
    pub input: String,
    pub ring: String,
    pub cutoff: i64,
    pub blocks: Vec<Block>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub products: Vec<Product>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prediction: Option<Vec<Block>>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

pub fn ring_name(ring: Ring) -> String {
    match ring {
        Ring::Integers => "Z".into(),
        Ring::Rationals => "Q".into(),
        Ring::PrimeField(p) => format!("F{p}"),
    }
}

impl Report {
    pub fn new(construction: &str, input: &str, ring: Ring, cutoff: i64) -> Report {
        Report {
            construction: construction.into(),
            input: input.into(),
            ring: ring_name(ring),
            cutoff,
            blocks: Vec::new(),
            products: Vec::new(),
            prediction: None,
            checks: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The unweighted block, if the report has one.
    pub fn betti(&self) -> Option<Vec<usize>> {
        self.blocks
            .iter()
            .find(|b| b.weight.is_none())
            .map(Block::betti)
    }

    pub fn block(&self, weight: i64) -> Option<&Block> {
        self.blocks.iter().find(|b| b.weight == Some(weight))
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("reports serialize") + "\n",
            Format::Csv => self.csv(),
            Format::Table => self.table(),
        }
    }

    fn csv(&self) -> String {
        let mut out = String::from("section,weight,degree,rank,betti,torsion\n");
        let weight = |w: Option<i64>| w.map_or(String::new(), |w| w.to_string());
        for b in &self.blocks {
            for r in &b.degrees {
                let _ = writeln!(
                    out,
                    "homology,{},{},{},{},{}",
                    weight(b.weight),
                    r.degree,
                    r.rank,
                    r.betti,
                    r.torsion.join(" ")
                );
            }
        }
        for b in self.prediction.iter().flatten() {
            for r in &b.degrees {
                let _ = writeln!(
                    out,
                    "prediction,{},{},,{},",
                    weight(b.weight),
                    r.degree,
                    r.betti
                );
            }
        }
        out.push_str("check,name,passed,residues,counterexample\n");
        for c in &self.checks {
            let ce = c
                .counterexample
                .as_deref()
                .unwrap_or("")
                .replace('"', "\"\"");
            let _ = writeln!(out, "check,{},{},{},\"{ce}\"", c.name, c.passed, c.residues);
        }
        out
    }

    fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} of {} over {} (cutoff {})",
            self.construction, self.input, self.ring, self.cutoff
        );
        for b in &self.blocks {
            if let Some(w) = b.weight {
                let _ = writeln!(out, "weight {w}");
            }
            let _ = writeln!(out, "{:>6} {:>8} {:>6}  torsion", "degree", "rank", "betti");
            for r in &b.degrees {
                let tors = r
                    .torsion
                    .iter()
                    .map(|t| format!("Z/{t}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                let _ = writeln!(out, "{:>6} {:>8} {:>6}  {tors}", r.degree, r.rank, r.betti);
            }
        }
        if !self.products.is_empty() {
            let _ = writeln!(out, "products");
            for p in &self.products {
                let _ = writeln!(
                    out,
                    "  z[{},{}] * z[{},{}] = ({})",
                    p.left.0,
                    p.left.1,
                    p.right.0,
                    p.right.1,
                    p.coordinates.join(", ")
                );
            }
        }
        if let Some(pred) = &self.prediction {
            for b in pred {
                let w = b.weight.map_or(String::new(), |w| format!(" weight {w}"));
                let betti: Vec<String> = b.betti().iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "predicted betti{w}: {}", betti.join(" "));
            }
        }
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            let _ = write!(out, "[{status}] {} ({} residues)", c.name, c.residues);
            if let Some(ce) = &c.counterexample {
                let _ = write!(out, " first: {ce}");
            }
            out.push('\n');
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(out, "time {t} ms");
        }
        out
    }
}
