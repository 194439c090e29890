use std::sync::Arc;

use chaincore::{homology, verify_differential, ChainComplex, Label, Ring};
use cobar::{cobar, cotor, extended_cobar, one_sided_cobar, GroundRing};
use formal::{formal_dl, mod2_predicted_generators, predicted_betti};
use hopfalg::{
    load_document, verify_coalgebra, Comodule, FreeAlgebra, HopfAsCoalgebra, Multiplication,
    RegularComodule, Side, TrivialComodule, Words,
};
use pathloop::{double_loop, identity_model, lift_theta, loop_fiber, path_loop, verify_cofreeness};
use serde_json::Value;
use shcoalg::{
    classify, induced_diagonal, load_shmap, milgram_q, verify_diagonal, verify_sh_family,
    AwCoalgebra, InducedHopf, Membership, ShFamily,
};

use crate::report::{Block, Check, Product, Report};

/// Failures split by exit code: 1 for input and validation errors, 2 for
/// mathematical invariant failures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Validation(String),
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Invariant(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "error: {m}"),
            CliError::Invariant(m) => write!(f, "invariant failure: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Validation(e.to_string())
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Overrides and toggles shared by every command.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub ring: Option<Ring>,
    pub cutoff: Option<i64>,
    /// A single weight block; otherwise inputs with degree-2 generators are
    /// reported per weight in `0..=max_weight`.
    pub weight: Option<i64>,
    pub max_weight: Option<i64>,
    pub verify_all: bool,
}

impl Options {
    fn check(&self) -> CliResult<()> {
        match self.cutoff {
            Some(c) if c < 2 => Err(invalid(format!("cutoff must be at least 2, got {c}"))),
            _ => Ok(()),
        }
    }
}

/// Loads a coalgebra document, applying the ring and cutoff overrides.
pub fn load_coalgebra(text: &str, opts: &Options) -> CliResult<AwCoalgebra> {
    opts.check()?;
    let doc = load_document(text).map_err(invalid)?;
    let doc = doc.with(
        opts.ring.unwrap_or(doc.ring),
        opts.cutoff.unwrap_or(doc.cutoff),
    );
    AwCoalgebra::from_document(&doc).map_err(invalid)
}

/// A family document with its endpoints.
pub struct LoadedMap {
    pub name: String,
    pub source: AwCoalgebra,
    pub target: AwCoalgebra,
    pub family: ShFamily,
}

/// Loads a family document, applying the ring and cutoff overrides to both
/// endpoints.
pub fn load_map(text: &str, opts: &Options) -> CliResult<LoadedMap> {
    opts.check()?;
    let mut v: Value = serde_json::from_str(text).map_err(|e| {
        invalid(format!(
            "parse error at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    for key in ["source", "target"] {
        if let Some(Value::Object(doc)) = v.get_mut(key) {
            if let Some(r) = opts.ring {
                doc.insert("ring".into(), Value::String(crate::report::ring_name(r)));
            }
            if let Some(c) = opts.cutoff {
                doc.insert("cutoff".into(), Value::from(c));
            }
        }
    }
    let m = load_shmap(&v.to_string()).map_err(invalid)?;
    let source = AwCoalgebra::from_document(&m.source).map_err(invalid)?;
    let target = AwCoalgebra::from_document(&m.target).map_err(invalid)?;
    Ok(LoadedMap {
        name: m.name,
        source,
        target,
        family: m.family,
    })
}

fn needs_weight(a: &AwCoalgebra) -> bool {
    a.coalgebra.generators().iter().any(|g| g.degree() == 2)
}

fn require_connected(a: &AwCoalgebra) -> CliResult<()> {
    match a.coalgebra.generators().iter().find(|g| g.degree() < 2) {
        Some(g) => Err(invalid(format!(
            "generator {g} has degree below 2; the input must be simply connected"
        ))),
        None => Ok(()),
    }
}

fn require_strict(a: &AwCoalgebra) -> CliResult<()> {
    match classify(a) {
        Membership::Strict => Ok(()),
        Membership::Incoherent(check) => Err(CliError::Invariant(format!(
            "Ψ of {} fails the coherence equations on {}",
            a.coalgebra.name,
            names(check.failing_generators())
        ))),
        Membership::Weak(check) => Err(CliError::Invariant(format!(
            "the induced diagonal of {} is not coassociative on {}",
            a.coalgebra.name,
            names(check.coassociativity.iter().map(|(l, _)| l).collect())
        ))),
    }
}

fn names(ls: Vec<&Label>) -> String {
    ls.iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn weights(opts: &Options, weighted: bool, cutoff: i64) -> Vec<Option<i64>> {
    match opts.weight {
        Some(w) => vec![Some(w)],
        None if weighted => (0..=opts.max_weight.unwrap_or(2 * cutoff))
            .map(Some)
            .collect(),
        None => vec![None],
    }
}

/// Homology blocks of a family of complexes, with a d² check across them.
fn homology_blocks<F>(
    report: &mut Report,
    ws: &[Option<i64>],
    name: &str,
    complex: F,
) -> CliResult<()>
where
    F: Fn(Option<i64>) -> chaincore::Result<ChainComplex>,
{
    let top = report.cutoff - 1;
    let mut failures = Vec::new();
    for &w in ws {
        let cx = complex(w).map_err(invalid)?;
        if let Some((l, r)) = verify_differential(&cx).counterexample {
            failures.push(format!("d²({l}) = {r}"));
        }
        let h = homology(&cx);
        report
            .blocks
            .push(Block::new(w, &cx, &h, top).map_err(invalid)?);
    }
    report.checks.push(Check::new(name, &failures));
    Ok(())
}

fn unit_only(b: &Block) -> bool {
    b.degrees.iter().all(|r| {
        r.torsion.is_empty() && r.betti == usize::from(r.degree == 0 && b.weight.unwrap_or(0) == 0)
    })
}

pub fn cobar_report(a: &AwCoalgebra, opts: &Options) -> CliResult<Report> {
    let c = cobar(a.coalgebra.clone()).map_err(invalid)?;
    let mut report = Report::new("cobar", &a.coalgebra.name, a.ring(), a.cutoff());
    homology_blocks(
        &mut report,
        &weights(opts, false, a.cutoff()),
        "d_squared",
        |w| c.complex(w),
    )?;
    if opts.verify_all {
        report.checks.extend(suites(a, opts)?);
    }
    Ok(report)
}

fn cotor_with<M, B>(
    report: &mut Report,
    h: &InducedHopf,
    module: &M,
    mult: &B,
    opts: &Options,
    weighted: bool,
) -> CliResult<()>
where
    M: Comodule,
    B: Multiplication,
{
    let ws = weights(opts, weighted, report.cutoff);
    if ws == [None] {
        let alg = cotor(h, module, mult, report.cutoff - 1)
            .map_err(|e| CliError::Invariant(e.to_string()))?;
        let tt = one_sided_cobar(module, HopfAsCoalgebra(h), None).map_err(invalid)?;
        let cx = tt.complex(None).map_err(invalid)?;
        report
            .blocks
            .push(Block::new(None, &cx, &alg.table, report.cutoff - 1).map_err(invalid)?);
        report.checks.push(Check::new("d_squared", &[]));
        for (&(p, i, q, j), coords) in &alg.products {
            report.products.push(Product {
                left: (p, i),
                right: (q, j),
                coordinates: coords.iter().map(|c| c.to_string()).collect(),
            });
        }
        return Ok(());
    }
    homology_blocks(report, &ws, "d_squared", |w| {
        one_sided_cobar(module, HopfAsCoalgebra(h), w)?.complex(w)
    })
}

/// `Cotor^H(B, R)` over the induced Hopf algebra `H = Ω̃(C, Ψ)`, with
/// `B = R` or `B = H`.
pub fn cotor_report(a: &AwCoalgebra, hopf_self: bool, opts: &Options) -> CliResult<Report> {
    require_connected(a)?;
    require_strict(a)?;
    let h = induced_diagonal(a);
    let ring = a.ring();
    let name = if hopf_self {
        "cotor(H, H)"
    } else {
        "cotor(R, R)"
    };
    let mut report = Report::new(name, &a.coalgebra.name, ring, a.cutoff());
    let weighted = needs_weight(a);
    if hopf_self {
        let module = RegularComodule {
            coalgebra: HopfAsCoalgebra(&h),
            side: Side::Right,
        };
        cotor_with(&mut report, &h, &module, &Words(ring), opts, weighted)?;
        report
            .checks
            .push(Check::new("acyclic", &acyclicity_failures(&report)));
    } else {
        let module = TrivialComodule {
            ring,
            cutoff: a.cutoff(),
            side: Side::Right,
        };
        cotor_with(&mut report, &h, &module, &GroundRing(ring), opts, weighted)?;
    }
    if opts.verify_all {
        report.checks.extend(suites(a, opts)?);
    }
    Ok(report)
}

fn acyclicity_failures(report: &Report) -> Vec<String> {
    report
        .blocks
        .iter()
        .filter(|b| !unit_only(b))
        .map(|b| format!("weight {:?}: betti {:?}", b.weight, b.betti()))
        .collect()
}

pub fn path_loop_report(a: &AwCoalgebra, opts: &Options) -> CliResult<Report> {
    require_connected(a)?;
    require_strict(a)?;
    let pl = path_loop(a).map_err(invalid)?;
    let mut report = Report::new("path-loop", &a.coalgebra.name, a.ring(), a.cutoff());
    homology_blocks(
        &mut report,
        &weights(opts, needs_weight(a), a.cutoff()),
        "d_squared",
        |w| pl.hopf.complex(w),
    )?;
    report
        .checks
        .push(Check::new("acyclic", &acyclicity_failures(&report)));
    if opts.verify_all {
        report.checks.extend(suites(a, opts)?);
    }
    Ok(report)
}

pub fn double_loop_report(a: &AwCoalgebra, opts: &Options) -> CliResult<Report> {
    require_connected(a)?;
    require_strict(a)?;
    let pl = path_loop(a).map_err(invalid)?;
    let mut report = Report::new("double-loop", &a.coalgebra.name, a.ring(), a.cutoff());
    homology_blocks(
        &mut report,
        &weights(opts, needs_weight(a), a.cutoff()),
        "d_squared",
        |w| Ok(double_loop(&pl, w)?.complex),
    )?;
    if opts.verify_all {
        report.checks.extend(suites(a, opts)?);
    }
    Ok(report)
}

pub fn fiber_report(map: &LoadedMap, opts: &Options) -> CliResult<Report> {
    require_connected(&map.source)?;
    require_connected(&map.target)?;
    require_strict(&map.target)?;
    let hf = loop_fiber(&map.source, &map.target, &map.family)
        .map_err(|e| CliError::Invariant(e.to_string()))?;
    let mut report = Report::new("fiber", &map.name, hf.ring(), hf.cutoff());
    let weighted = needs_weight(&map.source) || needs_weight(&map.target);
    homology_blocks(
        &mut report,
        &weights(opts, weighted, hf.cutoff()),
        "d_squared",
        |w| Ok(hf.model(w)?.complex),
    )?;
    Ok(report)
}

pub fn formal_report(a: &AwCoalgebra, opts: &Options) -> CliResult<Report> {
    let m = formal_dl(a).map_err(invalid)?;
    let mut report = Report::new("formal-dl", &a.coalgebra.name, a.ring(), a.cutoff());
    let ws = weights(opts, needs_weight(a), a.cutoff());
    homology_blocks(&mut report, &ws, "d_squared", |w| m.complex(w))?;
    let top = a.cutoff() - 1;
    if a.ring() == Ring::PrimeField(2) {
        let gens = mod2_predicted_generators(a, top).map_err(invalid)?;
        let mut pred = Vec::new();
        let mut failures = Vec::new();
        for b in &report.blocks {
            let betti = predicted_betti(&gens, top, b.weight).map_err(invalid)?;
            if betti != b.betti() {
                failures.push(format!(
                    "weight {:?}: predicted {betti:?}, found {:?}",
                    b.weight,
                    b.betti()
                ));
            }
            let degrees = betti
                .iter()
                .enumerate()
                .map(|(n, &x)| crate::report::DegreeRow {
                    degree: n as i64,
                    rank: 0,
                    betti: x,
                    torsion: Vec::new(),
                })
                .collect();
            pred.push(Block {
                weight: b.weight,
                degrees,
            });
        }
        report.prediction = Some(pred);
        report.checks.push(Check::new("mod2_prediction", &failures));
    }
    if opts.verify_all {
        let mut failures = Vec::new();
        for b in &report.blocks {
            let dl = double_loop(&m.path_loop, b.weight).map_err(invalid)?;
            if dl.ranks(top) != b.ranks() {
                failures.push(format!(
                    "weight {:?}: kernel ranks {:?}",
                    b.weight,
                    dl.ranks(top)
                ));
            }
        }
        report.checks.push(Check::new("rank_agreement", &failures));
    }
    Ok(report)
}

fn first<T: std::fmt::Display, U: std::fmt::Display>(v: &[(T, U)]) -> Vec<String> {
    v.iter().map(|(l, r)| format!("{l}: {r}")).collect()
}

/// The invariant suites, with later suites skipped when the structure is
/// not coherent.
pub fn suites(a: &AwCoalgebra, opts: &Options) -> CliResult<Vec<Check>> {
    let mut out = Vec::new();
    let c = verify_coalgebra(a.coalgebra.as_ref(), None).map_err(invalid)?;
    let mut f: Vec<String> = c
        .square
        .iter()
        .map(|(l, r)| format!("d²({l}) = {r}"))
        .collect();
    f.extend(
        c.co_leibniz
            .iter()
            .map(|(l, _)| format!("co-Leibniz at {l}")),
    );
    f.extend(
        c.coassociativity
            .iter()
            .map(|(l, _)| format!("coassociativity at {l}")),
    );
    out.push(Check::new("coalgebra", &f));
    let sh = verify_sh_family(&a.psi);
    let f: Vec<String> = sh
        .residues
        .iter()
        .map(|(g, levels)| {
            format!(
                "{g} at level {}",
                levels
                    .keys()
                    .map(|k| k.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    out.push(Check::new("sh_coherence", &f));
    if !sh.ok() || !c.ok() {
        return Ok(out);
    }
    let hc = verify_diagonal(&induced_diagonal(a));
    let mut f = first(&hc.chain_map);
    f.extend(
        hc.coassociativity
            .iter()
            .map(|(l, _)| format!("coassociativity at {l}")),
    );
    f.extend(hc.counit.iter().map(|(l, _)| format!("counit at {l}")));
    out.push(Check::new("induced_diagonal", &f));
    if !hc.ok() || a.coalgebra.generators().iter().any(|g| g.degree() < 2) {
        return Ok(out);
    }
    let pl = path_loop(a).map_err(invalid)?;
    let ws = weights(opts, needs_weight(a), a.cutoff());
    let top = a.cutoff() - 1;
    let low = a.cutoff() - 2;
    let (mut d2, mut acyc, mut kappa, mut cofree, mut lift, mut section, mut dl) = (
        Vec::new(),
        Vec::new(),
        Vec::new(),
        Vec::new(),
        Vec::new(),
        Vec::new(),
        Vec::new(),
    );
    let theta = lift_theta(&pl, &pl.base, identity_model(&pl))
        .map_err(|e| CliError::Invariant(e.to_string()))?;
    for &w in &ws {
        let tag = |s: String| match w {
            Some(w) => format!("weight {w}: {s}"),
            None => s,
        };
        let cx = pl.hopf.complex(w).map_err(invalid)?;
        if let Some((l, r)) = verify_differential(&cx).counterexample {
            d2.push(tag(format!("d²({l}) = {r}")));
        }
        let h = homology(&cx);
        let b = Block::new(w, &cx, &h, top).map_err(invalid)?;
        if !unit_only(&b) {
            acyc.push(tag(format!("betti {:?}", b.betti())));
        }
        let k = pl.verify_kappa(low, w).map_err(invalid)?;
        kappa.extend(
            first(&k.differential)
                .into_iter()
                .chain(first(&k.diagonal))
                .chain(first(&k.coaction))
                .map(tag),
        );
        let cf = verify_cofreeness(&pl, top, w).map_err(invalid)?;
        if !cf.ok() {
            cofree.push(tag(format!(
                "ranks {:?}, predicted {:?}",
                cf.path_loop, cf.predicted
            )));
        }
        let lc = theta.verify(low, w).map_err(invalid)?;
        lift.extend(
            first(&lc.chain_map)
                .into_iter()
                .chain(first(&lc.comodule))
                .map(tag),
        );
        let sc = theta.verify_section(low, w).map_err(invalid)?;
        if !sc.ok() {
            section.push(tag(format!("{sc:?}")));
        }
        let m = double_loop(&pl, w).map_err(invalid)?;
        if let Some((l, r)) = verify_differential(&m.complex).counterexample {
            dl.push(tag(format!("d²({l}) = {r}")));
        }
    }
    out.push(Check::new("path_loop_d_squared", &d2));
    out.push(Check::new("path_loop_acyclic", &acyc));
    out.push(Check::new("kappa", &kappa));
    out.push(Check::new("cofreeness", &cofree));
    out.push(Check::new("lift", &lift));
    out.push(Check::new("section_homotopy", &section));
    out.push(Check::new("double_loop_d_squared", &dl));
    if opts.verify_all {
        out.push(milgram_check(a)?);
    }
    Ok(out)
}

fn milgram_check(a: &AwCoalgebra) -> CliResult<Check> {
    let c = a.coalgebra.as_ref();
    let q = milgram_q(c, c).map_err(invalid)?;
    let top = q.cutoff() - 2;
    let mut f: Vec<String> = first(&q.chain_map_residues(top).map_err(invalid)?);
    let hs = homology(&q.source_complex().map_err(invalid)?)
        .betti_numbers(top)
        .map_err(invalid)?;
    let ht = homology(&q.target_complex().map_err(invalid)?)
        .betti_numbers(top)
        .map_err(invalid)?;
    if hs != ht {
        f.push(format!("betti {hs:?} against {ht:?}"));
    }
    Ok(Check::new("milgram", &f))
}

pub fn verify_report(a: &AwCoalgebra, opts: &Options) -> CliResult<Report> {
    let mut report = Report::new("verify", &a.coalgebra.name, a.ring(), a.cutoff());
    report.checks = suites(a, opts)?;
    Ok(report)
}

/// `Ω(ΩC, ψ)` as an extended cobar construction on the induced Hopf
/// algebra, for comparisons with the double-loop model.
pub fn iterated_cobar_complex(
    h: &InducedHopf,
    weight: Option<i64>,
) -> chaincore::Result<ChainComplex> {
    extended_cobar(HopfAsCoalgebra(h)).complex(weight)
}

/// The identity family of an input, for fiber sanity checks.
pub fn identity_map(a: &AwCoalgebra) -> LoadedMap {
    LoadedMap {
        name: format!("id-{}", a.coalgebra.name),
        source: a.clone(),
        target: a.clone(),
        family: ShFamily::identity(Arc::clone(&a.coalgebra)),
    }
}
