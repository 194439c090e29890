use std::process::{Command, Output};

use chaincore::Ring;
use dloop_cli::{
    cobar_report, corpus, load_coalgebra, load_map, CliError, Format, Options, Report,
};
use proptest::prelude::*;
use serde_json::Value;

fn corpus_path(file: &str) -> String {
    format!("{}/corpus/{file}", env!("CARGO_MANIFEST_DIR"))
}

fn dloop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dloop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn betti(report: &Value, block: usize) -> Vec<u64> {
    report["blocks"][block]["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["betti"].as_u64().unwrap())
        .collect()
}

fn check(report: &Value, name: &str) -> bool {
    let checks = report["checks"].as_array().unwrap();
    let c = checks
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name}"));
    c["passed"].as_bool().unwrap()
}

#[test]
fn double_loop_of_the_three_sphere_over_f2() {
    let out = dloop(&[
        "double-loop",
        &corpus_path("sphere3.json"),
        "--ring",
        "F2",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["ring"], "F2");
    assert_eq!(betti(&r, 0), vec![1, 1, 1, 2, 2, 2, 3, 4]);
}

#[test]
fn json_reports_are_deterministic() {
    let args = [
        "path-loop",
        &corpus_path("n.json"),
        "--cutoff",
        "7",
        "--format",
        "json",
        "--verify-all",
    ];
    let a = dloop(&args);
    let b = dloop(&args);
    assert_eq!(
        a.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&a.stderr)
    );
    assert_eq!(a.stdout, b.stdout);
    assert!(json(&a).get("timing_ms").is_none());
    let timed = json(&dloop(&[
        "cobar",
        &corpus_path("sphere2.json"),
        "--format",
        "json",
        "--timing",
    ]));
    assert!(timed["timing_ms"].is_u64());
}

#[test]
fn out_flag_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("dloop-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let args = ["cobar", &corpus_path("sphere5.json"), "--format", "csv"];
    let direct = dloop(&args);
    let written = dloop(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert_eq!(written.status.code(), Some(0));
    assert!(written.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
    let text = String::from_utf8(direct.stdout).unwrap();
    assert!(text.starts_with("section,weight,degree,rank,betti,torsion\n"));
    assert!(text.contains("homology,,4,1,1,\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn weighted_inputs_report_one_block_per_weight() {
    let out = dloop(&[
        "path-loop",
        &corpus_path("sphere2.json"),
        "--max-weight",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let r = json(&out);
    let weights: Vec<u64> = r["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["weight"].as_u64().unwrap())
        .collect();
    assert_eq!(weights, vec![0, 1, 2, 3, 4]);
    assert!(check(&r, "acyclic"));
    let single = json(&dloop(&[
        "path-loop",
        &corpus_path("sphere2.json"),
        "--weight",
        "3",
        "--format",
        "json",
    ]));
    assert_eq!(single["blocks"].as_array().unwrap().len(), 1);
    assert_eq!(single["blocks"][0], r["blocks"][3]);
}

#[test]
fn cotor_with_hopf_coefficients_is_the_ground_ring() {
    let out = dloop(&[
        "cotor",
        &corpus_path("sphere3.json"),
        "--hopf",
        "self",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(betti(&r, 0), vec![1, 0, 0, 0, 0, 0, 0, 0]);
    assert!(check(&r, "acyclic"));
    let ground = json(&dloop(&[
        "cotor",
        &corpus_path("sphere3.json"),
        "--ring",
        "Q",
        "--format",
        "json",
    ]));
    assert_eq!(betti(&ground, 0), vec![1, 1, 0, 0, 0, 0, 0, 0]);
    assert!(!ground["products"].as_array().unwrap().is_empty());
}

#[test]
fn fibers_of_the_bundled_maps() {
    let id = json(&dloop(&[
        "fiber",
        "--map",
        &corpus_path("identity_s3.json"),
        "--format",
        "json",
    ]));
    assert_eq!(betti(&id, 0), vec![1, 0, 0, 0, 0, 0, 0, 0]);
    let also = json(&dloop(&[
        "fiber",
        "--identity",
        &corpus_path("sphere3.json"),
        "--format",
        "json",
    ]));
    assert_eq!(also["blocks"], id["blocks"]);
    let trivial = json(&dloop(&[
        "fiber",
        "--map",
        &corpus_path("trivial_s5_s3.json"),
        "--format",
        "json",
    ]));
    assert_eq!(betti(&trivial, 0)[..7], [1, 1, 0, 0, 1, 1, 0]);
}

#[test]
fn formal_model_carries_the_mod2_prediction() {
    let out = dloop(&[
        "formal-dl",
        &corpus_path("sphere2.json"),
        "--ring",
        "F2",
        "--max-weight",
        "8",
        "--verify-all",
        "--format",
        "json",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let r = json(&out);
    assert!(check(&r, "mod2_prediction"));
    assert!(check(&r, "rank_agreement"));
    assert_eq!(r["prediction"].as_array().unwrap().len(), 9);
    let rejected = dloop(&["formal-dl", &corpus_path("sphere3.json")]);
    assert_eq!(rejected.status.code(), Some(1));
}

#[test]
fn verify_passes_on_the_strict_corpus() {
    for file in ["sphere3.json", "sphere5.json", "n.json"] {
        let out = dloop(&[
            "verify",
            &corpus_path(file),
            "--cutoff",
            "7",
            "--verify-all",
            "--format",
            "json",
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{file}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let r = json(&out);
        for c in r["checks"].as_array().unwrap() {
            assert!(c["passed"].as_bool().unwrap(), "{file}: {c}");
        }
    }
}

#[test]
fn incoherent_and_weak_documents_fail_with_exit_code_2() {
    let out = dloop(&[
        "verify",
        &corpus_path("n_perturbed.json"),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert!(!check(&r, "sh_coherence"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("sh_coherence"));
    let out = dloop(&["verify", &corpus_path("weak.json"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!check(&json(&out), "induced_diagonal"));
    let out = dloop(&["double-loop", &corpus_path("weak.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not coassociative"));
}

#[test]
fn malformed_input_fails_with_exit_code_1() {
    let dir = std::env::temp_dir().join(format!("dloop-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let empty = dir.join("empty.json");
    std::fs::write(&empty, "").unwrap();
    let out = dloop(&["cobar", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert_eq!(
        dloop(&["cobar", dir.join("missing.json").to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        dloop(&["cobar", &corpus_path("sphere3.json"), "--ring", "F4"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        dloop(&["cobar", &corpus_path("sphere3.json"), "--cutoff", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        dloop(&["cobar", &corpus_path("sphere3.json"), "--format", "xml"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(dloop(&["fiber"]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn library_errors_carry_exit_codes() {
    let opts = Options::default();
    let e = load_coalgebra("{", &opts).err().unwrap();
    assert!(matches!(e, CliError::Validation(_)));
    assert_eq!(e.exit_code(), 1);
    assert!(load_map("[]", &opts).is_err());
    let m = load_map(
        corpus::TRIVIAL_S5_S3,
        &Options {
            ring: Some(Ring::PrimeField(3)),
            cutoff: Some(6),
            ..opts
        },
    )
    .unwrap();
    assert_eq!(
        (m.source.ring(), m.target.cutoff()),
        (Ring::PrimeField(3), 6)
    );
    assert_eq!(CliError::Invariant("x".into()).exit_code(), 2);
}

fn rendered(r: &Report) -> Value {
    serde_json::from_str(&r.render(Format::Json)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cobar_of_a_sphere_is_a_tensor_algebra(n in 2i64..7, cutoff in 2i64..9, p in prop::sample::select(vec![0u64, 2, 3, 5])) {
        let ring = if p == 0 { Ring::Integers } else { Ring::PrimeField(p) };
        let doc = format!(r#"{{"name": "S", "ring": "Z", "cutoff": 4, "generators": [{{"label": "x", "degree": {n}}}]}}"#);
        let opts = Options { ring: Some(ring), cutoff: Some(cutoff), ..Options::default() };
        let report = cobar_report(&load_coalgebra(&doc, &opts).unwrap(), &opts).unwrap();
        let expected: Vec<usize> = (0..cutoff).map(|d| usize::from(d % (n - 1) == 0)).collect();
        prop_assert_eq!(report.betti(), Some(expected));
        prop_assert!(report.passed());
        let v = rendered(&report);
        prop_assert_eq!(v["cutoff"].as_i64(), Some(cutoff));
        prop_assert_eq!(v["blocks"][0]["degrees"].as_array().unwrap().len(), cutoff as usize);
    }
}
