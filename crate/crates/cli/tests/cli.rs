//! End-to-end exercise of the binary: the exit-code contract, report
//! determinism across runs and thread counts, and the parse–emit round
//! trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn samples() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../samples")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordcheck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn sample(name: &str) -> String {
    samples().join(name).to_string_lossy().into_owned()
}

fn report_digest(stdout: &[u8]) -> String {
    let v: serde_json::Value = serde_json::from_slice(stdout).expect("json report");
    v["report_digest"].as_str().expect("digest").to_string()
}

#[test]
fn exit_code_matrix() {
    // 0: report with all requirements met.
    let ok = run(&[
        "check",
        "--input",
        &sample("two_chain_relation.json"),
        "--topology",
        &sample("discrete2.json"),
        "--require",
        "complete,transitive,continuous",
    ]);
    assert_eq!(ok.status.code(), Some(0), "{ok:?}");

    // 1: a required property fails.
    let fail = run(&[
        "check",
        "--input",
        &sample("identity_relation.json"),
        "--require",
        "complete",
    ]);
    assert_eq!(fail.status.code(), Some(1));

    // 1: infeasible representation.
    let infeasible = run(&["represent", "--input", &sample("contradictory_verdicts.json")]);
    assert_eq!(infeasible.status.code(), Some(1));

    // 2: malformed input (duplicate label).
    let dup = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(
        dup.path(),
        br#"{"kind":"relation","version":1,"elements":["a","a"],"pairs":[]}"#,
    )
    .unwrap();
    let malformed = run(&["check", "--input", dup.path().to_str().unwrap()]);
    assert_eq!(malformed.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&malformed.stderr);
    assert!(stderr.contains("duplicate"), "{stderr}");

    // 2: missing file.
    let missing = run(&["check", "--input", "/nonexistent.json"]);
    assert_eq!(missing.status.code(), Some(2));

    // 2: cap exceeded (weak-order search on too many points).
    let big = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(
        big.path(),
        br#"{"kind":"topology","version":1,
            "elements":["a","b","c","d","e","f","g"],
            "min_nbhd":{"a":["a"],"b":["b"],"c":["c"],"d":["d"],"e":["e"],"f":["f"],"g":["g"]}}"#,
    )
    .unwrap();
    let capped = run(&["orderable", "--input", big.path().to_str().unwrap(), "--mode", "weak"]);
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn orderable_gap_is_flagged_and_reporting_exits_zero() {
    let out = run(&[
        "orderable",
        "--input",
        &sample("sierpinski.json"),
        "--mode",
        "criterion,search",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["details"]["criterion"]["satisfied"], true);
    assert_eq!(v["details"]["search"]["found"], false);
    assert_eq!(
        v["details"]["gap"],
        "criterion-witness gap (non-Hausdorff finite model)"
    );

    let weak = run(&[
        "orderable",
        "--input",
        &sample("indiscrete2.json"),
        "--mode",
        "weak",
        "--json",
    ]);
    assert_eq!(weak.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&weak.stdout).unwrap();
    assert_eq!(v["details"]["weak"]["found"], false);
}

#[test]
fn group_and_sigma_relation_modes() {
    let out = run(&["group", "--input", &sample("z4_difference_set.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["details"]["additive"]["holds"], true);
    assert_eq!(v["details"]["strongly_additive"]["holds"], false);

    let out = run(&["sigma", "--input", &sample("measure_quarter.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["details"]["villegas_additive"]["holds"], true);
}

#[test]
fn represent_queries() {
    let out = run(&["represent", "--input", &sample("definetti_equalities.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["details"]["witness"]["weights"][0], "1/2");
    assert_eq!(v["details"]["witness"]["weights"][1], "1/2");

    let out = run(&["represent", "--input", &sample("total_indifference.json"), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["details"]["infeasible"]["kind"], "system-infeasible");
    assert_eq!(v["details"]["infeasible"]["reverified"], true);
}

#[test]
fn probe_reports_c2_violation_and_malformed_probe_exits_two() {
    let out = run(&["probe", "--input", &sample("vanishing_probe.json"), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let axioms = v["details"]["report"]["axioms"].as_array().unwrap();
    let c2 = axioms.iter().find(|a| a["axiom"] == "C2").unwrap();
    assert_eq!(c2["verdict"], "violated");

    let c4 = run(&["probe", "--input", &sample("c4_probe.json"), "--json"]);
    assert_eq!(c4.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&c4.stdout).unwrap();
    let axioms = v["details"]["report"]["axioms"].as_array().unwrap();
    let c4v = axioms.iter().find(|a| a["axiom"] == "C4").unwrap();
    assert_eq!(c4v["verdict"], "holds-on-probes");

    // Alteration touching atoms outside its window event: malformed.
    let bad = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(
        bad.path(),
        br#"{"kind":"probes","version":1,
            "structure":{"type":"events","atoms":3},
            "oracle":{"type":"weights","weights":["1/4","1/4","1/2"]},
            "probes":[{"type":"alteration","window":[[2],[]],"exhaustive":true,
                       "f":[3],"g":[1],
                       "alterations":[{"index":1,"f_alt":[1,3],"g_alt":[1]}]}]}"#,
    )
    .unwrap();
    let out = run(&["probe", "--input", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("changes F outside"), "{stderr}");
}

#[test]
fn reports_are_deterministic_across_runs_and_threads() {
    let once = run(&["group", "--moduli", "2,2", "--exhaustive", "--threads", "1", "--json"]);
    let twice = run(&["group", "--moduli", "2,2", "--exhaustive", "--threads", "1", "--json"]);
    let threaded = run(&["group", "--moduli", "2,2", "--exhaustive", "--threads", "4", "--json"]);
    assert_eq!(once.status.code(), Some(0));
    assert_eq!(report_digest(&once.stdout), report_digest(&twice.stdout));
    assert_eq!(report_digest(&once.stdout), report_digest(&threaded.stdout));

    let s1 = run(&[
        "sigma", "--atoms", "3", "--sample", "2000", "--seed", "7", "--threads", "1", "--json",
    ]);
    let s4 = run(&[
        "sigma", "--atoms", "3", "--sample", "2000", "--seed", "7", "--threads", "4", "--json",
    ]);
    assert_eq!(s1.status.code(), Some(0));
    assert_eq!(report_digest(&s1.stdout), report_digest(&s4.stdout));
}

#[test]
fn parse_emit_round_trip() {
    use ordcheck_cli::formats::{emit_instance, parse_instance};
    for file in std::fs::read_dir(samples()).unwrap() {
        let path = file.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        let bytes = std::fs::read(&path).unwrap();
        let doc = parse_instance(&bytes).unwrap_or_else(|e| panic!("{path:?}: {e}"));
        let emitted = emit_instance(&doc);
        let reparsed = parse_instance(&emitted).unwrap();
        assert_eq!(doc, reparsed, "{path:?}");
    }
}

#[test]
fn version_subcommand() {
    let out = run(&["version"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ordcheck "));
}
