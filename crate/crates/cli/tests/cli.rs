use std::process::Command;

use dcl_cli::{run, CarmichaelDoc, Config, ConstructDoc, EvolveDoc, MapCheckDoc, MapInfo, PeriodDoc, ScanDoc};
use dcl_core::DclRun;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn dcl(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dcl"))
        .args(args)
        .env_remove("DCL_CONFIG")
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn exit_codes() {
    assert_eq!(dcl(&["construct", "--family", "path", "--n", "4"]).0, 0);
    assert_eq!(dcl(&["construct", "--family", "path", "--n", "0"]).0, 2);
    assert_eq!(dcl(&["construct", "--family", "moebius", "--n", "4"]).0, 2);
    assert_eq!(dcl(&["construct", "--family", "complete", "--n", "4", "--solve", "--budget", "4"]).0, 3);
    assert_eq!(
        dcl(&["construct", "--family", "complete", "--n", "9", "--solve", "--budget", "12", "--max-nodes", "3"]).0,
        4
    );
    assert_eq!(dcl(&["evolve", "--family", "path", "--n", "3", "--map", "power:3", "--t", "40"]).0, 4);
    assert_eq!(dcl(&["verify", "--family", "path", "--n", "4", "--map", "power:2", "--horizon", "8"]).0, 0);
    let (code, out, _) = dcl(&[
        "verify", "--family", "complete", "--n", "2", "--label-values", "3,8", "--map", "affine:2", "--horizon", "4",
    ]);
    assert_eq!(code, 5);
    let run: DclRun = serde_json::from_str(&out).unwrap();
    assert_eq!((run.violations[0].t, run.violations[0].gcd.to_string()), (2, "5".to_string()));
    let (code, _, err) = dcl(&["period", "--family", "path", "--n", "4", "--modulus", "6"]);
    assert_eq!(code, 6);
    assert!(err.contains("vertex 1"), "{err}");
    // (2^61-1)(2^89-1): both factors are far beyond the rho budget.
    let m89 = "618970019642690137449562111";
    let m61 = "2305843009213693951";
    let semiprime = (num_bigint::BigUint::parse_bytes(m89.as_bytes(), 10).unwrap()
        * num_bigint::BigUint::parse_bytes(m61.as_bytes(), 10).unwrap())
    .to_string();
    let (code, _, err) = dcl(&["carmichael", &semiprime]);
    assert_eq!(code, 7, "{err}");
    assert_eq!(dcl(&["--help"]).0, 0);
}

#[test]
fn config_file_from_environment() {
    let dir = std::env::temp_dir().join(format!("dcl-config-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("config.json");
    std::fs::write(&path, r#"{"format": "table", "modulus": 7}"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_dcl"))
        .args(["period", "--family", "path", "--n", "3"])
        .env("DCL_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("lambda_G\t6"), "{text}");

    std::fs::write(&path, r#"{"horizon": "soon"}"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_dcl"))
        .args(["maps"])
        .env("DCL_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn construct_output_feeds_other_commands() {
    let dir = std::env::temp_dir().join(format!("dcl-pipe-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let doc = dir.join("w5.json");
    let (_, out, _) = dcl(&["construct", "--family", "wheel", "--n", "5"]);
    std::fs::write(&doc, out).unwrap();
    let (code, out, _) = dcl(&["evolve", "--graph", doc.to_str().unwrap(), "--map", "power:2", "--t", "2"]);
    assert_eq!(code, 0);
    let evolved: EvolveDoc = serde_json::from_str(&out).unwrap();
    assert_eq!(evolved.frames[0].labels[&4].to_string(), "2401");

    let graph_only = dir.join("g.json");
    std::fs::write(&graph_only, r#"{"n": 3, "edges": [[0, 1], [2, 1]]}"#).unwrap();
    let labels = dir.join("f.json");
    std::fs::write(&labels, r#"{"labels": {"0": "4", "1": "9", "2": "25"}}"#).unwrap();
    let g = graph_only.to_str().unwrap();
    assert_eq!(dcl(&["verify", "--graph", g, "--labels", labels.to_str().unwrap(), "--map", "prime-index"]).0, 0);
    assert_eq!(dcl(&["verify", "--graph", g, "--map", "power:2"]).0, 2);
    assert_eq!(dcl(&["solve", "--graph", g, "--budget", "3"]).0, 0);
    std::fs::write(&graph_only, r#"{"n": 2, "edges": [[0, 0]]}"#).unwrap();
    assert_eq!(dcl(&["solve", "--graph", g, "--budget", "3"]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

fn round_trip<T: Serialize + DeserializeOwned>(args: &[&str]) {
    let out = run(std::iter::once("dcl").chain(args.iter().copied()), &Config::default());
    let parsed: T = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(again, out.stdout, "{args:?}");
}

#[test]
fn json_outputs_round_trip() {
    round_trip::<ConstructDoc>(&["construct", "--family", "hypercube", "--n", "3"]);
    round_trip::<ConstructDoc>(&["construct", "--family", "cycle", "--n", "6"]);
    round_trip::<ConstructDoc>(&["construct", "--family", "complete", "--n", "5", "--solve", "--budget", "9"]);
    round_trip::<ConstructDoc>(&["solve", "--family", "wheel", "--n", "6", "--budget", "7"]);
    round_trip::<EvolveDoc>(&["evolve", "--family", "path", "--n", "5", "--map", "power:3", "--t", "20", "--representation", "power-form"]);
    round_trip::<EvolveDoc>(&["evolve", "--family", "path", "--n", "5", "--map", "prime-index", "--snapshots", "0,4,30", "--representation", "prime-tower"]);
    round_trip::<EvolveDoc>(&["evolve", "--family", "path", "--n", "5", "--map", "modpow:2:15", "--t", "3", "--representation", "modular:15"]);
    round_trip::<DclRun>(&["verify", "--family", "cycle", "--n", "5", "--map", "affine:3", "--horizon", "20"]);
    round_trip::<DclRun>(&["verify", "--family", "path", "--n", "4", "--map", "modpow:3:7", "--horizon", "10", "--allow-modular-collisions", "--modulus", "7"]);
    round_trip::<DclRun>(&["verify", "--family", "path", "--n", "4", "--map", "shift:2", "--horizon", "6"]);
    round_trip::<PeriodDoc>(&["period", "--generating", "--modulus", "561", "--check", "80,40"]);
    round_trip::<CarmichaelDoc>(&["carmichael", "561"]);
    round_trip::<CarmichaelDoc>(&["carmichael", "1000"]);
    round_trip::<ScanDoc>(&["carmichael", "--scan-upto", "3000"]);
    round_trip::<Vec<MapInfo>>(&["maps"]);
    round_trip::<MapCheckDoc>(&["maps", "--map", "shift:1", "--bound", "10", "--samples", "5"]);
}
