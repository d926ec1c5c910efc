//! Golden-output scenarios shared by the golden and acceptance tests.

use std::path::PathBuf;

/// Output file name and the `dcl` arguments that produce it.
pub const CASES: &[(&str, &[&str])] = &[
    ("path4.json", &["construct", "--family", "path", "--n", "4"]),
    ("path4.dot", &["construct", "--family", "path", "--n", "4", "--format", "dot"]),
    ("path4_power2.json", &["evolve", "--family", "path", "--n", "4", "--map", "power:2", "--snapshots", "0,1"]),
    (
        "path4_power2.dot",
        &["evolve", "--family", "path", "--n", "4", "--map", "power:2", "--snapshots", "0,1", "--format", "dot"],
    ),
    ("wheel5.json", &["construct", "--family", "wheel", "--n", "5"]),
    ("wheel5_power2.json", &["evolve", "--family", "wheel", "--n", "5", "--map", "power:2", "--snapshots", "0,1"]),
    (
        "wheel5_power2.dot",
        &["evolve", "--family", "wheel", "--n", "5", "--map", "power:2", "--snapshots", "0,1", "--format", "dot"],
    ),
    ("q3.json", &["construct", "--family", "hypercube", "--n", "3"]),
    ("q3_power2.json", &["evolve", "--family", "hypercube", "--n", "3", "--map", "power:2", "--snapshots", "0,1"]),
    (
        "q3_power2.dot",
        &["evolve", "--family", "hypercube", "--n", "3", "--map", "power:2", "--snapshots", "0,1", "--format", "dot"],
    ),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}
