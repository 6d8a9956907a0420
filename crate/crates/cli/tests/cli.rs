//! End-to-end checks of the command-line surface: exit codes, report
//! schema, and byte-for-byte determinism of written reports.

use std::fs;

use modbraid_cli::run;

fn tmp_path(name: &str) -> std::path::PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("modbraid-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn verify_suites_exit_zero() {
    assert_eq!(run(&["verify", "tables", "--n", "3"]), 0);
    assert_eq!(run(&["verify", "cocycle", "--n", "3"]), 0);
    assert_eq!(run(&["verify", "chainmap", "--n", "3"]), 0);
    assert_eq!(run(&["verify", "closed-forms", "--n", "3"]), 0);
    assert_eq!(run(&["verify", "split", "--n", "3", "--t", "2"]), 0);
    assert_eq!(run(&["verify", "nonsplit", "--n", "2"]), 0);
    assert_eq!(run(&["verify", "b4-generators", "--n", "4"]), 0);
}

#[test]
fn compute_commands_exit_zero() {
    assert_eq!(run(&["compute", "phi", "--cell", "e:1,2,3", "--n", "3"]), 0);
    assert_eq!(run(&["compute", "kappa", "--cell", "d:1,3,2,4", "--n", "4"]), 0);
    assert_eq!(
        run(&[
            "compute", "cocycle", "--p", "[2,1,3]", "--q", "[2,1,3]", "--n", "3"
        ]),
        0
    );
    assert_eq!(
        run(&["compute", "burau", "--word", "b1 b1 b1 b1", "--n", "2", "--mod", "4"]),
        0
    );
}

#[test]
fn usage_errors_exit_two() {
    // Unknown subcommand (clap error).
    assert_eq!(run(&["frobnicate"]), 2);
    // Bad cell literal.
    assert_eq!(run(&["compute", "phi", "--cell", "x:1,2", "--n", "3"]), 2);
    // Cell out of degree.
    assert_eq!(run(&["compute", "phi", "--cell", "e:1,2,5", "--n", "3"]), 2);
    // Odd scale for the splitting check.
    assert_eq!(run(&["verify", "split", "--n", "3", "--t", "3"]), 2);
    // Guard exceeded.
    assert_eq!(run(&["verify", "nonsplit", "--n", "7"]), 2);
    assert_eq!(run(&["enumerate", "zn", "--n", "9"]), 2);
    // Bad braid token.
    assert_eq!(run(&["compute", "burau", "--word", "q9", "--n", "3"]), 2);
    // Nothing to enumerate.
    assert_eq!(run(&["coset-enum", "--limit", "10"]), 2);
    // Degrees out of range.
    assert_eq!(run(&["verify", "tables", "--n", "0"]), 2);
    assert_eq!(run(&["verify", "nonsplit", "--n", "300"]), 2);
    assert_eq!(run(&["bound", "schreier", "--n", "20"]), 2);
    assert_eq!(run(&["coset-enum", "--builtin", "table2:3:0"]), 2);
}

#[test]
fn aborted_enumeration_exits_one() {
    assert_eq!(
        run(&["coset-enum", "--builtin", "artin2:3", "--limit", "100"]),
        1
    );
}

#[test]
fn coset_enum_from_file_and_builtin() {
    let path = tmp_path("pres.txt");
    fs::write(&path, "gens: a, b; rels: a^2, b^2, (a b)^3").unwrap();
    assert_eq!(
        run(&["coset-enum", "--pres", path.to_str().unwrap(), "--limit", "1000"]),
        0
    );
    fs::remove_file(&path).ok();
    assert_eq!(run(&["coset-enum", "--builtin", "pres11:2", "--limit", "1000"]), 0);
    assert_eq!(run(&["coset-enum", "--builtin", "table3:2", "--limit", "1000"]), 0);
    assert_eq!(run(&["coset-enum", "--builtin", "nope:2"]), 2);
}

#[test]
fn json_reports_are_deterministic() {
    let a = tmp_path("a.json");
    let b = tmp_path("b.json");
    assert_eq!(
        run(&["verify", "tables", "--n", "3", "--json", a.to_str().unwrap()]),
        0
    );
    assert_eq!(
        run(&["verify", "tables", "--n", "3", "--json", b.to_str().unwrap()]),
        0
    );
    let ba = fs::read(&a).unwrap();
    let bb = fs::read(&b).unwrap();
    assert_eq!(ba, bb, "same flags must give identical report bytes");
    let parsed: serde_json::Value = serde_json::from_slice(&ba).unwrap();
    assert_eq!(parsed["schema"], 1);
    assert_eq!(parsed["suite"], "verify-tables");
    assert_eq!(parsed["summary"]["failed"], 0);
    assert!(!parsed["cases"].as_array().unwrap().is_empty());
    fs::remove_file(&a).ok();
    fs::remove_file(&b).ok();
}

#[test]
fn env_var_overrides_default_limit() {
    // With a tiny limit from the environment, an infinite group aborts.
    std::env::set_var("MODBRAID_COSET_LIMIT", "50");
    let code = run(&["coset-enum", "--builtin", "artin2:3"]);
    std::env::remove_var("MODBRAID_COSET_LIMIT");
    assert_eq!(code, 1);
}
