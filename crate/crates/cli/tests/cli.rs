use std::process::{Command, Output};

use serde_json::Value;

fn zcentral(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zcentral"))
        .args(args)
        .output()
        .unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn check<'a>(r: &'a Value, id: &str) -> &'a Value {
    r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == id)
        .unwrap_or_else(|| panic!("no check {id}"))
}

#[test]
fn classical_tau4_includes_the_order_four_automorphism() {
    let out = zcentral(&["classical", "--tau", "4", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let psi = check(&r, "classical.psi_order");
    assert_eq!(psi["status"], "PASS");
    assert!(psi["paper_ref"].as_str().unwrap().contains("psi^4 = id"));
}

#[test]
fn verify_z_tau1_hat_certifies_every_generator() {
    let out = zcentral(&[
        "verify-z", "--tau", "1", "--n", "2", "--mode", "hat", "--method", "exact",
    ]);
    let r = report(&out);
    let central: Vec<&Value> = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["id"].as_str().unwrap().starts_with("z.central [Z,E"))
        .collect();
    assert_eq!(central.len(), 4);
    for c in central {
        assert_eq!(c["status"], "PASS");
        assert!(c["data"]["certificate"]["entries"].as_array().is_some());
    }
    // the hat bicharacter violates χ(α_i, δ̂) = 1 for τ = 1, so Ψ(Z) is not scalar
    assert_eq!(check(&r, "rep.psi_z_scalar")["status"], "FAIL");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_z_tau1_solved_passes_with_a_scalar() {
    let out = zcentral(&[
        "verify-z",
        "--tau",
        "1",
        "--n",
        "2",
        "--mode",
        "solved-symbolic",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let b = &check(&r, "rep.psi_z_scalar")["data"]["b"];
    assert!(b.as_str().is_some_and(|s| s != "0"), "{b}");
}

#[test]
fn dims_tau2_table_has_an_equality_column() {
    let out = zcentral(&["dims", "--tau", "2", "--n", "2", "--height", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let table = check(&r, "dims.pbw")["data"]["table"]
        .as_array()
        .unwrap()
        .clone();
    assert!(!table.is_empty());
    assert!(table.iter().all(|row| row["equal"] == true));
}

#[test]
fn same_config_and_seed_give_identical_bytes() {
    let args = [
        "verify-z", "--tau", "2", "--n", "2", "--mode", "hat", "--method", "random", "--seeds",
        "7,8", "--trials", "2",
    ];
    let a = zcentral(&args);
    let b = zcentral(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r = report(&a);
    assert_eq!(r["case"]["seed"], 7);
    let c = zcentral(&[
        "verify-z",
        "--tau",
        "1",
        "--n",
        "2",
        "--mode",
        "solved-symbolic",
    ]);
    let d = zcentral(&[
        "verify-z",
        "--tau",
        "1",
        "--n",
        "2",
        "--mode",
        "solved-symbolic",
    ]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn oversize_targets_are_skipped_with_a_reason() {
    let dir = std::env::temp_dir().join(format!("zcentral-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let conf = dir.join("small.conf");
    std::fs::write(
        &conf,
        "tau: int = 1\nn: int = 2\nmode: str = solved-symbolic\nexact_word_limit: int = 1\n",
    )
    .unwrap();
    let out = zcentral(&["verify-z", "--config", conf.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let c = check(&r, "z.central [Z,E0]");
    assert_eq!(c["status"], "SKIP");
    assert!(c["witness"].as_str().unwrap().contains("exact limit"));
}

#[test]
fn bad_configs_exit_with_an_error() {
    assert_eq!(
        zcentral(&["rep", "--tau", "3", "--n", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        zcentral(&["rep", "--tau", "2", "--n", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(zcentral(&["rep", "--mode", "fancy"]).status.code(), Some(2));
}

#[test]
fn radical_and_hopf_pass_for_small_cases() {
    for (tau, n) in [("1", "2"), ("4", "1")] {
        for cmd in ["radical", "hopf"] {
            let out = zcentral(&[cmd, "--tau", tau, "--n", n, "--mode", "hat"]);
            assert_eq!(out.status.code(), Some(0), "{cmd} {tau} {n}");
        }
    }
}

#[test]
fn discrepancy_ledger_is_listed() {
    let out = zcentral(&["report-discrepancies"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let ds = r["discrepancies"].as_array().unwrap();
    assert!(ds.iter().any(|d| d["id"] == "alpha0_tau1"));
    assert!(ds.iter().all(|d| d["adopted"].as_str().is_some()));
}
