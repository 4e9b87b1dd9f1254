use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    root.join(name).to_string_lossy().into_owned()
}

fn sigma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = sigma(&all);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn analyze_e6() {
    let r = json(&["analyze", &data("e6.txt")]);
    assert_eq!(r["n"], 6);
    assert_eq!(r["is_tree"], true);
    assert_eq!(r["nondegenerate"], true);
    // a_5 = 1, a_6 = 2 in 1-based labels
    assert_eq!(r["a_values"][4], 1);
    assert_eq!(r["a_values"][5], 2);
    let odd = r["edge_types"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["edge"] == serde_json::json!([4, 5]))
        .unwrap();
    assert_eq!(odd["type"], "odd");
}

#[test]
fn analyze_ladder_and_star() {
    let r = json(&["analyze", &data("ladder8.txt")]);
    assert_eq!(r["nondegenerate"], true);
    assert_eq!(
        r["perfect_matching"],
        serde_json::json!([[0, 1], [2, 3], [4, 5], [6, 7]])
    );
    let r = json(&["analyze", &data("k13.txt")]);
    assert_eq!(r["perfect_matching"], Value::Null);
    assert_eq!(r["radical_dim"], 2);
    assert_eq!(r["ker_q_dim"], 2);
}

#[test]
fn orbit_tables() {
    let r = json(&["orbits", &data("e6.txt"), "--game", "lit"]);
    assert_eq!(r["orbit_count"], 3);
    let r = json(&["orbits", &data("p2.txt")]);
    let sizes: Vec<u64> = r["orbits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes, vec![1, 3]);
    let r = json(&["orbits", &data("e6.txt"), "--game", "reeder"]);
    assert_eq!(r["orbit_count"], 3);
}

#[test]
fn config_orbit_on_ladder() {
    let r = json(&["orbits", &data("ladder8.txt"), "--config", "01100110"]);
    assert_eq!(r["min_on"], 2);
    assert_eq!(r["q_class"], "QZeroClass");
}

#[test]
fn minlight_values() {
    for (file, k) in [
        ("p3.txt", 1),
        ("ladder8.txt", 2),
        ("e6_sub45.txt", 1),
        ("e6_sub01.txt", 2),
    ] {
        let r = json(&["minlight", &data(file)]);
        assert_eq!(r["min_light_number"], k, "{file}");
    }
}

#[test]
fn verify_reports() {
    let r = json(&["verify", "thm12", "--max-n", "10"]);
    assert_eq!(r["pass"], true);
    assert!(r["cases_checked"].as_u64().unwrap() > 0);
    assert_eq!(r["scope"]["check"], "thm12");
    let r = json(&["verify", "paper-example"]);
    assert_eq!(r["extra"]["Q(alpha)"], 0);
    assert_eq!(r["extra"]["Q(alpha_check_1)"], 1);
    assert_eq!(r["extra"]["Q(alpha_check_2)"], 1);
    let a = json(&["verify", "identities", "--trials", "200", "--seed", "7"]);
    let b = json(&[
        "verify",
        "identities",
        "--trials",
        "200",
        "--seed",
        "7",
        "--jobs",
        "3",
    ]);
    assert_eq!(a["cases_checked"], b["cases_checked"]);
    assert_eq!(a["failures"], b["failures"]);
}

#[test]
fn exit_codes() {
    let bad_len = sigma(&["orbits", &data("p2.txt"), "--config", "011"]);
    assert_eq!(bad_len.status.code(), Some(2));
    let missing = sigma(&["analyze", "/nonexistent/graph.txt"]);
    assert_eq!(missing.status.code(), Some(2));
    let capacity = sigma(&["minlight", &data("ladder8.txt"), "--capacity", "6"]);
    assert_eq!(capacity.status.code(), Some(3));
    let capacity = sigma(&["verify", "thm14", "--max-n", "12", "--capacity", "12"]);
    assert_eq!(capacity.status.code(), Some(3));
    let ok = sigma(&["verify", "paper-example"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn malformed_graph_file() {
    let dir = std::env::temp_dir().join(format!("sigma-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("loop.txt");
    std::fs::write(&path, "3\n0 1\n1 1\n").unwrap();
    let out = sigma(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    std::fs::remove_dir_all(&dir).unwrap();
}
