use std::io::Write;
use std::process::{Command, Output, Stdio};

use avoid_core::Transcript;
use serde_json::Value;

fn avoid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_avoid"))
        .args(args)
        .output()
        .unwrap()
}

fn avoid_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_avoid"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).lines().next().unwrap()).unwrap()
}

#[test]
fn check_auto_on_c4() {
    let g6 = stdout(&avoid(&["gen", "--family", "C4"]));
    let o = avoid(&["check-auto", "--graph6", g6.trim()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["in_auto"], true);
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
    let o = avoid(&["check-auto", "--family", "C5"]);
    assert_eq!(json(&o)["in_auto"], false);
}

#[test]
fn solve_symm_on_k4_prints_a_breaking_line() {
    let o = avoid(&["solve-symm", "--family", "K4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["outcome"], "NonMember");
    assert!(!v["line"].as_array().unwrap().is_empty());
    assert_eq!(
        json(&avoid(&["solve-symm", "--family", "C4"]))["outcome"],
        "Member"
    );
}

#[test]
fn verify_kn_p2_exhaustive() {
    let o = avoid(&[
        "verify",
        "--strategy",
        "kn-p2",
        "--n",
        "5",
        "--adversary",
        "exhaustive",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    for l in stdout(&o).lines() {
        let v: Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["passed"], true);
        assert!(v["games"].as_u64().unwrap() > 0);
    }
}

#[test]
fn verify_reports_violations_with_exit_3() {
    let o = avoid(&[
        "verify",
        "--strategy",
        "automorphism",
        "--family",
        "C4",
        "--forbidden",
        "P2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    // the K4 breaker does not break symmetry by round 1
    let o = avoid(&[
        "verify",
        "--strategy",
        "kn-breaker",
        "--n",
        "4",
        "--property",
        "broken-by",
        "--round",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&o);
    assert!(v["violation_count"].as_u64().unwrap() > 0);
    assert!(!v["violations"][0]["transcript"]["moves"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn verify_pruning_and_random_modes() {
    let o = avoid(&[
        "verify",
        "--strategy",
        "kn-breaker",
        "--n",
        "5",
        "--pruning",
        "orbit",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = avoid(&[
        "verify",
        "--strategy",
        "kn-p2",
        "--n",
        "8",
        "--adversary",
        "random",
        "--count",
        "200",
        "--seed",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["games"], 200);
}

#[test]
fn exit_codes_for_usage_and_budget() {
    let o = avoid(&["check-auto", "--graph6", "C~~~"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 2"));
    let o = avoid_stdin(
        &["gen", "--json", "-"],
        "{\"order\": 3,\n \"edges\": [[0,1],]}",
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(avoid(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        avoid(&["check-auto", "--family", "C4", "--graph6", "Cl"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        avoid(&["check-auto", "--family", "cartesian(K3)"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(avoid(&["--help"]).status.code(), Some(0));
    let o = avoid(&["solve-symm", "--family", "P7", "--budget-nodes", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let o = avoid(&[
        "solve-avoid",
        "--family",
        "K6",
        "--forbidden",
        "K3",
        "--budget-nodes",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_formats() {
    let o = avoid(&["gen", "--family", "cartesian(K3+e, P2)", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["order"], 12);
    assert_eq!(v["edges"].as_array().unwrap().len(), 20);
    let o = avoid_stdin(&["gen", "--json", "-"], &stdout(&o));
    let back = stdout(&o);
    assert_eq!(
        back.trim(),
        stdout(&avoid(&["gen", "--family", "cartesianK3eP2"])).trim()
    );
}

#[test]
fn solve_avoid_sim() {
    let o = avoid(&["solve-avoid", "--family", "K6", "--forbidden", "K3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["outcome"], "ALoses");
}

#[test]
fn reductions() {
    let o = avoid(&["reduce-r", "--family", "K2", "--format", "json"]);
    let v = json(&o);
    assert_eq!(
        (v["order"].as_u64(), v["edges"].as_array().unwrap().len()),
        (Some(9), 8)
    );
    let o = avoid(&["reduce-r", "--family", "C5", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["agrees"], true);
    let o = avoid(&["gi2par", "--family", "C4", "--family", "K2,2", "--solve"]);
    let v = json(&o);
    assert_eq!(v["isomorphic"], true);
    assert_eq!(v["isomorphism"].as_array().unwrap().len(), 4);
    let o = avoid(&["gi2par", "--family", "P3", "--family", "star3", "--solve"]);
    assert_eq!(json(&o)["isomorphic"], false);
    assert_eq!(avoid(&["gi2par", "--family", "P3"]).status.code(), Some(1));
}

#[test]
fn census_lines() {
    let o = avoid(&["classify-census", "--size", "3", "--connected"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    // K3, P3 and the claw
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().all(|v| v["in_symm"].is_boolean()));
}

#[test]
fn determinism() {
    let runs = [
        vec![
            "verify",
            "--strategy",
            "kn-p2",
            "--n",
            "7",
            "--adversary",
            "random",
            "--count",
            "300",
            "--seed",
            "11",
        ],
        vec![
            "verify",
            "--strategy",
            "product-breaker",
            "--adversary",
            "mirror-random",
            "--count",
            "20",
            "--seed",
            "5",
        ],
        vec!["solve-symm", "--family", "C9"],
        vec!["classify-census", "--size", "4", "--connected"],
    ];
    for args in runs {
        let a = avoid(&args);
        let b = avoid(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn play_then_replay() {
    let dir = std::env::temp_dir().join(format!("avoid-play-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("game.json");
    let moves = "0 1\n0 1\nnonsense\n2 3\n0 3\n1 2\n0 2\n";
    let o = avoid_stdin(
        &[
            "play",
            "--family",
            "K4",
            "--forbidden",
            "P2",
            "--engine",
            "kn-p2",
            "--out",
            path.to_str().unwrap(),
        ],
        moves,
    );
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("already coloured"));
    assert!(text.contains("you lose"));
    let t: Transcript = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(t.status, avoid_core::Status::ALost);
    let o = avoid(&["verify", "--replay", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["status"], "ALost");
    let mut forged = t.clone();
    forged.status = avoid_core::Status::BLost;
    std::fs::write(&path, serde_json::to_string(&forged).unwrap()).unwrap();
    assert_eq!(
        avoid(&["verify", "--replay", path.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );
    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(
        avoid(&["verify", "--replay", path.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}
