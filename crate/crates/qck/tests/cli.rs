use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qck")).args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_a2(dir: &Path) -> String {
    let out = qck(&["seed", "--cartan", "A2", "--word", "1,2,1"]);
    assert_eq!(out.status.code(), Some(0));
    let path = dir.join("a2.json");
    std::fs::write(&path, &out.stdout).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn seed_output() {
    let out = qck(&["--json", "seed", "--cartan", "A2", "--word", "1,2,1"]);
    assert_eq!(out.status.code(), Some(0));
    let seed = stdout_json(&out);
    assert_eq!(seed["B"], serde_json::json!([[0], [-1], [1]]));
    assert_eq!(seed["L"][1][0], 1);
    assert_eq!(seed["L"][2][0], -1);
    assert_eq!(seed["exchangeable"], serde_json::json!([1]));
    assert_eq!(seed["frozen"], serde_json::json!([2, 3]));

    let alias = qck(&["--json", "seed", "--cartan-matrix", "2,-1;-1,2", "--word", "1,2,1"]);
    assert_eq!(stdout_json(&alias), seed);
}

#[test]
fn invalid_input_exits_2() {
    let out = qck(&["seed", "--cartan", "A2", "--word", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("word not reduced"));
    assert!(out.stdout.is_empty());
    assert_eq!(qck(&["seed", "--cartan", "G7", "--word", "1"]).status.code(), Some(2));
    assert_eq!(qck(&["seed", "--cartan-matrix", "2,-1;-2,2", "--word", "1"]).status.code(), Some(2));
    assert_eq!(qck(&["seed", "--cartan", "A2", "--word", "3"]).status.code(), Some(2));
}

#[test]
fn mutate_sequences() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_a2(dir.path());
    let original: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();

    let twice = stdout_json(&qck(&["mutate", "--seed", &path, "--sequence", "1,1"]));
    assert_eq!(twice["seed"], original);
    assert_eq!(twice["variables"][0], serde_json::json!([{"exp": [1, 0, 0], "coef": [[0, 1]]}]));

    let once = stdout_json(&qck(&["mutate", "--seed", &path, "--sequence", "1"]));
    assert_eq!(once["seed"]["D"][0], serde_json::json!({"phi": [0, 0], "alpha": [0, -1]}));
    assert_eq!(once["steps"][0]["m_k"], 0);
    assert_eq!(
        once["steps"][0]["exchanged_variable"],
        serde_json::json!([{"exp": [-1, 0, 1], "coef": [[0, 1]]}, {"exp": [-1, 1, 0], "coef": [[0, 1]]}])
    );

    let frozen = qck(&["mutate", "--seed", &path, "--sequence", "2"]);
    assert_eq!(frozen.status.code(), Some(2));
    let err = String::from_utf8_lossy(&frozen.stderr);
    assert!(err.contains("FrozenDirection") && err.contains("step 1"), "{err}");

    let laurent = stdout_json(&qck(&["laurent", "--seed", &path, "--sequence", "1", "--at", "1"]));
    assert_eq!(laurent["variable"], once["variables"][0]);
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_a2(dir.path());

    let ex = qck(&["verify", "exchange", "--seed", &path, "--at", "1"]);
    assert_eq!(ex.status.code(), Some(0));
    let report = stdout_json(&ex);
    assert_eq!(report["pass"], true);
    assert_eq!(report["details"]["z"]["values"], serde_json::json!([{"word": [2], "coef": [[0, 1]]}]));

    let comm = stdout_json(&qck(&["verify", "commutation", "--seed", &path, "--pair", "2,1"]));
    assert_eq!(comm["pass"], true);
    assert_eq!(comm["details"]["exponent"], 1);

    let ts = qck(&["verify", "tsystem", "--cartan", "A2", "--u", "1,2", "--v", "", "--index", "1"]);
    assert_eq!(ts.status.code(), Some(0), "{}", String::from_utf8_lossy(&ts.stderr));
    let bad_ts = qck(&["verify", "tsystem", "--cartan", "A2", "--u", "1", "--v", "", "--index", "1"]);
    assert_eq!(bad_ts.status.code(), Some(2));
    assert_eq!(qck(&["verify", "delta", "--cartan", "A2", "--x", "2,1", "--index", "2"]).status.code(), Some(0));

    assert_eq!(qck(&["verify", "nonsense", "--seed", &path]).status.code(), Some(2));

    // perturbing L breaks compatibility
    let mut seed: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    seed["L"][1][0] = Value::from(3);
    seed["L"][0][1] = Value::from(-3);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, seed.to_string()).unwrap();
    let out = qck(&["verify", "seed-conditions", "--seed", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stdout_json(&out)["pass"], false);
}
