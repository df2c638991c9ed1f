use std::process::{Command, Output};

fn liftcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liftcode"))
        .args(args)
        .output()
        .expect("run liftcode")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(liftcode(&["table", "--q", "6", "--m", "2"]).status.code(), Some(2));
    assert_eq!(liftcode(&["encode", "--q", "4", "--m", "2", "--k", "9"]).status.code(), Some(2));
    assert_eq!(liftcode(&["local-correct", "--input", "/nonexistent", "--index", "0", "--s", "3"]).status.code(), Some(2));
}

#[test]
fn experiment_is_deterministic_under_seed() {
    let args = ["experiment", "--q", "4", "--m", "2", "--k", "2", "--s", "3", "--delta", "0.1", "--trials", "500", "--seed", "11"];
    let a = liftcode(&args);
    let b = liftcode(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn encode_corrupt_correct_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let clean = dir.path().join("clean.txt");
    let noisy = dir.path().join("noisy.txt");
    let out = liftcode(&["--out", clean.to_str().unwrap(), "encode", "--q", "8", "--m", "2", "--k", "3", "--seed", "5"]);
    assert!(out.status.success());
    let out = liftcode(&["--out", noisy.to_str().unwrap(), "corrupt", "--input", clean.to_str().unwrap(), "--delta", "0.02", "--seed", "6"]);
    assert!(out.status.success());

    let clean_symbols: Vec<String> = std::fs::read_to_string(&clean).unwrap().lines().skip(1).map(String::from).collect();
    for index in [0usize, 17, 72] {
        let out = liftcode(&["local-correct", "--input", noisy.to_str().unwrap(), "--index", &index.to_string(), "--s", "8", "--seed", "1"]);
        assert!(out.status.success());
        let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(json["value"].as_str().unwrap(), clean_symbols[index], "index {index}");
    }
}

#[test]
fn selftest_passes() {
    let out = liftcode(&["selftest"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("11 of 11 suites passed"));
}
