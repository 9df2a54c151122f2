use std::process::{Command, Output};

use serde_json::Value;

fn mdg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mdg")).args(args).output().expect("mdg runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = mdg(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn value_examples() {
    assert_eq!(stdout(&mdg(&["value", "path", "4"])).trim(), "{1|0}, outcome: FirstPlayerWins");
    assert_eq!(stdout(&mdg(&["value", "--variant", "mf", "path", "5"])).trim(), "{0,∗|0} = ↑∗, outcome: FirstPlayerWins");
    for variant in ["classic", "fl", "mf"] {
        assert_eq!(stdout(&mdg(&["value", "--variant", variant, "path", "2"])).trim(), "{|} = 0, outcome: SecondPlayerWins");
    }
}

#[test]
fn text_and_json_agree() {
    for (variant, term) in [("classic", "path 4"), ("mf", "path 6"), ("fl", "cycle 7 + path 3"), ("classic", "wheel 4")] {
        let text = stdout(&mdg(&["value", "--variant", variant, term]));
        let v = json(&["value", "--variant", variant, term]);
        let outcome = v["outcome"].as_str().unwrap();
        assert!(text.trim().ends_with(&format!("outcome: {outcome}")), "{text}");
        assert!(text.starts_with(v["form"].as_str().unwrap()));
        assert_eq!(v["variant"], variant);
        assert_eq!(v["input"], term);
        let dag = &v["canonical"];
        assert_eq!(dag["root"].as_u64().unwrap() as usize + 1, dag["nodes"].as_array().unwrap().len());
    }
    let v = json(&["value", "--variant", "mf", "path", "5"]);
    assert_eq!(v["name"], serde_json::json!({"kind": "up_multiple", "value": {"count": 1, "plus_star": true}}));
}

#[test]
fn atomic_weight_command() {
    assert_eq!(json(&["aw", "path", "9"])["integer"], 2);
    assert_eq!(json(&["aw", "path", "3"])["integer"], 0);
    assert_eq!(json(&["aw", "path", "9"])["two_ahead"], "LeftWins");
    assert!(stdout(&mdg(&["aw", "path", "9"])).starts_with("2,"));
    let out = mdg(&["aw", "--variant", "classic", "path", "4"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn exit_codes() {
    assert_eq!(mdg(&["value", "torus", "3"]).status.code(), Some(2));
    assert_eq!(mdg(&["value", "cycle", "2"]).status.code(), Some(2));
    assert_eq!(mdg(&["value"]).status.code(), Some(2));
    assert_eq!(mdg(&["value", "--max-component", "4", "path", "5"]).status.code(), Some(3));
    assert_eq!(mdg(&["value", "--memo-cap", "2", "complete", "5"]).status.code(), Some(3));
    assert_eq!(mdg(&["verify", "--suite", "table-aw", "--max-n", "11"]).status.code(), Some(2));
}

#[test]
fn edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    std::fs::write(&path, "# path on four vertices\n4 3\n2 0\n0 3\n3 1\n").unwrap();
    let out = mdg(&["value", "--file", path.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "{1|0}, outcome: FirstPlayerWins");
    std::fs::write(&path, "4 3\n0 1\n").unwrap();
    assert_eq!(mdg(&["value", "--file", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn cache_round_trip_and_version_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("values.cache");
    let c = cache.to_str().unwrap();
    let fresh = stdout(&mdg(&["value", "--variant", "mf", "path", "11"]));
    let first = mdg(&["value", "--variant", "mf", "--cache", c, "path", "11"]);
    assert_eq!(stdout(&first), fresh);
    let bytes = std::fs::read(&cache).unwrap();
    assert_eq!(&bytes[..8], b"MDGCACHE");
    let second = mdg(&["value", "--variant", "mf", "--cache", c, "path", "11"]);
    assert_eq!(stdout(&second), fresh);
    assert!(second.stderr.is_empty());

    let mut stale = bytes.clone();
    stale[8..12].copy_from_slice(&99u32.to_le_bytes());
    std::fs::write(&cache, &stale).unwrap();
    let third = mdg(&["value", "--variant", "mf", "--cache", c, "path", "11"]);
    assert!(third.status.success());
    assert_eq!(stdout(&third), fresh);
    assert!(String::from_utf8_lossy(&third.stderr).contains("ignoring"));

    std::fs::write(&cache, b"garbage").unwrap();
    let fourth = mdg(&["value", "--variant", "mf", "--cache", c, "path", "11"]);
    assert_eq!(stdout(&fourth), fresh);
}

#[test]
fn verify_examples() {
    assert!(mdg(&["verify", "--suite", "table-aw", "--max-n", "12"]).status.success());
    assert!(mdg(&["verify", "--suite", "winners", "--variant", "fl", "--family", "path", "--to", "20"]).status.success());
    assert!(mdg(&["verify", "--suite", "bias", "--max-vertices", "6"]).status.success());
}

#[test]
fn verify_reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("reports.json");
    let args = ["verify", "--suite", "winners", "--suite", "signs", "--to", "9", "--exclude-family", "wheel", "--exclude-family", "complete"];
    let a = json(&args);
    let mut with_out = args.to_vec();
    with_out.extend(["--jobs", "2", "--out", out.to_str().unwrap()]);
    let b = json(&with_out);
    assert_eq!(a, b);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(written, a);
    let reports = a.as_array().unwrap();
    assert!(reports.iter().all(|r| r["family"] != "wheel" && r["family"] != "complete"));
    assert!(reports.iter().all(|r| r["pass"] == true));
    assert!(reports[0].get("elapsed").is_none());
}
