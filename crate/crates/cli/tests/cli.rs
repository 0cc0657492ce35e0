use std::process::{Command, Output};

fn steinhaus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_steinhaus"))
        .args(args)
        .env_remove("STEINHAUS_CAP")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn matrix_formats() {
    let o = steinhaus(&["matrix", "1100"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "01100\n10010\n10011\n01100\n00100\n");
    assert_eq!(stdout(&steinhaus(&["matrix", ""])), "0\n");
    assert_eq!(
        stdout(&steinhaus(&["matrix", "1100", "--format", "triangle"])),
        "1100\n010\n11\n0\n"
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&steinhaus(&[
        "matrix", "0xc:4", "--format", "json",
    ])))
    .unwrap();
    assert_eq!(v["sequence"], "1100");
    assert_eq!(v["degrees"], serde_json::json!([2, 2, 3, 2, 1]));
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(steinhaus(&["matrix", "abc"]).status.code(), Some(2));
    assert_eq!(steinhaus(&["search", "7..x"]).status.code(), Some(2));
    assert_eq!(steinhaus(&["search", "3..9"]).status.code(), Some(2));
    assert_eq!(steinhaus(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn check_reports_predicates() {
    let text = stdout(&steinhaus(&["check", "1100"]));
    assert!(text.contains("doubly_symmetric=false\n"));
    assert!(text.contains("multi_symmetric=false\n"));
    let text = stdout(&steinhaus(&["check", "00000"]));
    assert!(!text.contains("=false"), "{text}");
    let text = stdout(&steinhaus(&["check", "01110"]));
    assert!(text.contains("multi_symmetric=true\n"));
    assert!(text.contains("antidiagonal i=3: entry=1 forward=1 backward=1\n"));
}

#[test]
fn search_writes_one_line_per_size() {
    let o = steinhaus(&["search", "5..40", "--no-timing", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 36);
    for (k, v) in lines.iter().enumerate() {
        assert_eq!(v["n"], 5 + k);
        assert_eq!(v["elapsed_ms"], 0);
        assert_eq!(v["survivors"].as_array().unwrap().len(), 1);
    }
    assert!(String::from_utf8_lossy(&o.stderr).contains("nonzero_survivors=0"));
}

#[test]
fn search_capped_exits_3() {
    // With a zero cap any positive constrained dimension is skipped; a run
    // where every dimension is zero still succeeds.
    let o = steinhaus(&["search", "5..60", "--cap", "0", "--no-timing"]);
    let capped = stdout(&o).contains(r#""capped":true"#);
    assert_eq!(o.status.code(), Some(if capped { 3 } else { 0 }));
}

#[test]
fn search_resume_matches_fresh_run() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl");
    let out_s = out.to_str().unwrap();
    let fresh = stdout(&steinhaus(&["search", "5..30", "--no-timing"]));
    assert!(
        steinhaus(&["search", "5..18", "--no-timing", "--out", out_s])
            .status
            .success()
    );
    let o = steinhaus(&["search", "5..30", "--no-timing", "--out", out_s, "--resume"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("computed=12 resumed=14"));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), fresh);
    let cp = std::fs::read_to_string(dir.path().join("r.jsonl.checkpoint")).unwrap();
    assert_eq!(cp.trim(), r#"{"completed_through":30,"pending":[]}"#);
}

#[test]
fn conjecture_range_validation() {
    assert_eq!(
        steinhaus(&["verify-conjecture2", "2..10"]).status.code(),
        Some(2)
    );
    assert_eq!(
        steinhaus(&["verify-conjecture2", "4..11"]).status.code(),
        Some(2)
    );
    let o = steinhaus(&["verify-conjecture2", "4..52"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 25);
    assert!(text.lines().all(|l| l.ends_with(" verified")));
}

#[test]
fn bruteforce_and_count() {
    let text = stdout(&steinhaus(&["bruteforce", "10", "any"]));
    assert_eq!(text, "000000000 degree=0\n110110110 degree=6\ntotal=2\n");
    assert_eq!(
        stdout(&steinhaus(&["bruteforce", "2", "odd"])),
        "1 degree=1\ntotal=1\n"
    );
    let text = stdout(&steinhaus(&["count-ms", "1..12"]));
    for row in text.lines().skip(1) {
        let cols: Vec<&str> = row.split('\t').collect();
        assert_eq!(cols[1], cols[2], "{row}");
    }
    assert!(text.contains("6\t2\t2\n"));
}
