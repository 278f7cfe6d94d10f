//! End-to-end tests of the binary: pipelines, exit codes, and byte
//! determinism of every emitted format.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn hypfan(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hypfan"));
    cmd.args(args);
    cmd.stdout(Stdio::piped()).stderr(Stdio::piped());
    match stdin {
        Some(text) => {
            cmd.stdin(Stdio::piped());
            let mut child = cmd.spawn().expect("spawn");
            child
                .stdin
                .as_mut()
                .unwrap()
                .write_all(text.as_bytes())
                .unwrap();
            child.wait_with_output().expect("wait")
        }
        None => {
            cmd.stdin(Stdio::null());
            cmd.output().expect("run")
        }
    }
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8")
}

fn tmp_path(name: &str) -> std::path::PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("hypfan-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn generate_flow_pipeline() {
    let bundle = hypfan(&["generate", "octahedral"], None);
    assert!(bundle.status.success());
    let flow = hypfan(&["flow", "--w", "2,1"], Some(&stdout(&bundle)));
    assert!(
        flow.status.success(),
        "{}",
        String::from_utf8_lossy(&flow.stderr)
    );
    let report: serde_json::Value = serde_json::from_str(&stdout(&flow)).unwrap();
    let verdicts = report["verdicts"].as_array().unwrap();
    assert!(!verdicts.is_empty());
    let counts = verdicts
        .iter()
        .find(|v| v["name"] == "index counts")
        .and_then(|v| v["details"]["counts"].as_array().cloned())
        .unwrap();
    assert_eq!(counts.len(), 3);
    assert_eq!(counts[0], counts[2]);
}

#[test]
fn rational_direction_components_parse() {
    let bundle = hypfan(&["generate", "octahedral"], None);
    let flow = hypfan(&["flow", "--w", "3/2,1"], Some(&stdout(&bundle)));
    assert!(flow.status.success());
}

#[test]
fn non_generic_direction_is_usage_error() {
    let bundle = hypfan(&["generate", "octahedral"], None);
    let flow = hypfan(&["flow", "--w", "1,0"], Some(&stdout(&bundle)));
    assert_eq!(flow.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&flow.stderr).contains("not generic"));
}

#[test]
fn s3_validates_clean() {
    let bundle = hypfan(&["generate", "s3"], None);
    let validate = hypfan(&["validate", "--jobs", "3"], Some(&stdout(&bundle)));
    assert!(validate.status.success());
}

#[test]
fn broken_fan_fails_validation_with_exit_1() {
    let bundle = hypfan(&["generate", "s3"], None);
    let mut doc: serde_json::Value = serde_json::from_str(&stdout(&bundle)).unwrap();
    doc["fan"]["vectors"]["0"] = serde_json::json!([1, 0, 0]);
    let validate = hypfan(&["validate"], Some(&doc.to_string()));
    assert_eq!(validate.status.code(), Some(1));
}

#[test]
fn search_finds_fan_and_rejects_digons() {
    let bundle = hypfan(&["generate", "octahedral"], None);
    let path = tmp_path("oct.json");
    std::fs::write(&path, stdout(&bundle)).unwrap();
    let search = hypfan(&["search", path.to_str().unwrap()], None);
    assert!(search.status.success());
    let fan: serde_json::Value = serde_json::from_str(&stdout(&search)).unwrap();
    assert_eq!(fan["dimension"], 2);
    assert_eq!(fan["vectors"].as_object().unwrap().len(), 3);
    std::fs::remove_file(&path).ok();

    // Two loops crossing twice: all faces are digons.
    let digon = serde_json::json!({
        "dimension": 2,
        "vertices": [[0, 1, 2, 3], [4, 5, 6, 7]],
        "edges": [[0, 4], [1, 7], [2, 6], [3, 5]],
    });
    let search = hypfan(&["search"], Some(&digon.to_string()));
    assert_eq!(search.status.code(), Some(1));
}

#[test]
fn replay_and_exports_are_byte_deterministic() {
    let script = serde_json::json!([
        {"op": "generate_octahedral"},
        {"op": "insert_spheres", "args": {"vertex": 0}},
        {"op": "augment", "args": {"k": 1}},
    ]);
    let path = tmp_path("script.json");
    std::fs::write(&path, script.to_string()).unwrap();
    let a = hypfan(&["replay", path.to_str().unwrap()], None);
    let b = hypfan(&["replay", path.to_str().unwrap()], None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    std::fs::remove_file(&path).ok();

    let bundle = stdout(&hypfan(&["generate", "octahedral"], None));
    let x = hypfan(&["export", "--color"], Some(&bundle));
    let y = hypfan(&["export", "--color"], Some(&bundle));
    assert!(x.status.success());
    assert_eq!(x.stdout, y.stdout);
    let dot = stdout(&x);
    assert_eq!(dot.matches("fillcolor=black").count(), 4);
    assert_eq!(dot.matches("fillcolor=white").count(), 4);

    let f = hypfan(&["export", "--w", "2,1"], Some(&bundle));
    assert!(f.status.success());
    assert_eq!(stdout(&f).matches(" -> ").count(), 12);
}

#[test]
fn move_round_trip_preserves_bundle() {
    let base = stdout(&hypfan(&["generate", "octahedral"], None));
    let inserted = stdout(&hypfan(&["move", "insert", "--vertex", "1"], Some(&base)));
    let restored = stdout(&hypfan(
        &[
            "move", "remove", "--vertex", "1", "--inner", "3", "--outer", "4",
        ],
        Some(&inserted),
    ));
    assert_eq!(base, restored);
}

#[test]
fn scan_logs_without_asserting() {
    let bundle = stdout(&hypfan(&["generate", "rp3"], None));
    let scan = hypfan(&["flow", "--scan", "3", "--seed", "1"], Some(&bundle));
    assert!(scan.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&scan)).unwrap();
    assert!(
        report["verdicts"][0]["details"]["findings"]
            .as_array()
            .unwrap()
            .len()
            == 3
    );
}

#[test]
fn jobs_do_not_change_output_bytes() {
    let bundle = stdout(&hypfan(&["generate", "s3"], None));
    let one = hypfan(&["validate", "--jobs", "1"], Some(&bundle));
    let four = hypfan(&["validate", "--jobs", "4"], Some(&bundle));
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn genus_generation_through_cli() {
    let bundle = hypfan(&["generate", "genus", "--g", "1", "--variant", "8"], None);
    assert!(bundle.status.success());
    let validate = hypfan(&["validate"], Some(&stdout(&bundle)));
    assert!(validate.status.success());
}
