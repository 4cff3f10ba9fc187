//! Black-box tests of the `pommaret` binary: exit codes, JSON output and
//! determinism.

use std::io::Write;
use std::process::Command;

fn write_fixture(name: &str, contents: &str) -> std::path::PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("pommaret-test-{}-{name}", std::process::id()));
    let mut file = std::fs::File::create(&path).unwrap();
    file.write_all(contents.as_bytes()).unwrap();
    path
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pommaret"))
}

const GORENSTEIN: &str = "ring: x, y, z\nideal:\nz^2 - x*y\ny*z\ny^2\nx*z\nx^2\n";

#[test]
fn invariants_json_success() {
    let path = write_fixture("gorenstein.ideal", GORENSTEIN);
    let out = binary()
        .args(["invariants", path.to_str().unwrap(), "--json"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["invariants"]["reg"], 3);
    assert_eq!(report["invariants"]["pd"], 2);
    assert_eq!(report["invariants"]["resolution_ranks"]["total"], serde_json::json!([6, 8, 3]));
    std::fs::remove_file(path).ok();
}

#[test]
fn parse_error_exits_2() {
    let path = write_fixture("broken.ideal", "ring: x, y\nideal:\nx^2 + y\n");
    let out = binary()
        .args(["basis", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("homogeneous"));
    std::fs::remove_file(path).ok();

    let out = binary().args(["basis", "/no/such/file.ideal"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn delta_singular_with_transform_off_exits_3() {
    let path = write_fixture("singular.ideal", "ring: x, y\nideal:\nx\n");
    let out = binary()
        .args(["basis", path.to_str().unwrap(), "--transform", "off"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // auto mode succeeds on the same input
    let out = binary().args(["basis", path.to_str().unwrap()]).output().unwrap();
    assert!(out.status.success());
    std::fs::remove_file(path).ok();
}

#[test]
fn gin_sample_is_deterministic_for_a_seed() {
    let path = write_fixture("gin.ideal", GORENSTEIN);
    let run = || {
        let out = binary()
            .args([
                "gin-sample",
                path.to_str().unwrap(),
                "--trials",
                "16",
                "--seed",
                "7",
                "--json",
            ])
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        let mut v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "same seed must give byte-identical reports");
    assert_eq!(
        first["verdicts"]["candidate"],
        serde_json::json!(["x*y", "x*z", "y^2", "y*z", "z^2", "x^3"])
    );
    assert_eq!(first["verdicts"]["unanimous"], serde_json::json!(true));
    std::fs::remove_file(path).ok();
}

#[test]
fn quasistable_breakdown_on_monomial_file() {
    let path = write_fixture("pair.ideal", "ring: x, y\nideal:\nx^2\ny^2\n");
    let out = binary()
        .args(["quasistable", path.to_str().unwrap(), "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdicts"]["verdict"], serde_json::json!(true));
    assert_eq!(v["verdicts"]["methods"].as_array().unwrap().len(), 5);
    std::fs::remove_file(path).ok();

    // polynomial input is refused by the monomial-only command
    let path = write_fixture("poly.ideal", GORENSTEIN);
    let out = binary()
        .args(["quasistable", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(path).ok();
}

#[test]
fn quotients_table_on_m2() {
    let path = write_fixture(
        "m2.ideal",
        "ring: x, y, z\nideal:\nz^2\ny*z\ny^2\nx*z\nx*y\nx^2\n",
    );
    let out = binary()
        .args(["quotients", path.to_str().unwrap(), "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        v["verdicts"]["ordering"],
        serde_json::json!(["z^2", "y*z", "y^2", "x*z", "x*y", "x^2"])
    );
    assert_eq!(v["verdicts"]["p_graph_edges"].as_array().unwrap().len(), 8);
    assert_eq!(v["verdicts"]["colon_identity_holds"], serde_json::json!(true));
    std::fs::remove_file(path).ok();
}
