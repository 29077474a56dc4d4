use std::path::PathBuf;
use std::process::{Command, Output};

use hyperdet::cli::Report;

fn hyperdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperdet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_report(args: &[&str]) -> (i32, Report) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = hyperdet(&full);
    let text = String::from_utf8(out.stdout).unwrap();
    let report = Report::from_json(&text).unwrap_or_else(|e| panic!("{e}: {text:?}"));
    (out.status.code().unwrap(), report)
}

fn write_temp(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hyperdet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn det_identity() {
    let path = write_temp(
        "id.json",
        r#"{"order":2,"dim":2,"scalar":"rational","entries":["1","0","0","1"]}"#,
    );
    let (code, r) = json_report(&["det", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r.results["det"], "1");
}

#[test]
fn det_beta_hankel_all_algorithms() {
    // order 4, dim 2, entries 1/(|I|+1)
    let entries: Vec<String> = (0..16u32).map(|i| format!("\"1/{}\"", i.count_ones() + 1)).collect();
    let body = format!(
        r#"{{"order":4,"dim":2,"scalar":"rational","entries":[{}]}}"#,
        entries.join(",")
    );
    let path = write_temp("beta.json", &body);
    for algo in ["oracle", "wedge", "expand", "auto"] {
        let (code, r) = json_report(&["det", path.to_str().unwrap(), "--algorithm", algo]);
        assert_eq!(code, 0, "{algo}");
        assert_eq!(r.results["det"], "1/30", "{algo}");
    }
}

#[test]
fn det_poly_entries() {
    let path = write_temp(
        "poly.json",
        r#"{"order":2,"dim":1,"scalar":"poly","entries":[["-2/3","1"]]}"#,
    );
    let (code, r) = json_report(&["det", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r.results["det"], "y - 2/3");
}

#[test]
fn det_odd_order_wedge_fails() {
    let entries = ["\"1\""; 8].join(",");
    let path = write_temp(
        "odd.json",
        &format!(r#"{{"order":3,"dim":2,"scalar":"rational","entries":[{entries}]}}"#),
    );
    let out = hyperdet(&["det", path.to_str().unwrap(), "--algorithm", "wedge"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd order"));
    // the oracle is defined for odd order and returns zero
    let (code, r) = json_report(&["det", path.to_str().unwrap(), "--algorithm", "oracle"]);
    assert_eq!(code, 0);
    assert_eq!(r.results["det"], "0");
}

#[test]
fn input_errors() {
    let path = write_temp("bad.json", "{not json");
    assert_eq!(hyperdet(&["det", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(hyperdet(&["det", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(
        hyperdet(&["selberg", "--a", "1/0", "--b", "1", "--k", "1", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hyperdet(&["selberg", "--a", "-1", "--b", "1", "--k", "1", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hyperdet(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn budget_exit_code() {
    let entries = vec!["\"1/2\""; 4usize.pow(4)].join(",");
    let path = write_temp(
        "big.json",
        &format!(r#"{{"order":4,"dim":4,"scalar":"rational","entries":[{entries}]}}"#),
    );
    let out = hyperdet(&[
        "--max-products",
        "10",
        "det",
        path.to_str().unwrap(),
        "--algorithm",
        "oracle",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let out = hyperdet(&[
        "--max-state",
        "100",
        "det",
        path.to_str().unwrap(),
        "--algorithm",
        "wedge",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn selberg_with_checks() {
    let (code, r) = json_report(&[
        "selberg",
        "--a",
        "1",
        "--b",
        "1",
        "--k",
        "2",
        "--n",
        "2",
        "--check-tensor",
        "--check-numeric",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r.results["normalized"], "1/30");
    assert_eq!(r.results["integral"], "1/15");
    assert_eq!(r.checks.len(), 2);
    assert!(r.passed());
}

#[test]
fn selberg_rational_params() {
    let (code, r) = json_report(&[
        "selberg",
        "--a",
        "1/2",
        "--b",
        "3/2",
        "--k",
        "1",
        "--n",
        "2",
        "--check-tensor",
    ]);
    assert_eq!(code, 0);
    assert!(!r.results.contains_key("integral"));
    assert_eq!(r.results["normalized"], r.results["tensor_det"]);
}

#[test]
fn aomoto_polynomial_and_value() {
    let (code, r) = json_report(&["aomoto", "--a", "1", "--b", "1", "--k", "1", "--n", "1", "--at", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r.results["polynomial"], "y - 1/2");
    assert_eq!(r.results["value"], "1/2");
    let (code, r) = json_report(&[
        "aomoto",
        "--a",
        "2",
        "--b",
        "3",
        "--k",
        "2",
        "--n",
        "3",
        "--check-tensor",
        "--check-numeric",
    ]);
    assert_eq!(code, 0);
    // jacobi, tensor, four quadrature points
    assert_eq!(r.checks.len(), 6);
}

#[test]
fn dyson_report() {
    let (code, r) = json_report(&["dyson", "--n", "2", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r.results["constant_term"], "6");
    assert_eq!(r.results["top_coefficient"], "3");
    let (code, r) = json_report(&["dyson", "--n", "1", "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r.results["constant_term"], "1");
    assert_eq!(r.results["relation_with_sign_(-1)^k"], "-1");
}

#[test]
fn expand_table() {
    let (code, r) = json_report(&["expand", "--n", "2", "--k", "2"]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&r.results["table"]).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 3);
    assert_eq!(r.results["top_coefficient"], "3");

    let out = write_temp("table.json", "");
    let (code, r) = json_report(&["expand", "--n", "3", "--k", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r.results["terms"], "5");
    let rows: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 5);
}

#[test]
fn verify_quick_and_custom() {
    let (code, r) = json_report(&["--threads", "2", "verify", "--grid", "quick", "--random", "8"]);
    assert_eq!(code, 0);
    assert!(r.passed());
    assert_eq!(r.results["failed"], "0");
    let (code, _) = json_report(&["verify", "--grid", "a=1/2;b=3/2;k=1;n=1,2,3", "--random", "4"]);
    assert_eq!(code, 0);
    assert_eq!(hyperdet(&["verify", "--grid", "a=1;b=1"]).status.code(), Some(2));
}

#[test]
fn verify_default_grid_passes() {
    let (code, r) = json_report(&["verify"]);
    assert_eq!(code, 0, "{:?}", r.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
}

#[test]
fn human_and_json_renderings_agree() {
    let args = [
        "aomoto",
        "--a",
        "3",
        "--b",
        "2",
        "--k",
        "2",
        "--n",
        "2",
        "--at",
        "1/3",
        "--check-tensor",
    ];
    let (_, from_json) = json_report(&args);
    let human = String::from_utf8(hyperdet(&args).stdout).unwrap();
    let from_human = Report::from_human(&human).unwrap();
    assert_eq!(from_human.command, from_json.command);
    assert_eq!(from_human.params, from_json.params);
    assert_eq!(from_human.results, from_json.results);
    assert_eq!(from_human.checks, from_json.checks);
}
