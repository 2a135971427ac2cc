use std::process::{Command, Output};

fn dkostka(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dkostka")).args(args).env("NO_COLOR", "1").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn kostka_examples() {
    for (lam, mu, want) in [("1.1", ".1^2", "t^3 + t"), ("2.1", ".21", "t^4 + t^2"), ("3.", "3.", "1")] {
        let o = dkostka(&["kostka", lam, mu]);
        assert_eq!(o.status.code(), Some(0));
        let first = stdout(&o).lines().next().unwrap().to_string();
        assert!(first.ends_with(&format!("= {want}")), "{first}");
    }
}

#[test]
fn kostka_usage_errors() {
    assert_eq!(dkostka(&["kostka", "1.1", "2"]).status.code(), Some(2));
    assert_eq!(dkostka(&["kostka", "1.1", "1."]).status.code(), Some(2));
    assert_eq!(dkostka(&["kostka", "x.1", ".2"]).status.code(), Some(2));
}

#[test]
fn tables_csv_n2() {
    let o = dkostka(&["tables", "--n", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let rows: Vec<&str> = s.lines().collect();
    assert_eq!(rows.len(), 6);
    let row = rows.iter().find(|r| r.starts_with("1.1,")).unwrap();
    assert!(row.ends_with(",t^3 + t"), "{row}");
}

#[test]
fn tables_n1_has_t() {
    let o = dkostka(&["tables", "--n", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["entries"]["1.|.1"], "t");
    assert_eq!(v["entries"]["1.|1."], "1");
    assert_eq!(v["order"].as_array().unwrap().len(), 2);
}

#[test]
fn tables_json_to_file_n5() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k5.json");
    let o = dkostka(&["tables", "--n", "5", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["order"].as_array().unwrap().len(), 36);
}

#[test]
fn tables_range() {
    assert_eq!(dkostka(&["tables", "--n", "0"]).status.code(), Some(2));
    assert_eq!(dkostka(&["tables", "--n", "7"]).status.code(), Some(2));
    assert_eq!(dkostka(&["tables", "--n", "2", "--format", "yaml"]).status.code(), Some(2));
}

#[test]
fn tables_latex() {
    let s = stdout(&dkostka(&["tables", "--n", "2", "--format", "latex"]));
    assert!(s.starts_with("\\begin{tabular}"));
    assert!(s.contains("$t^3 + t$"));
}

#[test]
fn verify_suites() {
    let o = dkostka(&["verify", "--n", "3", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
    let o = dkostka(&["verify", "--n", "2", "--suite", "golden"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS n=2 golden table"));
    assert_eq!(dkostka(&["verify", "--n", "0", "--suite", "all"]).status.code(), Some(0));
    assert_eq!(dkostka(&["verify", "--n", "2", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_order_check() {
    let o = dkostka(&["verify", "--n", "3", "--suite", "golden", "--order-check"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS n=3 second total order"));
}

#[test]
fn no_color_means_plain_text() {
    let o = dkostka(&["verify", "--n", "1", "--suite", "golden"]);
    assert!(!stdout(&o).contains('\x1b'));
}

#[test]
fn oracle_runs() {
    for args in
        [["oracle", "--n", "2", "--q", "2,3"], ["oracle", "--n", "1", "--q", "2"], ["oracle", "--n", "3", "--q", "2"]]
    {
        let o = dkostka(&args);
        assert_eq!(o.status.code(), Some(0));
        let s = stdout(&o);
        assert!(!s.contains("MISMATCH"));
        assert!(s.lines().last().unwrap().starts_with("PASS"));
    }
}

#[test]
fn oracle_caps() {
    assert_eq!(dkostka(&["oracle", "--n", "4", "--q", "2"]).status.code(), Some(2));
    let o = dkostka(&["oracle", "--n", "4", "--q", "2", "--allow-large", "--quiet"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    assert_eq!(dkostka(&["oracle", "--n", "5", "--q", "2", "--allow-large"]).status.code(), Some(2));
    assert_eq!(dkostka(&["oracle", "--n", "2", "--q", "4"]).status.code(), Some(2));
}

#[test]
fn parse_round_trip() {
    let s = stdout(&dkostka(&["parse", "21^2.3^2"]));
    assert!(s.contains("label  21^2.3^2"));
    assert!(s.contains("a      18"));
}
