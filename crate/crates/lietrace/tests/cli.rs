use std::process::{Command, Output};

use serde_json::Value;

fn lietrace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lietrace"))
        .args(args)
        .env_remove("LIETRACE_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = lietrace(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(lietrace(&["--help"]).status.code(), Some(0));
    assert_eq!(lietrace(&["--version"]).status.code(), Some(0));
    assert_eq!(lietrace(&["minimize", "--help"]).status.code(), Some(0));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| lietrace(args).status.code();
    assert_eq!(code(&["corners", "--type", "G2"]), Some(0));
    assert_eq!(code(&["corners", "--type", "Q3"]), Some(4));
    assert_eq!(code(&["corners", "--type", "B1"]), Some(4));
    assert_eq!(code(&["minimize", "--type", "G2", "--objective", "f1*f2"]), Some(4));
    assert_eq!(code(&["minimize", "--type", "A2", "--objective", "f1"]), Some(4));
    assert_eq!(code(&["minimize", "--type", "E6", "--objective", "f2"]), Some(2));
    assert_eq!(code(&["minimize", "--type", "C3", "--objective", "f2"]), Some(2));
    assert_eq!(code(&["branch-minimize", "--type", "E7"]), Some(2));
    assert_eq!(code(&["branch-minimize", "--type", "G2", "--pin", "3=+2"]), Some(4));
    assert_eq!(code(&["no-such-command"]), Some(4));
    assert_eq!(code(&["selfcheck"]), Some(0));
}

#[test]
fn errors_go_to_stderr() {
    let o = lietrace(&["minimize", "--type", "E6", "--objective", "f2"]);
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("--long"));
}

#[test]
fn corners_json_and_csv() {
    let v = json(&["corners", "--type", "G2"]);
    assert_eq!(v["schema"], "lietrace.output.v1");
    assert_eq!(v["command"], "corners");
    assert_eq!(v["meta"]["cache_hit"], false);
    assert!(v["meta"].get("elapsed_ms").is_none());
    let o = lietrace(&["corners", "--type", "G2", "--format", "csv"]);
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = rdr.headers().unwrap().clone();
    let f1 = headers.iter().position(|h| h == "f1").unwrap();
    let f2 = headers.iter().position(|h| h == "f2").unwrap();
    let mut pairs: Vec<(String, String)> = rdr
        .records()
        .map(|r| {
            let r = r.unwrap();
            (r[f1].to_string(), r[f2].to_string())
        })
        .collect();
    pairs.sort();
    let want: Vec<(String, String)> = [("-1", "-2"), ("-2", "5"), ("7", "14")]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    assert_eq!(pairs, want);
}

#[test]
fn timing_flag() {
    let v = json(&["corners", "--type", "A2", "--timing"]);
    assert!(v["meta"]["elapsed_ms"].is_u64());
    let o = lietrace(&["corners", "--type", "A2", "--timing"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("elapsed"));
}

#[test]
fn cache_hits_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["minimize", "--type", "G2", "--objective", "f2", "--cache-dir", d];
    let first = lietrace(&args);
    let second = lietrace(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let j = |extra: &[&str]| {
        let mut a = args.to_vec();
        a.extend(extra);
        json(&a)
    };
    let hit = j(&[]);
    assert_eq!(hit["meta"]["cache_hit"], true);
    let fresh = json(&["minimize", "--type", "G2", "--objective", "f2"]);
    assert_eq!(fresh["meta"]["cache_hit"], false);
    assert_eq!(hit["result"], fresh["result"]);
    assert!(std::fs::read_dir(dir.path()).unwrap().count() >= 1);
}

#[test]
fn minimize_g2() {
    let o = lietrace(&["minimize", "--type", "G2", "--objective", "f2"]);
    assert!(stdout(&o).starts_with("min = -2"));
    let o = lietrace(&["maximize", "--type", "G2", "--objective", "f2"]);
    assert!(stdout(&o).starts_with("max = 14"));
}

#[test]
fn poly_file_round_trip() {
    let v = json(&["branch-minimize", "--type", "G2"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.json");
    std::fs::write(&path, v["result"]["polynomial"].to_string()).unwrap();
    let w = json(&["branch-minimize", "--poly-file", path.to_str().unwrap()]);
    assert_eq!(w["result"]["polynomial"], v["result"]["polynomial"]);
    assert_eq!(w["result"]["value"], v["result"]["value"]);
    assert_eq!(v["result"]["value"]["rational"], "-2");
    std::fs::write(&path, "{\"schema\": \"other\"}").unwrap();
    let o = lietrace(&["branch-minimize", "--poly-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn pinned_branch() {
    let v = json(&["branch-minimize", "--type", "F4", "--pin", "4=-2"]);
    assert_eq!(v["result"]["pins"].as_array().unwrap().len(), 1);
}

#[test]
fn tables() {
    let v = json(&["table", "--family", "simple", "--max-rank", "6"]);
    let rows = v["result"]["rows"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["type"] == "E6" && r["s"] == 2 && r["max"] == 26));
    let o = lietrace(&["table", "--family", "short-root", "--format", "csv"]);
    assert!(stdout(&o).lines().count() > 4);
    let o = lietrace(&["su2", "--constant"]);
    assert!(stdout(&o).contains("0.217"));
}

#[test]
fn xfun_at_zero() {
    let v = json(&["xfun", "--type", "B2", "--s", "0,0", "--t", "0,0"]);
    assert_eq!(v["result"]["re"], "1.000000000000e0");
    assert_eq!(v["result"]["method"], "rho-product");
    let o = lietrace(&["xfun", "--type", "B2", "--s", "1", "--t", "0,0"]);
    assert_eq!(o.status.code(), Some(4));
}
