use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use arith_cli::output::{table_from_json_lines, Record};
use arith_core::combinatorics::cycle_total;
use arith_core::{BigUint, GraphKind};
use serde_json::Value;

fn arith(args: &[&str], stdin: Option<&str>) -> Output {
    arith_env(args, stdin, &[])
}

fn arith_env(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_arith"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let out = arith(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json_lines(text: &str) -> Vec<Value> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn records(text: &str) -> Vec<Record> {
    json_lines(text).iter().map(|v| Record::from_json(v).unwrap()).collect()
}

fn csv_records(text: &str, kind: GraphKind) -> Vec<Record> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    rdr.records().map(|r| Record::from_csv(kind, &r.unwrap()).unwrap()).collect()
}

#[test]
fn count_cycles_five_sums_to_126() {
    let t = table_from_json_lines(&ok(&["count", "cycles", "5"], None)).unwrap();
    assert_eq!(t.total(), BigUint::from(126u32));
    let by_enum = table_from_json_lines(&ok(&["count", "cycles", "5", "--enumerate"], None)).unwrap();
    assert_eq!(t, by_enum);
}

#[test]
fn count_tables_agree_with_enumeration() {
    for by in ["r1", "dsum", "d-entry", "d-ones"] {
        for n in ["3", "7"] {
            let closed = ok(&["count", "paths", n, "--by", by, "--position", "2"], None);
            let counted = ok(&["count", "paths", n, "--by", by, "--position", "2", "--enumerate"], None);
            assert_eq!(closed, counted, "paths {n} by {by}");
        }
        let closed = ok(&["count", "cycles", "6", "--by", by], None);
        let counted = ok(&["count", "cycles", "6", "--by", by, "--enumerate"], None);
        assert_eq!(closed, counted, "cycles by {by}");
    }
}

#[test]
fn count_csv_schema() {
    let text = ok(&["count", "paths", "4", "--format", "csv"], None);
    assert_eq!(text, "n,key,count\n4,2,2\n4,3,2\n4,4,1\n");
}

#[test]
fn enumerate_paths_two() {
    let rows = json_lines(&ok(&["enumerate", "paths", "2"], None));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["d"], serde_json::json!([1, 1]));
    assert_eq!(rows[0]["r"], serde_json::json!([1, 1]));
}

#[test]
fn critical_group_of_three_cycle() {
    let text = ok(&["critical-group"], Some(r#"{"graph":{"kind":"cycle","n":3},"d":[2,2,2],"r":[1,1,1]}"#));
    assert_eq!(text, "[3]\nZ_3\n");
    let text = ok(&["critical-group"], Some(r#"{"graph":{"kind":"cycle","n":2},"d":[1,4]}"#));
    assert_eq!(text, "[]\ntrivial\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(arith(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(arith(&["count", "cycles"], None).status.code(), Some(2));
    assert_eq!(arith(&["count", "paths", "5", "--by", "nope"], None).status.code(), Some(2));
    assert_eq!(arith(&["transform"], Some("{}")).status.code(), Some(2));
    assert_eq!(arith(&["count", "paths", "5", "--by", "d-entry", "--position", "9"], None).status.code(), Some(2));
    assert_eq!(arith(&["verify", "--only", "nope"], None).status.code(), Some(2));
    assert_eq!(arith(&["--help"], None).status.code(), Some(0));
}

#[test]
fn bad_input_exits_one() {
    let out = arith(&["critical-group"], Some("{not json"));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid JSON"));

    let out = arith(&["transform", "--smooth", "2"], Some(r#"{"graph":{"kind":"path","n":3},"d":[2,2,2],"r":[1,2,1]}"#));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("row"));

    assert_eq!(arith(&["enumerate", "cycles", "1"], None).status.code(), Some(1));
}

#[test]
fn csv_and_json_agree() {
    for (family, kind, n) in [("paths", GraphKind::Path, "7"), ("cycles", GraphKind::Cycle, "5")] {
        let from_json = records(&ok(&["enumerate", family, n], None));
        let from_csv = csv_records(&ok(&["enumerate", family, n, "--format", "csv"], None), kind);
        assert_eq!(from_json, from_csv);
        for rec in &from_json {
            let s = rec.structure().unwrap();
            assert_eq!(Record::new(rec.index, &s, None).to_csv()[..5], rec.to_csv()[..5]);
        }
    }
}

#[test]
fn cycle_rows_carry_their_multiset() {
    let rows = records(&ok(&["enumerate", "cycles", "4"], None));
    assert_eq!(BigUint::from(rows.len()), cycle_total(4));
    let sets: BTreeSet<_> = rows.iter().map(|r| r.multiset.clone().unwrap()).collect();
    assert_eq!(sets.len(), rows.len());
    for rec in rows.iter().filter(|r| !r.multiset.as_ref().unwrap().is_empty()).take(5) {
        let input = format!(r#"{{"n":4,"multiset":{:?}}}"#, rec.multiset.as_ref().unwrap());
        let v: Value = serde_json::from_str(&ok(&["bijection", "multiset"], Some(&input))).unwrap();
        assert_eq!(v["r"], rec.to_json()["r"]);
    }
}

#[test]
fn r1_filter_matches_counts() {
    let rows = records(&ok(&["enumerate", "paths", "8", "--r1", "3"], None));
    let t = table_from_json_lines(&ok(&["count", "paths", "8"], None)).unwrap();
    assert_eq!(BigUint::from(rows.len()), t.get(3));
    assert!(rows.iter().all(|r| r.r1() == 3));
    assert!(rows.windows(2).all(|w| w[0].index < w[1].index));
}

#[test]
fn thread_count_does_not_change_output() {
    let one = arith_env(&["enumerate", "cycles", "6"], None, &[("ARITH_THREADS", "1")]);
    let four = arith_env(&["enumerate", "cycles", "6"], None, &[("ARITH_THREADS", "4")]);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.status.code(), Some(0));
}

#[test]
fn cache_round_trip_and_revalidation() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let fresh = ok(&["enumerate", "cycles", "5", "--format", "csv"], None);
    assert_eq!(ok(&["enumerate", "cycles", "5", "--format", "csv", "--cache", d], None), fresh);

    let file = dir.path().join("cycles-5.jsonl");
    let text = std::fs::read_to_string(&file).unwrap();
    let header: Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(header["schema_version"], 1);
    assert_eq!(header["count"], "126");
    assert_eq!(text.lines().count(), 127);

    // a hit is served from the file
    let marked = text.replacen("\"index\":1,", "\"index\":1000,", 1);
    std::fs::write(&file, &marked).unwrap();
    assert!(ok(&["enumerate", "cycles", "5", "--cache", d], None).contains("\"index\":1000"));

    // a wrong row count is a miss and the file is rebuilt
    let short: String = marked.lines().take(100).map(|l| format!("{l}\n")).collect();
    std::fs::write(&file, short).unwrap();
    assert_eq!(ok(&["enumerate", "cycles", "5", "--format", "csv", "--cache", d], None), fresh);
    assert_eq!(std::fs::read_to_string(&file).unwrap(), text);

    // so is an old schema
    std::fs::write(&file, text.replacen("\"schema_version\":1", "\"schema_version\":0", 1)).unwrap();
    assert_eq!(ok(&["enumerate", "cycles", "5", "--format", "csv", "--cache", d], None), fresh);
    assert_eq!(std::fs::read_to_string(&file).unwrap(), text);
}

#[test]
fn transforms_invert_each_other() {
    let s = r#"{"graph":{"kind":"path","n":5},"d":[2,3,1,2,3]}"#;
    let up = ok(&["transform", "--subdivide", "3"], Some(s));
    let back = ok(&["transform", "--smooth", "3"], Some(&up));
    assert_eq!(back.trim(), r#"{"d":[2,3,1,2,3],"graph":{"kind":"path","n":5},"r":[1,2,5,3,1]}"#);

    let c = r#"{"graph":{"kind":"cycle","n":4},"r":[1,2,3,1]}"#;
    let turned = ok(&["transform", "--rotate", "1"], Some(c));
    let again = ok(&["transform", "--rotate", "-1"], Some(&turned));
    let v: Value = serde_json::from_str(&again).unwrap();
    assert_eq!(v["r"], serde_json::json!([1, 2, 3, 1]));
}

#[test]
fn bijection_modes_round_trip() {
    let s = r#"{"d":[2,3,1,2,3],"graph":{"kind":"path","n":5},"r":[1,2,5,3,1]}"#;
    for mode in ["plan", "word", "triangulation"] {
        let encoded = ok(&["bijection", mode], Some(s));
        assert_eq!(ok(&["bijection", mode], Some(&encoded)).trim(), s, "{mode}");
    }
    assert_eq!(ok(&["bijection", "plan"], Some(s)).trim(), r#"{"b":[1,2,2],"m":2}"#);
    assert_eq!(ok(&["bijection", "frieze-rotate"], Some(r#"{"word":[1,1,3]}"#)).trim(), r#"{"word":[0,0,2]}"#);

    // rotating a structure six times on the hexagon is the identity
    let mut cur = s.to_string();
    for _ in 0..6 {
        cur = ok(&["bijection", "frieze-rotate"], Some(&cur));
    }
    assert_eq!(cur.trim(), s);

    let fig = ok(&["bijection", "multiset"], Some(r#"{"n":6,"multiset":[1,1,4,4]}"#));
    let v: Value = serde_json::from_str(&fig).unwrap();
    assert_eq!(v["r"], serde_json::json!([3, 2, 1, 3, 2, 1]));
    assert_eq!(ok(&["bijection", "multiset"], Some(&fig)).trim(), r#"{"multiset":[1,1,4,4],"n":6}"#);

    assert_eq!(arith(&["bijection", "word"], Some(r#"{"word":[2]}"#)).status.code(), Some(1));
}

#[test]
fn oracle_agrees_with_enumeration() {
    for (family, n) in [("paths", "7"), ("cycles", "5")] {
        let a: BTreeSet<_> = records(&ok(&["oracle", family, n], None)).into_iter().map(|r| r.r).collect();
        let b: BTreeSet<_> = records(&ok(&["enumerate", family, n], None)).into_iter().map(|r| r.r).collect();
        assert_eq!(a, b, "{family}");
    }
    assert_eq!(records(&ok(&["oracle", "star", "3"], None)).len(), 14);
    let general = ok(&["oracle", "general", "--r-max", "3"], Some(r#"{"kind":"cycle","n":3}"#));
    assert_eq!(records(&general).len(), 10);
    assert_eq!(arith(&["oracle", "general", "--r-max", "50", "--budget", "10"], Some(r#"{"kind":"cycle","n":3}"#)).status.code(), Some(1));
    assert_eq!(arith(&["oracle", "paths"], None).status.code(), Some(2));
}

#[test]
fn verify_small_and_filtered() {
    let rows = json_lines(&ok(&["verify", "--paths", "7", "--cycles", "5"], None));
    assert_eq!(rows.len(), 13);
    assert!(rows.iter().all(|r| r["status"] == "pass"));
    let again = ok(&["verify", "--paths", "7", "--cycles", "5"], None);
    assert_eq!(json_lines(&again), rows);

    let rows = json_lines(&ok(&["verify", "--only", "critical-group", "--paths", "6", "--cycles", "5"], None));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["check"], "critical-group");
}

#[test]
fn verify_names_a_corrupted_structure() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("rows.jsonl");
    let mut text = ok(&["enumerate", "paths", "5"], None);
    text.push_str("{\"graph\":{\"kind\":\"path\",\"n\":4},\"d\":[1,3,1,2],\"r\":[1,1,3,1]}\n");
    std::fs::write(&file, &text).unwrap();
    let out = arith(&["verify", "--only", "structures", "--structures", file.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
    let rows = json_lines(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["check"], "structures");
    assert_eq!(rows[0]["status"], "fail");
    let detail = rows[0]["detail"].as_str().unwrap();
    assert!(detail.starts_with("line 15:") && detail.contains("row"), "{detail}");
}
