//! End-to-end tests of the binary: parsing, exit codes, machine formats
//! and round-trips of everything the tool emits.

use std::process::{Command, Output};

fn capcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_capcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn fk_reproduces_the_eight_curve_values_at_one_half() {
    let out = capcalc(&["fk", "--omega", "1;1/2", "--k", "1..8", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let values: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["value"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["1/2", "1", "3/2", "3/2", "2", "2", "5/2", "5/2"]);
    // Every emitted class and vector re-parses to an equal value.
    for r in v.as_array().unwrap() {
        let red: capcalc::lattice::CohomClass =
            r["reduced_omega"].as_str().unwrap().parse().unwrap();
        assert_eq!(red.to_string(), r["reduced_omega"].as_str().unwrap());
        for w in r["witnesses"].as_array().unwrap() {
            let c: capcalc::lattice::HomologyClass = w.as_str().unwrap().parse().unwrap();
            assert_eq!(c.to_string(), w.as_str().unwrap());
        }
    }
}

#[test]
fn fk_on_the_plane() {
    let out = capcalc(&["fk", "--omega", "1;", "--k", "6", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "k,value,witnesses\n6,3,3\n");
}

#[test]
fn exit_codes() {
    // Outside the cone: exit 2.
    let out = capcalc(&["fk", "--omega", "0;1", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // Malformed input: exit 1.
    let out = capcalc(&["fk", "--omega", "1;x", "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    // k = 0 fails range validation: exit 1.
    let out = capcalc(&["fk", "--omega", "1;1/2", "--k", "0..3"]);
    assert_eq!(out.status.code(), Some(1));
    // Uncertified under strict: exit 3.
    let out = capcalc(&[
        "tropical",
        "--n",
        "10",
        "--k",
        "2",
        "--budget",
        "10",
        "--certify-strict",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn tropical_one_blowup() {
    let out = capcalc(&["tropical", "--n", "1", "--k", "5", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["certified"], serde_json::Value::Bool(true));
    let terms: Vec<&str> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t.as_str().unwrap())
        .collect();
    assert_eq!(terms, ["2;0", "3;2", "5;5"]);

    let pretty = capcalc(&["tropical", "--n", "1", "--k", "5"]);
    assert!(stdout(&pretty).contains("2⊕(3⊙x⁻²)⊕(5⊙x⁻⁵)"));

    let out = capcalc(&["tropical", "--n", "1", "--k", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let terms: Vec<&str> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t.as_str().unwrap())
        .collect();
    assert_eq!(terms, ["1;0", "2;2"]);
}

#[test]
fn tropical_large_n_falls_back_to_budget() {
    let out = capcalc(&["tropical", "--n", "10", "--k", "1", "--budget", "40", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["certified"], serde_json::Value::Bool(false));
    let stderr = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(stderr.contains("not certified"), "missing warning: {stderr}");
}

#[test]
fn output_is_independent_of_the_worker_count() {
    let dir = std::env::temp_dir().join("capcalc-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("square.json");
    std::fs::write(
        &path,
        r#"{"vertices": [["0","0"],["1","0"],["1","1"],["0","1"]]}"#,
    )
    .unwrap();
    let args = [
        "polygon",
        "--file",
        path.to_str().unwrap(),
        "--k",
        "1..12",
        "--crosscheck",
        "--format",
        "json",
    ];
    let parallel = capcalc(&args);
    let serial = Command::new(env!("CARGO_BIN_EXE_capcalc"))
        .args(args)
        .env("CAPCALC_THREADS", "1")
        .output()
        .expect("binary runs");
    assert!(parallel.status.success() && serial.status.success());
    assert_eq!(parallel.stdout, serial.stdout);
}

#[test]
fn reduce_emits_class_and_trace() {
    let out = capcalc(&["reduce", "--omega", "8;5,3,3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["reduced"], "5;2,0,0");
    assert_eq!(v["boundary"], true);
    let trace = capcalc::cremona::ReductionTrace::from_json(&v["trace"]).unwrap();
    let input: capcalc::lattice::CohomClass = "8;5,3,3".parse().unwrap();
    assert_eq!(
        trace.replay_cohom(&input).unwrap().to_string(),
        "5;2,0,0"
    );
}

#[test]
fn polygon_crosscheck_from_file() {
    let dir = std::env::temp_dir().join("capcalc-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("simplex.json");
    std::fs::write(&path, r#"{"vertices": [["0","0"],["1","0"],["0","1"]]}"#).unwrap();
    let out = capcalc(&[
        "polygon",
        "--file",
        path.to_str().unwrap(),
        "--k",
        "1..6",
        "--crosscheck",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v.as_array().unwrap();
    let ech: Vec<&str> = rows.iter().map(|r| r["ech"].as_str().unwrap()).collect();
    assert_eq!(ech, ["1", "1", "2", "2", "2", "3"]);
    assert!(rows.iter().all(|r| r["equal"] == serde_json::Value::Bool(true)));

    // Malformed polygon JSON: exit 1.
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"vertices": [["0","0"],["1","0"]]}"#).unwrap();
    let out = capcalc(&["polygon", "--file", bad.to_str().unwrap(), "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn weights_command() {
    let out = capcalc(&["weights", "--weights", "8;5;3,3", "--k", "1", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["class"], "5;2,0,0");
    assert_eq!(v["boundary"], true);
    assert_eq!(v["capacities"][0]["value"], "3");
}

#[test]
fn plot_hits_every_breakpoint_exactly() {
    let out = capcalc(&["plot", "--n", "1", "--k", "1..8", "--samples", "64"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "x,f1,f2,f3,f4,f5,f6,f7,f8,breakpoint");
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    // The curve kinks all appear as marked rows.
    let marked: Vec<&str> = rows
        .iter()
        .filter(|r| r.last().unwrap() == "1")
        .map(|r| r[0].as_str())
        .collect();
    for bp in ["1/2", "3/5", "2/3", "5/7", "3/4", "4/5"] {
        assert!(marked.contains(&bp), "breakpoint {bp} missing");
    }
    // Spot-check a sampled row against the minimum expressions.
    let half = rows.iter().find(|r| r[0] == "1/2").unwrap();
    assert_eq!(
        &half[1..9],
        ["1/2", "1", "3/2", "3/2", "2", "2", "5/2", "5/2"]
    );
    // Byte-identical output on a rerun.
    let again = capcalc(&["plot", "--n", "1", "--k", "1..8", "--samples", "64"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn verify_runs_the_corpus() {
    let out = capcalc(&["verify", "--kmax", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("chopped T(7): ok"));
    assert!(text.trim_end().ends_with("verify: all polygons passed"));
}
