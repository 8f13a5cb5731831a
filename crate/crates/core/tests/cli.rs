use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/inputs").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperbox")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn sizes(json: &str) -> (usize, usize, usize) {
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    let n = |k: &str| v.get(k).and_then(|x| x.as_array()).map_or(0, Vec::len);
    (n("vertices"), n("edges"), n("incidences"))
}

#[test]
fn laplacian_digon() {
    let p = data("p_half.json");
    let o = run(&["product", "--kind", "laplacian", &p, &p]);
    assert!(o.status.success());
    assert_eq!(sizes(&stdout(&o)), (2, 2, 4));
}

#[test]
fn laplacian_diagonal() {
    let o = run(&["matrix", "--which", "L", &data("chorded_square.json")]);
    assert!(o.status.success());
    let rows: Vec<Vec<String>> = stdout(&o).lines().skip(1).map(|l| l.split(',').skip(1).map(String::from).collect()).collect();
    let diag: Vec<&str> = (0..4).map(|j| rows[j][j].as_str()).collect();
    assert_eq!(diag, ["3", "2", "3", "2"]);
}

#[test]
fn census_confirms_counts() {
    let o = run(&["verify", "--suite", "census", "--kmax", "1", &data("parallel_incidences.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("6 vertices, 6 edges confirmed"));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    let text = std::fs::read_to_string(data("p_half.json")).unwrap().replace("\"i0\",\n      \"e0\"", "\"i0\",\n      \"e7\"");
    std::fs::write(&bad, text).unwrap();
    let o = run(&["dual", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("e7"));

    let cat = dir.path().join("cat.json");
    std::fs::write(&cat, r#"{"schema":"hyperbox/1","category":"simplicial","vertices":[],"edges":[]}"#).unwrap();
    assert_eq!(run(&["dual", cat.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["dual", "no_such_thing"]).status.code(), Some(2));
    assert_eq!(run(&["dual", &data("edge.json")]).status.code(), Some(2));
}

#[test]
fn out_file_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.json");
    let p1 = data("p1.json");
    assert!(run(&["dual", &p1, "--out", out.to_str().unwrap()]).status.success());
    let back = run(&["dual", out.to_str().unwrap()]);
    assert_eq!(stdout(&back), std::fs::read_to_string(&p1).unwrap());
}

#[test]
fn box_r_labels_are_tagged() {
    let p1 = data("p1.json");
    let o = stdout(&run(&["product", "--kind", "box-r", &p1, &p1]));
    assert!(o.contains("\"1:i0:v0\""));
    assert!(o.contains("\"2:v0:i1\""));
}

#[test]
fn homs_anchor_count_and_monic() {
    let g = data("chorded_square.json");
    let count = |extra: &[&str]| {
        let mut args = vec!["homs", "path_r(2)", g.as_str(), "--anchor", "vertex@v0=v1", "--count"];
        args.extend_from_slice(extra);
        stdout(&run(&args)).trim().parse::<u64>().unwrap()
    };
    assert_eq!(count(&[]), 6);
    assert_eq!(count(&["--monic", "incidence"]), 3);
    let listed: Vec<String> = serde_json::from_str(&stdout(&run(&["homs", "path_r(1)", &g]))).unwrap();
    assert_eq!(listed.len(), 10);
    assert_eq!(run(&["homs", "path_r(1)", &g, "--anchor", "zz=v1"]).status.code(), Some(2));
}

#[test]
fn exponentials_and_functors() {
    let o = run(&["exp", "--kind", "box-q", &data("arc.json"), &data("directed_digon.json")]);
    assert_eq!(sizes(&stdout(&o)), (2, 2, 0));
    let o = run(&["exp", "--kind", "box-v", &data("one_edge.json"), &data("p1.json")]);
    assert_eq!(sizes(&stdout(&o)), (2, 1, 2));
    let o = run(&["exp", "--kind", "box-m", &data("edge.json"), &data("digon.json")]);
    assert_eq!(sizes(&stdout(&o)).1, 16);
    assert_eq!(run(&["exp", "--kind", "box-m", &data("three_edge.json"), &data("digon.json")]).status.code(), Some(2));
    let o = run(&["functor", "--name", "UUpsilonDiamond", &data("p1.json")]);
    assert_eq!(sizes(&stdout(&o)), (3, 2, 0));
    let o = run(&["functor", "--name", "D", &data("edge.json")]);
    assert_eq!(sizes(&stdout(&o)), (2, 2, 0));
}

#[test]
fn matrix_powers_and_orientation() {
    let g = data("chorded_square.json");
    let plus = stdout(&run(&["matrix", "--which", "Hbar", "--power", "2", &g]));
    let lbar = stdout(&run(&["matrix", "--which", "Lbar", &g]));
    assert_eq!(plus, lbar);
    let minus = stdout(&run(&["matrix", "--which", "L", "--orientation", "all-minus", &g]));
    assert_eq!(minus, stdout(&run(&["matrix", "--which", "L", &g])));
    assert_eq!(run(&["matrix", "--which", "H", "--power", "2", &g]).status.code(), Some(2));
}

#[test]
fn verify_suites_exit_zero() {
    for suite in ["coherence", "adjunction", "functors"] {
        let o = run(&["verify", "--suite", suite, "--trials", "2", "--seed", "5"]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
    }
    let o = run(&["verify", "--suite", "weakwalk", "--kmax", "3", &data("chorded_square.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let o = run(&["verify", "--suite", "census", "--kmax", "1", "--json", "--out", json.to_str().unwrap(), &data("p1.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(v["suite"], "census");
    assert_eq!(v["cases"][0]["passed"], true);
}

#[test]
fn dot_export() {
    let o = stdout(&run(&["dot", &data("p1.json")]));
    assert!(o.starts_with("graph \"p1\" {"));
    assert!(o.contains("style=filled"));
}
