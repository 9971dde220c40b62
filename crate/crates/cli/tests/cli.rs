use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn suppos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_suppos"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = suppos(args);
    assert!(
        o.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let p: PathBuf = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

const EX_TEN: &str = "vars: 10\nx1*x2*x3*x4, x4*x6*x7, x1*x2*x4*x5*x6, x7*x8*x9, x7*x8*x10\n";

#[test]
fn support_poset_dot_of_ten_variable_example() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "ex.ideal", EX_TEN);
    let dot = ok(&["support-poset", &f, "--dot", "-"]);
    assert!(dot.starts_with("digraph support_poset {"));
    assert!(dot.contains("[label=\"1,2\"]"));
    assert_eq!(dot.matches("->").count(), 8);
}

#[test]
fn support_poset_text_is_stable() {
    let out = ok(&["support-poset", "vars: 5\nx1*x2, x2*x4, x3, x4*x5"]);
    assert_eq!(
        out,
        "# C_1 = {1,2}\n# C_2 = {2}\n# C_3 = {3}\n# C_4 = {4}\n# C_5 = {4,5}\n\
         elements: 1,2,3,4,5\ncovers: 2<1, 4<5\n"
    );
}

#[test]
fn support_poset_text_reparses_as_poset() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "ex.ideal", EX_TEN);
    let text = ok(&["support-poset", &f, "--ordered", "1,2"]);
    let p = write(&dir, "ex.poset", &text);
    let json: Value = serde_json::from_str(&ok(&["export", &p, "--format", "json"])).unwrap();
    assert_eq!(json["elements"].as_array().unwrap().len(), 10);
    assert_eq!(json["covers"].as_array().unwrap().len(), 9);
}

#[test]
fn support_poset_json() {
    let out = ok(&["support-poset", "vars: 3\nx1*x2, x2*x3", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["family"]["n"], 3);
    assert_eq!(v["is_forest"], true);
    assert_eq!(v["classes"].as_array().unwrap().len(), 3);
}

#[test]
fn formula_lines_three_three() {
    let out = ok(&["betti", "--method", "formula", "--family", "lines", "--n", "3", "--m", "3"]);
    assert_eq!(out, "  deg  0  1  2\ntotal  7  9  3\n");
}

#[test]
fn oracle_table_golden() {
    let out = ok(&["betti", "vars: 2\nx1, x2", "--invariants"]);
    assert_eq!(out, "  deg  0  1\n    1  2  .\n    2  .  1\ntotal  2  1\nprojdim: 1\nregularity: 0\n");
}

#[test]
fn oracle_and_formula_agree_for_diamonds() {
    let oracle: Value =
        serde_json::from_str(&ok(&["betti", "--family", "diamonds", "--m", "4", "--format", "json"])).unwrap();
    let formula: Value = serde_json::from_str(&ok(&[
        "betti", "--method", "formula", "--family", "diamonds", "--m", "4", "--format", "json",
    ]))
    .unwrap();
    let a: Vec<String> = oracle["totals"].as_array().unwrap().iter().map(|v| v.to_string()).collect();
    let b: Vec<String> = formula["totals"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    assert_eq!(a, b);
}

#[test]
fn diamonds_formula_at_two_uses_the_oracle() {
    let o = suppos(&["betti", "--method", "formula", "--family", "diamonds", "--m", "2"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("homology oracle"));
    assert_eq!(stdout(&o), "  deg  0  1  2\ntotal  4  5  2\n");
}

fn entries(v: &Value) -> Vec<(u64, String, u64)> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|e| (e["d"].as_u64().unwrap(), e["mu"].as_str().unwrap().to_string(), e["count"].as_u64().unwrap()))
        .collect()
}

fn lookup(table: &[(u64, String, u64)], d: u64, mu: &str) -> u64 {
    table.iter().find(|e| e.0 == d && e.1 == mu).map_or(0, |e| e.2)
}

#[test]
fn mvt_brackets_oracle() {
    let ideals = [
        "vars: 3\nx1^2, x1*x2, x2*x3, x3^2",
        "vars: 3\nx1*x2, x2*x3, x1*x3",
        "vars: 4\nx1^2*x2, x2^2*x3, x3^2*x4, x4^2*x1, x1*x3",
    ];
    for i in ideals {
        let oracle: Value = serde_json::from_str(&ok(&["betti", i, "--format", "json"])).unwrap();
        let oracle = entries(&oracle["table"]);
        for order in ["canonical", "reversed", "seeded:4"] {
            let mvt: Value =
                serde_json::from_str(&ok(&["betti", i, "--method", "mvt", "--order", order, "--format", "json"]))
                    .unwrap();
            let lower = entries(&mvt["lower"]);
            let upper = entries(&mvt["upper"]);
            for (d, mu, c) in &lower {
                assert!(*c <= lookup(&oracle, *d, mu), "{i} {order}");
            }
            for (d, mu, c) in &oracle {
                assert!(*c <= lookup(&upper, *d, mu), "{i} {order}");
            }
        }
    }
}

#[test]
fn mvt_tree_dot() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tree.dot");
    let out = ok(&[
        "betti", "--method", "mvt", "--family", "lines", "--n", "2", "--m", "2", "--order", "lines-standard", "--dot",
        path.to_str().unwrap(),
    ]);
    assert!(out.contains("exact: true"));
    let dot = std::fs::read_to_string(path).unwrap();
    assert!(dot.starts_with("digraph mvt {"));
    assert!(dot.contains("pos 1 dim 0"));
    assert!(dot.contains("fillcolor=lightgrey"));
}

#[test]
fn construct_outputs_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let forest = write(&dir, "f.poset", "elements: 1,2,3\ncovers: 1<2, 1<3\n");
    let cases: Vec<Vec<&str>> = vec![
        vec!["construct", "lines", "--n", "3", "--m", "2"],
        vec!["construct", "lines", "--n", "3", "--m", "2", "--squarefree"],
        vec!["construct", "diamonds", "--m", "3"],
        vec!["construct", "diamonds", "--m", "3", "--squarefree"],
        vec!["construct", "consecutive-kn", "--k", "2", "--n", "5"],
        vec!["construct", "consecutive-kn", "--k", "2", "--n", "5", "--copolar"],
        vec!["construct", "k-out-of-n", "--k", "2", "--n", "4"],
        vec!["construct", "sp", "1 * (2 + 3)"],
        vec!["construct", "leaf", &forest],
        vec!["construct", "sp", "--forest", &forest],
    ];
    for args in cases {
        let text = ok(&args);
        let again = ok(&["export", "--kind", "ideal", "--format", "text", &text]);
        assert_eq!(text, again, "{args:?}");
    }
    let dir2 = tempfile::tempdir().unwrap();
    let kn = write(&dir2, "kn.ideal", &ok(&["construct", "consecutive-kn", "--k", "2", "--n", "5"]));
    let small = ok(&["construct", "consecutive-kn", "--k", "2", "--n", "5", "--copolar"]);
    assert!(small.starts_with("vars: 3\n"));
    let small = write(&dir2, "small.ideal", &small);
    assert_eq!(ok(&["check", "copolar", &kn, &small]), "true\n");
    assert_eq!(ok(&["construct", "leaf", &forest]), ok(&["construct", "sp", "--forest", &forest]));
}

#[test]
fn series_parallel_example_is_a_forest() {
    let dir = tempfile::tempdir().unwrap();
    let s1 = ok(&["construct", "sp", "(1*(2*3+4))*(5*(6*7+8))"]);
    assert_eq!(s1, "vars: 8\nx1*x2*x3*x5*x6*x7, x1*x2*x3*x5*x8, x1*x4*x5*x6*x7, x1*x4*x5*x8\n");
    let f = write(&dir, "s1.ideal", &s1);
    assert_eq!(ok(&["check", "forest", "--ideal", &f]), "true\n");
}

#[test]
fn checks() {
    assert_eq!(ok(&["check", "taylor-minimal", "vars: 3\nx1, x2, x3"]), "true\n");
    assert_eq!(ok(&["check", "taylor-minimal", "vars: 3\nx1*x2, x2*x3, x1*x3"]), "false\n");
    assert_eq!(
        ok(&["check", "copolar", "vars: 2\nx1^2, x1*x2, x2^2", "vars: 4\nx1*x2, x3*x4, x1*x3"]),
        "true\n"
    );
    assert_eq!(ok(&["check", "realizable", "--family", r#"{"n":3,"C":[[1],[1,2],[1,2,3]]}"#]), "false\n");
    assert!(ok(&["check", "realizable", "--family", r#"{"n":2,"C":[[1],[2]]}"#]).starts_with("true\n"));
    let fam = r#"{"n":5,"C":[[1,2],[2],[3],[4],[4,5]]}"#;
    assert_eq!(
        ok(&["check", "sigma", "--family", fam, "--sigma", "[[1],[2,3],[3,4],[5]]"]),
        "true\nvars: 5\nx1*x2, x2*x3, x3*x4, x4*x5\n"
    );
    assert_eq!(ok(&["check", "forest", "--poset", "elements: a,b,c\ncovers: a<c, b<c"]), "false\n");
}

#[test]
fn randomized_check_is_seeded() {
    let a = ok(&["check", "forest", "--random-sp", "50", "--seed", "7"]);
    assert_eq!(a, "true\n");
    assert_eq!(a, ok(&["check", "forest", "--random-sp", "50", "--seed", "7"]));
    let o = suppos(&["check", "forest", "--random-sp", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn polarize_and_depolarize() {
    let p = ok(&["polarize", "vars: 2\nx1^2, x1*x2"]);
    assert_eq!(p, "vars: 3\nx1*x2, x1*x3\n");
    let d = ok(&["depolarize", "vars: 4\nx1*x2, x3*x4, x1*x3", "--chains", "1,2|3,4"]);
    assert_eq!(d, "vars: 2\nx1^2, x1*x2, x2^2\n");
}

#[test]
fn exit_codes_and_error_lines() {
    let o = suppos(&["construct", "diamonds", "--m", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error[OUT_OF_RANGE]:"));

    let o = suppos(&["support-poset", "/nonexistent/file"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error[IO]:"));

    let o = suppos(&["depolarize", "vars: 2\nx1^2", "--chains", "1|2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error[NOT_SQUAREFREE]:"));

    assert_eq!(suppos(&["betti", "--bogus"]).status.code(), Some(2));
    assert_eq!(suppos(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(suppos(&["betti", "--method", "formula"]).status.code(), Some(2));
    assert_eq!(suppos(&["polarize", "vars: 1\nx1", "--format", "dot"]).status.code(), Some(2));
}

#[test]
fn oracle_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_suppos"))
        .args(["betti", "vars: 4\nx1, x2, x3, x4"])
        .env("SUPPOS_MAX_SUBSETS", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error[SCALE_CAP]:"));
}

#[test]
fn help_for_every_subcommand() {
    for sub in ["support-poset", "betti", "construct", "polarize", "depolarize", "check", "export"] {
        let o = suppos(&[sub, "--help"]);
        assert!(o.status.success(), "{sub}");
    }
}
