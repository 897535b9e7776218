use std::path::PathBuf;
use std::process::{Command, Output};

use rootpoly::cli::{parse_instance, render_instance, Instance, InstanceError};
use serde_json::Value;

fn instance(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../instances").join(name)
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootpoly")).args(args).output().unwrap()
}

fn run_on(cmd: &[&str], file: &str, extra: &[&str]) -> Output {
    let path = instance(file);
    let mut args: Vec<&str> = cmd.to_vec();
    args.push(path.to_str().unwrap());
    args.extend_from_slice(extra);
    run(&args)
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn parse_examples() {
    let Instance::Digraph(g) = parse_instance("digraph 2 1\n0 1\n").unwrap() else { panic!() };
    assert_eq!((g.n(), g.edges()), (2, &[(0, 1)][..]));
    let Instance::Digraph(g) = parse_instance("digraph 2 3\n0 1\n1 0\n1 0\n").unwrap() else { panic!() };
    assert_eq!(g, rootpoly::catalog::lopsided_digon());
    let m = parse_instance("matrix 2 3\n1 0 1\n0 1 1\n").unwrap();
    assert_eq!(m, Instance::Matrix { cols: 3, rows: vec![vec![1, 0, 1], vec![0, 1, 1]] });
}

#[test]
fn parse_errors_carry_positions() {
    assert!(matches!(parse_instance("digraph 2 1\n0 5\n"), Err(InstanceError::Range { line: 2, vertex: 5, .. })));
    assert!(matches!(parse_instance("digraph 2 2\n0 1\n"), Err(InstanceError::Parse { .. })));
    assert!(matches!(parse_instance("graph 2 1\n0 1\n"), Err(InstanceError::Parse { line: 1, col: 1, .. })));
    assert!(matches!(parse_instance("# note\n\ndigraph 2 1\n0 x\n"), Err(InstanceError::Parse { line: 4, col: 3, .. })));
}

#[test]
fn canonical_rendering_is_idempotent() {
    for name in ["diamond.txt", "k24.txt", "small_matrix.txt", "five_cut.txt"] {
        let text = std::fs::read_to_string(instance(name)).unwrap();
        let once = render_instance(&parse_instance(&text).unwrap());
        let twice = render_instance(&parse_instance(&once).unwrap());
        assert_eq!(once, twice, "{name}");
    }
}

#[test]
fn golden_reports() {
    let cases: [(&[&str], &str, &[&str], &str); 4] = [
        (&["interior", "--json"], "acyclic_triangle.txt", &[], "interior_acyclic_triangle.json"),
        (&["parking", "--json"], "diamond.txt", &["--root", "0"], "parking_diamond.json"),
        (&["dijoin", "--json"], "acyclic_triangle.txt", &[], "dijoin_acyclic_triangle.json"),
        (&["verify", "--json"], "directed_triangle.txt", &[], "verify_directed_triangle.json"),
    ];
    for (cmd, file, extra, expected) in cases {
        let out = run_on(cmd, file, extra);
        assert_eq!(out.status.code(), Some(0), "{file}");
        assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(expected), "{expected}");
    }
}

#[test]
fn json_is_stable_across_runs() {
    let a = run_on(&["verify", "--json"], "eulerian_hexagon.txt", &[]);
    let b = run_on(&["verify", "--json"], "eulerian_hexagon.txt", &[]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.contains(&b'\r'));
}

#[test]
fn command_values() {
    let five = json(&run_on(&["interior", "--json"], "five_cut.txt", &[]));
    assert_eq!(five["values"]["interior_polynomial"], serde_json::json!([1, 3, 4]));
    let d = json(&run_on(&["dijoin", "--json"], "five_cut.txt", &[]));
    assert_eq!(d["values"]["nu"], 5);
    assert_eq!(d["values"]["min_dijoin_count"], 18);
    assert_eq!(d["values"]["max_disjoint_directed_cuts"], 5);
    let g = json(&run_on(&["greedoid", "--json"], "diamond.txt", &["--root", "0", "--order", "4,3,2,1,0"]));
    assert_eq!(g["values"]["greedoid_polynomial"], serde_json::json!([1, 2, 1]));
    let f = json(&run_on(&["minfas", "--json"], "lopsided_digon.txt", &["--root", "0"]));
    assert_eq!((&f["values"]["minfas"], &f["values"]["root"]), (&serde_json::json!(2), &serde_json::json!(0)));
    let m = json(&run_on(&["matroid-interior", "--json"], "small_matrix.txt", &[]));
    assert_eq!(m["values"]["interior_polynomial"], serde_json::json!([1, 1]));
    let s = run_on(&["orient-scan", "--json"], "k24.txt", &[]);
    assert_eq!(s.status.code(), Some(0));
}

#[test]
fn verify_passes_on_every_bundled_instance() {
    let dir = instance("");
    let out = run(&["verify", "--json", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let reports = json(&out);
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 8);
    for r in reports {
        assert!(r["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true), "{}", r["instance"]);
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "digraph 2 1\n0 7\n").unwrap();
    let out = run(&["interior", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    assert_eq!(run(&["interior", "/nonexistent/instance.txt"]).status.code(), Some(2));
    assert_eq!(run_on(&["parking"], "small_matrix.txt", &["--root", "0"]).status.code(), Some(2));
    assert_eq!(run_on(&["verify"], "acyclic_triangle.txt", &["--root", "1"]).status.code(), Some(2));

    let not_tu = dir.path().join("not_tu.txt");
    std::fs::write(&not_tu, "matrix 2 2\n1 1\n-1 1\n").unwrap();
    assert_eq!(run(&["verify", not_tu.to_str().unwrap()]).status.code(), Some(2));
    let trusted = run(&["verify", "--trust-tu", not_tu.to_str().unwrap()]);
    assert_eq!(trusted.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&trusted.stdout).contains("[FAIL] degree_equals_rank_minus_nu"));

    assert_eq!(run_on(&["verify"], "directed_triangle.txt", &[]).status.code(), Some(0));
}

#[test]
fn text_report_lists_checks_and_time() {
    let out = run_on(&["verify"], "directed_triangle.txt", &[]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS] palindromic_when_strongly_connected"));
    assert!(text.contains("[PASS] chan_identity"));
    assert!(text.lines().last().unwrap().trim_start().starts_with("time: "));
}
