use std::path::{Path, PathBuf};

use newton_dual::cli;
use newton_dual::fixtures;
use newton_dual::io::IdealDocument;
use serde_json::Value;

struct Run {
    code: i32,
    out: String,
    err: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.out).expect("JSON output")
    }
}

fn run(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["newton-dual"];
    full.extend_from_slice(args);
    let code = cli::run(full, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn input(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("newton-dual-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn xi() -> PathBuf {
    input("xi.txt", &IdealDocument::from_ideal(&fixtures::borel_cube(), None).to_text())
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn dual_json_round_trips_through_the_document() {
    let src = input("two.txt", "vars x y\nbound 5 6\nx^3\nx^2*y^2\ny^4\n");
    let first = run(&["dual", p(&src)]);
    assert_eq!(first.code, 0, "{}", first.err);
    let doc = first.json()["document"].to_string();
    let back = input("two-dual.json", &doc);
    let second = run(&["dual", p(&back)]);
    assert_eq!(second.code, 0, "{}", second.err);
    let v = second.json();
    let mut gens: Vec<&str> = v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g.as_str().unwrap())
        .collect();
    gens.sort();
    assert_eq!(gens, ["x^2*y^2", "x^3", "y^4"]);
}

#[test]
fn text_output_is_plain() {
    let src = input("sq.txt", "vars x1 x2 x3\nx1*x2\nx1*x3\nx2^2\nx2*x3\n");
    let r = run(&["--text", "dual", p(&src), "--bound", "3,4,2"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("x1^2*x2^4*x3"), "{}", r.out);
    assert!(!r.out.trim_start().starts_with('{'));
}

#[test]
fn betti_reports_both_indexings() {
    let src = input("koszul.txt", "vars x1 x2 x3\nx1\nx2\nx3\n");
    let r = run(&["betti", p(&src)]);
    assert_eq!(r.code, 0, "{}", r.err);
    let b = &r.json()["betti"];
    assert_eq!(b["ideal_totals"], serde_json::json!([3, 3, 1]));
    assert_eq!(b["quotient_totals"], serde_json::json!([1, 3, 3, 1]));
}

#[test]
fn resolve_check_passes_and_detects_a_flipped_sign() {
    let path = xi();
    let ok = run(&["resolve", p(&path), "--mode", "borel", "--check"]);
    assert_eq!(ok.code, 0, "{}", ok.err);
    let v = ok.json();
    assert_eq!(v["f_vector"], serde_json::json!([14, 21, 9, 1]));
    assert_eq!(v["check"]["oracle_match"], Value::Bool(true));

    let first_edge = fixtures::borel_cube().len();
    let bad = run(&["resolve", p(&path), "--mode", "borel", "--flip-sign", &first_edge.to_string()]);
    assert_eq!(bad.code, 1, "{}", bad.out);
}

#[test]
fn resolve_planar_square() {
    let src = input("sq2.txt", "vars x1 x2 x3\nbound 3 4 2\nx1*x2\nx1*x3\nx2^2\nx2*x3\n");
    let r = run(&["--text", "resolve", p(&src), "--mode", "planar", "--check", "--field", "F2"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("4 4 1"), "{}", r.out);
}

#[test]
fn preconditions_and_parse_errors_exit_2() {
    let stable = input("stable.txt", &IdealDocument::from_ideal(&fixtures::stable_not_strongly(), None).to_text());
    assert_eq!(run(&["resolve", p(&stable), "--mode", "borel"]).code, 2);

    let bad = input("bad.txt", "vars x y\nx^2*z\n");
    let r = run(&["dual", p(&bad)]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("line 2"), "{}", r.err);

    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["dual"]).code, 2);
    assert_eq!(run(&["dual", "/nonexistent/ideal.txt"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn linear_quotients_in_both_orders() {
    let path = xi();
    for order in ["colex", "removal"] {
        let src = if order == "removal" {
            input("square-lq.txt", "vars x1 x2 x3\nx1*x2\nx1*x3\nx2^2\nx2*x3\n")
        } else {
            path.clone()
        };
        let r = run(&["check-linear-quotients", p(&src), "--order", order]);
        assert_eq!(r.code, 0, "{order}: {}", r.out);
        assert_eq!(r.json()["linear_quotients"], Value::Bool(true));
    }
    let stable = input("stable-lq.txt", &IdealDocument::from_ideal(&fixtures::stable_not_strongly(), None).to_text());
    assert_eq!(run(&["check-linear-quotients", p(&stable)]).code, 1);
}

#[test]
fn alexander_compare_with_blocks() {
    let doc = IdealDocument::from_ideal(&fixtures::almost_complete_graph().edge_ideal(), None);
    let mut v: Value = serde_json::from_str(&doc.to_json()).unwrap();
    v["blocks"] = serde_json::json!([2, 3]);
    let src = input("less.json", &v.to_string());
    let r = run(&["alexander-compare", p(&src)]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.json()["equal"], Value::Bool(true));

    let ce = input("ce.txt", "vars x1 x2 y1 y2\nx1*y1\nx1*y2\nx2*y1\nx2*y2\ny1*y2\n");
    let r = run(&["alexander-compare", p(&ce)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["equal"], Value::Bool(false));
}

#[test]
fn fiber_relations_agree() {
    let src = input("fib.txt", "vars x y\nx^2\nx*y\ny^2\n");
    let r = run(&["fiber-relations", p(&src), "--degree-cap", "2"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v = r.json();
    assert_eq!(v["dual_agrees"], Value::Bool(true));
    assert_eq!(v["relations"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_selected_suites() {
    let r = run(&["verify", "--suite", "duals,borel", "--samples", "20"]);
    assert_eq!(r.code, 0, "{}", r.out);
    assert_eq!(run(&["verify", "--suite", "nonsense"]).code, 2);
}

#[test]
fn export_svg_to_file() {
    let path = xi();
    let out = path.with_extension("svg");
    let r = run(&["export-svg", p(&path), "--mode", "borel", "-o", p(&out)]);
    assert_eq!(r.code, 0, "{}", r.err);
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg"));
}
