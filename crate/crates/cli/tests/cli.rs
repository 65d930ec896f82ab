use std::fs;
use std::path::Path;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_postlie")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn malformed_rational_exits_with_parse_code() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.laj.json");
    fs::write(&f, r#"{"name": "bad", "dim": 2, "basis": ["e1", "e2"], "brackets": [{"left": "e1", "right": "e2", "value": {"e2": "0.5"}}]}"#).unwrap();
    assert_eq!(run(&["info", p(&f)]).0, 2);
}

#[test]
fn unknown_basis_label_exits_with_parse_code() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.laj.json");
    fs::write(&f, r#"{"name": "bad", "dim": 2, "basis": ["e1", "e2"], "brackets": [{"left": "e1", "right": "e3", "value": {"e2": "1"}}]}"#).unwrap();
    assert_eq!(run(&["check", "jacobi", p(&f)]).0, 2);
}

#[test]
fn dimension_mismatch_exits_with_precondition_code() {
    assert_eq!(run(&["check", "postlie", "--g", "sl2", "--n", "n4", "--prod", "ex31-product"]).0, 3);
    assert_eq!(run(&["info", "no-such-algebra"]).0, 3);
}

#[test]
fn failing_check_exits_with_check_code() {
    // The ex31 product read on (r3, r31) with the roles swapped is not post-Lie.
    let (code, out) = run(&["check", "postlie", "--g", "r3", "--n", "r31", "--prod", "ex31-product"]);
    assert_eq!(code, 4, "{out}");
    assert!(out.contains("FAIL"));
}

#[test]
fn parameter_cap_exits_with_cap_code() {
    assert_eq!(run(&["search", "rb", "--n", "sl2-plus-sl2"]).0, 5);
}

#[test]
fn prop43_files_pass_all_axioms_with_anchor() {
    let (code, out) = run(&["check", "postlie", "--g", "prop43-induced-g", "--n", "sl3-paper", "--prod", "prop43-product"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("Prop. 4.3"));
    assert_eq!(out.matches("PASS").count(), 4);
}

#[test]
fn rota_baxter_check_and_induced_build() {
    assert_eq!(run(&["check", "rb", "--n", "sl2-plus-sl2", "--op", "prop44-phi"]).0, 0);
    assert_eq!(run(&["check", "rb", "--n", "sl2-plus-sl2", "--op", "prop44-phi", "--weight", "2"]).0, 4);
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.laj.json");
    let (code, _) = run(&["build", "rb-induced", "--n", "sl3-paper", "--op", "prop43-phi", "-o", p(&g)]);
    assert_eq!(code, 0);
    let (code, _) = run(&["check", "postlie", "--g", p(&g), "--n", "sl3-paper", "--prod", "prop43-product"]);
    assert_eq!(code, 0);
}

#[test]
fn catalog_emit_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["catalog", "emit", "ex31-pair", "-o", p(dir.path())]).0, 0);
    let file = |s: &str| dir.path().join(format!("ex31-pair.{s}"));
    let (code, out) = run(&["check", "postlie", "--g", p(&file("g.laj.json")), "--n", p(&file("n.laj.json")), "--prod", p(&file("prod.lajp.json"))]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("§3 Example"));
    assert_eq!(run(&["catalog", "emit", "gl3", "-o", p(dir.path())]).0, 0);
    assert!(dir.path().join("gl3.laj.json").is_file());
}

#[test]
fn catalog_list_names_every_fixture() {
    let (code, out) = run(&["catalog", "list"]);
    assert_eq!(code, 0);
    for name in postlie::catalog::fixture_names() {
        assert!(out.contains(name), "{name}");
    }
}

#[test]
fn nonexistence_report_labels_grid_results() {
    let (code, out) = run(&["report", "nonexistence", "--g", "sl2", "--n", "n3", "--bound", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("GRID-EMPTY(1) not a proof"), "{out}");
    assert!(out.contains("Thm. 3.3"));
    let (_, out) = run(&["report", "nonexistence", "--g", "r2", "--n", "r2"]);
    assert!(out.contains("WITNESS-FOUND"));
}

#[test]
fn builders_write_loadable_files() {
    let dir = tempfile::tempdir().unwrap();
    let sum = dir.path().join("sum.laj.json");
    assert_eq!(run(&["build", "direct-sum", "sl2", "r2", "-o", p(&sum)]).0, 0);
    let (_, info) = run(&["info", p(&sum)]);
    assert!(info.contains("(dim 5)"));

    let exp = dir.path().join("exp.lajm.json");
    assert_eq!(run(&["build", "exp-ad", "--g", "sl2-v2", "--z", "v1", "-o", p(&exp)]).0, 0);
    assert_eq!(run(&["build", "exp-ad", "--g", "sl2-v2", "--z", "[0,0,0,1,0]", "-o", p(&exp)]).0, 0);
    assert_eq!(run(&["build", "exp-ad", "--g", "sl2", "--z", "h", "-o", p(&exp)]).0, 3);

    let action = dir.path().join("action.json");
    fs::write(&action, r#"{"name": "aff1", "maps": {"E11": [["1"]]}}"#).unwrap();
    let aff = dir.path().join("aff.laj.json");
    assert_eq!(run(&["build", "semidirect", "--base", "C", "--acting", "gl1", "--action", p(&action), "-o", p(&aff)]).0, 0);
    let (_, info) = run(&["info", p(&aff)]);
    assert!(info.contains("solvable:             yes"));
    assert!(info.contains("nilpotent:            no"));
}

#[test]
fn prelie_transform_of_heisenberg_lr_structure() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["catalog", "emit", "lr-n3", "-o", p(dir.path())]).0, 0);
    let file = |s: &str| dir.path().join(format!("lr-n3.{s}"));
    let out = dir.path().join("pre.lajp.json");
    let (code, stdout) = run(&["transform", "prelie", "--g", p(&file("g.laj.json")), "--n", p(&file("n.laj.json")), "--prod", p(&file("prod.lajp.json")), "-o", p(&out)]);
    assert_eq!(code, 0, "{stdout}");
    assert_eq!(run(&["check", "prelie", "--g", "abelian3", "--prod", p(&out)]).0, 0);
}
