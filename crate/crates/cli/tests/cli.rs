//! End-to-end runs of the `bihom` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name)
}

fn bihom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bihom")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn passing_check_exits_zero() {
    let o = bihom(&["check", path_str(&fixture("z1.json")), "--kind", "associative"]);
    assert_eq!(code(&o), 0, "{o:?}");
    assert!(stdout(&o).starts_with("pass"));
}

#[test]
fn failing_check_prints_the_first_witness() {
    let o = bihom(&["check", path_str(&fixture("n2.json")), "--kind", "associative"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("assoc.associativity at (x=e1, y=e1, z=e1): residual [1, 0]"), "{}", stdout(&o));
}

#[test]
fn json_report_is_canonical_and_deterministic() {
    let n2 = fixture("n2.json");
    let args = ["check", path_str(&n2), "--json"];
    let (a, b) = (bihom(&args), bihom(&args));
    assert_eq!(code(&a), 1);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("\"verdict\": \"fail\""));
    let first = "\"residual\": [1, 0],\n      \"witness\": {\n        \"x\": 1,\n        \"y\": 1,\n        \"z\": 1\n";
    assert!(text.contains(first), "{text}");
}

#[test]
fn subadjacent_pipelines_produce_passing_algebras() {
    let dir = tempfile::tempdir().unwrap();
    for input in ["a2_poisson.json", "a2_prepoisson.json", "a2.json", "a2_dendriform.json", "a2_prelie.json"] {
        let out = dir.path().join(format!("sub_{input}"));
        let b = bihom(&["build", "subadjacent", path_str(&fixture(input)), "-o", path_str(&out)]);
        assert_eq!(code(&b), 0, "{input}: {b:?}");
        let c = bihom(&["check", path_str(&out)]);
        assert_eq!(code(&c), 0, "{input}: {}", stdout(&c));
    }
}

#[test]
fn search_output_feeds_rota_baxter_build() {
    let dir = tempfile::tempdir().unwrap();
    let found = dir.path().join("rb.json");
    let s = bihom(&["search", "rb", path_str(&fixture("a2_poisson.json")), "--entries=-1,0,1", "-o", path_str(&found)]);
    assert_eq!(code(&s), 0, "{s:?}");
    let frozen = std::fs::read_to_string(fixture("a2_rota_baxter_unit_entries.json")).unwrap();
    assert_eq!(std::fs::read_to_string(&found).unwrap(), frozen);
    let one = dir.path().join("one.json");
    std::fs::write(&one, "{\"schema_version\": \"1\", \"matrices\": [[[0, 1], [0, 0]]]}").unwrap();
    let out = dir.path().join("pre.json");
    let b = bihom(&["build", "from-rota-baxter", path_str(&fixture("a2_poisson.json")), "--operator", path_str(&one), "-o", path_str(&out)]);
    assert_eq!(code(&b), 0, "{b:?}");
    assert_eq!(code(&bihom(&["check", path_str(&out)])), 0);
    let dend = dir.path().join("dend.json");
    let b = bihom(&["build", "from-rota-baxter", path_str(&fixture("a2.json")), "--operator", path_str(&one), "-o", path_str(&dend)]);
    assert_eq!(code(&b), 0, "{b:?}");
    assert_eq!(code(&bihom(&["check", path_str(&dend), "--kind", "dendriform"])), 0);
}

#[test]
fn search_limit_is_enforced() {
    let o = bihom(&["search", "rb", path_str(&fixture("t3.json")), "--entries=-1,0,1", "--limit", "100"]);
    assert_eq!(code(&o), 2);
    let o = bihom(&["search", "rb", path_str(&fixture("t3.json")), "--entries=-1,0,1", "--limit", "100", "--truncate"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn operator_and_pair_documents() {
    assert_eq!(code(&bihom(&["check", path_str(&fixture("a2_rb_upper.json"))])), 0);
    assert_eq!(code(&bihom(&["check", path_str(&fixture("a2_identity_operator.json"))])), 1);
    assert_eq!(code(&bihom(&["check", path_str(&fixture("m2_split.json"))])), 0);
    assert_eq!(code(&bihom(&["check", path_str(&fixture("a2_regular.json"))])), 0);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m2.json");
    assert_eq!(code(&bihom(&["build", "bowtie", path_str(&fixture("m2_split.json")), "-o", path_str(&out)])), 0);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), std::fs::read_to_string(fixture("m2.json")).unwrap());
    let img = dir.path().join("img.json");
    let b = bihom(&["build", "from-o-operator", path_str(&fixture("a2_rb_upper.json")), "--image", "-o", path_str(&img)]);
    assert_eq!(code(&b), 0, "{b:?}");
    assert_eq!(code(&bihom(&["check", path_str(&img)])), 0);
    // The identity is not an O-operator on the regular bimodule of A2.
    let b = bihom(&["build", "from-o-operator", path_str(&fixture("a2_identity_operator.json"))]);
    assert_eq!(code(&b), 1);
}

#[test]
fn constructions_on_algebras() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.json");
    let o = path_str(&out);
    assert_eq!(code(&bihom(&["build", "sum", path_str(&fixture("u1.json")), path_str(&fixture("a2.json")), "-o", o])), 0);
    assert_eq!(code(&bihom(&["check", o])), 0);
    assert_eq!(code(&bihom(&["build", "semidirect", path_str(&fixture("a2_regular.json")), "-o", o])), 0);
    assert_eq!(code(&bihom(&["check", o])), 0);
    assert_eq!(code(&bihom(&["build", "derived", path_str(&fixture("a2_diag.json")), "--n", "2", "-o", o])), 0);
    assert_eq!(code(&bihom(&["check", o])), 0);
    let maps = dir.path().join("maps.json");
    std::fs::write(&maps, "{\"schema_version\": \"1\", \"matrices\": [[[1, 0], [0, 2]], [[1, 0], [0, 2]]]}").unwrap();
    assert_eq!(code(&bihom(&["build", "twist", path_str(&fixture("a2.json")), "--maps", path_str(&maps), "-o", o])), 0);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), std::fs::read_to_string(fixture("a2_diag.json")).unwrap());
    // Derived algebras need a valid input.
    assert_eq!(code(&bihom(&["build", "derived", path_str(&fixture("n2.json")), "--n", "1"])), 1);
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(code(&bihom(&["frobnicate"])), 2);
    assert_eq!(code(&bihom(&[])), 2);
    assert_eq!(code(&bihom(&["check", "/nonexistent/x.json"])), 2);
    assert_eq!(code(&bihom(&["check", path_str(&fixture("z1.json")), "--kind", "jordan"])), 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"schema_version\": \"1\", \"algebra\": {\"dim\": 1, \"kind\": \"associative\", \"alpha1\": [[1]], \"alpha2\": [[1]], \"products\": {\"mul\": [[[\"1/0\"]]]}}}").unwrap();
    let o = bihom(&["check", path_str(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("algebra.products.mul[0][0][0]"), "{o:?}");
    std::fs::write(&bad, "{\"schema_version\": \"1\",\n  \"algebra\": }").unwrap();
    let o = bihom(&["check", path_str(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"), "{o:?}");
    assert_eq!(code(&bihom(&["--help"])), 0);
}
