use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use antiflex_cli::corpus::corpus_documents;
use antiflex_cli::format::{load, parse_document, serialize_document};
use serde_json::Value;

fn corpus(file: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(file)
}

fn antiflex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antiflex")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(out)))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn committed_corpus_matches_the_generator() {
    for (file, doc) in corpus_documents() {
        let text = std::fs::read_to_string(corpus(&file)).unwrap_or_else(|e| panic!("{file}: {e}"));
        assert_eq!(text, serialize_document(&doc), "{file} is stale; run `antiflex corpus crates/cli/corpus`");
        assert_eq!(parse_document(&text).unwrap(), doc, "{file}");
    }
}

#[test]
fn corpus_algebra_passes() {
    let out = antiflex(&["check", "algebra", "--kind", "anti-flexible", p(&corpus("t3.json")), "--json"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let v = json(&out);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["kind"], "algebra");
    assert!(v["witness"].is_null());
}

#[test]
fn canonical_r_solves_the_equation() {
    let out = antiflex(&["check", "pafybe", p(&corpus("double4.json")), p(&corpus("r.json")), "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["notes"]["symmetric_solution"], true);
}

#[test]
fn perturbed_input_fails_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(corpus("t3.json")).unwrap()).unwrap();
    // t·t² = 0 becomes t·t² = t, which breaks associativity
    doc["tensors"]["product"][0][1][0] = Value::String("1".into());
    let path = dir.path().join("broken.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let out = antiflex(&["check", "algebra", "--kind", "associative", p(&path), "--json"]);
    assert_eq!(code(&out), 1, "{}", stdout(&out));
    let v = json(&out);
    assert_eq!(v["verdict"], "fail");
    let indices = v["witness"]["indices"].as_array().expect("witness indices");
    assert_eq!(indices.len(), 3);
}

#[test]
fn all_witnesses_lists_every_failing_tuple() {
    let dir = tempfile::tempdir().unwrap();
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(corpus("t3.json")).unwrap()).unwrap();
    doc["tensors"]["product"][0][1][0] = Value::String("1".into());
    let path = dir.path().join("broken.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let out = antiflex(&["check", "algebra", "--kind", "associative", p(&path), "--json", "--all-witnesses"]);
    let v = json(&out);
    let failing = v["sections"][0]["identities"][0]["failing_tuples"].as_u64().unwrap();
    assert!(failing > 1);
    assert_eq!(v["all_witnesses"].as_array().unwrap().len() as u64, failing);
}

#[test]
fn malformed_input_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"format_version":1,"kind":"algebra","dimension":1,"basis_names":["e"],"tensors":{"product":[[["x"]]]}}"#).unwrap();
    let out = antiflex(&["check", "algebra", p(&path)]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("tensors.product[0][0][0]"), "{err}");
    let out = antiflex(&["check", "algebra", p(&dir.path().join("missing.json"))]);
    assert_eq!(code(&out), 2);
}

#[test]
fn wrong_file_kind_is_an_input_error() {
    let out = antiflex(&["check", "pafybe", p(&corpus("r.json")), p(&corpus("r.json"))]);
    assert_eq!(code(&out), 2);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let bialgebra = corpus("bialgebra-double4.json");
    let args = ["check", "bialgebra", p(&bialgebra), "--json"];
    assert_eq!(antiflex(&args).stdout, antiflex(&args).stdout);
    let t3 = corpus("t3.json");
    let search = ["search", "rota-baxter", p(&t3), "--json"];
    let one = Command::new(env!("CARGO_BIN_EXE_antiflex")).args(search).env("ANTIFLEX_THREADS", "1").output().unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_antiflex")).args(search).env("ANTIFLEX_THREADS", "4").output().unwrap();
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn timing_is_opt_in() {
    let plain = json(&antiflex(&["check", "pre-algebra", p(&corpus("t3-succ-left.json")), "--json"]));
    assert!(plain.get("wall_time_ms").is_none());
    let timed = json(&antiflex(&["check", "pre-algebra", p(&corpus("t3-succ-left.json")), "--json", "--timing"]));
    assert!(timed["wall_time_ms"].is_u64());
}

#[test]
fn search_finds_the_square_map() {
    let out = antiflex(&["search", "rota-baxter", p(&corpus("t3.json")), "--coeffs", "-1,0,1", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["candidates"], "81");
    let square = serde_json::json!([["0", "0"], ["1", "0"]]);
    assert!(v["found"].as_array().unwrap().contains(&square));
}

#[test]
fn search_on_a_zero_line_accepts_every_candidate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.json");
    std::fs::write(
        &path,
        r#"{"format_version":1,"kind":"pre-algebra","dimension":1,"basis_names":["e"],"tensors":{"prec":[[["0"]]],"succ":[[["0"]]]}}"#,
    )
    .unwrap();
    let v = json(&antiflex(&["search", "pafybe-symmetric", p(&path), "--coeffs", "-2,0,1/2,3", "--json"]));
    assert_eq!(v["found_count"], 4);
    assert_eq!(v["coefficients"], "-2,0,1/2,3");
}

#[test]
fn o_operator_search_contains_the_identity() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("found");
    let out = antiflex(&["search", "o-operator", p(&corpus("t3-succ-left.json")), "-o", p(&out_dir), "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v["found"].as_array().unwrap().contains(&serde_json::json!([["1", "0"], ["0", "1"]])));
    let written = std::fs::read_dir(&out_dir).unwrap().count() as u64;
    assert_eq!(written, v["found_count"].as_u64().unwrap());
}

#[test]
fn larger_coefficient_sets_find_a_superset() {
    let small = json(&antiflex(&["search", "rota-baxter", p(&corpus("dual-numbers.json")), "--coeffs", "0,1", "--json"]));
    let large = json(&antiflex(&["search", "rota-baxter", p(&corpus("dual-numbers.json")), "--coeffs", "1,-1,0", "--json"]));
    let large_found = large["found"].as_array().unwrap();
    for m in small["found"].as_array().unwrap() {
        assert!(large_found.contains(m), "{m}");
    }
}

#[test]
fn search_respects_the_bound_and_the_size_limit() {
    let out = antiflex(&["search", "rota-baxter", p(&corpus("matrices-2x2.json"))]);
    assert_eq!(code(&out), 2);
    let out = antiflex(&["search", "rota-baxter", p(&corpus("matrices-2x2.json")), "--bound", "4", "--coeffs", "-3,-2,-1,0,1,2,3"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8(out.stderr).unwrap().contains("limit"));
}

#[test]
fn oracle_agrees_with_the_basis_check() {
    let out = antiflex(&["oracle", "coboundary", p(&corpus("double4.json")), p(&corpus("r.json")), "--trials", "20", "--seed", "5", "--json"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["oracle"]["agreement"], true);
    assert_eq!(v["oracle"]["seed"], 5);
}

#[test]
fn construct_canonical_r_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let r = dir.path().join("r.json");
    let out = antiflex(&["construct", "canonical-r", p(&corpus("t3-succ-left.json")), "-o", p(&r)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let double = dir.path().join("r.double.json");
    assert!(double.exists());
    assert_eq!(load(&r).unwrap().object, load(&corpus("r.json")).unwrap().object);
    let out = antiflex(&["check", "pafybe", p(&double), p(&r)]);
    assert_eq!(code(&out), 0);
}

#[test]
fn construct_from_rb_gives_a_pre_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let pre = dir.path().join("pre.json");
    let out = antiflex(&["construct", "from-rb", p(&corpus("t3.json")), p(&corpus("square-map.json")), "-o", p(&pre)]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&antiflex(&["check", "pre-algebra", p(&pre)])), 0);
}

#[test]
fn construct_semidirect_and_double() {
    let dir = tempfile::tempdir().unwrap();
    let semi = dir.path().join("semi.json");
    assert_eq!(code(&antiflex(&["construct", "semidirect", p(&corpus("regular-bimodule-t3.json")), "-o", p(&semi)])), 0);
    assert_eq!(code(&antiflex(&["check", "pre-algebra", p(&semi)])), 0);
    let double = dir.path().join("double.json");
    assert_eq!(code(&antiflex(&["construct", "double", p(&corpus("dual-pair-t3.json")), "-o", p(&double)])), 0);
    assert_eq!(code(&antiflex(&["check", "pre-algebra", p(&double)])), 0);
}

#[test]
fn unknown_subcommand_arguments_are_rejected() {
    let out = antiflex(&["check", "algebra", "--kind", "commutative", p(&corpus("t3.json"))]);
    assert_eq!(code(&out), 2);
}
