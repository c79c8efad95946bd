use std::path::PathBuf;

use hullforge::cli::run;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["hullforge"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn fixture_path(name: &str) -> String {
    fixtures().join(format!("{name}.g4m")).display().to_string()
}

#[test]
fn analyze_json_has_fixed_keys() {
    let (code, out, _) = invoke(&["analyze", &fixture_path("G_[13,3,9]"), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(
        sorted,
        ["class", "d", "dual_d", "eaqecc", "hull_dim", "k", "n", "weights"]
    );
    assert_eq!(v["d"], 9);
    assert_eq!(v["hull_dim"], 1);
    assert!(v["eaqecc"].is_null());
}

#[test]
fn analyze_reports_eaqecc_pair() {
    let (code, out, _) = invoke(&["analyze", &fixture_path("G_[23,3,16]"), "--eaqecc"]);
    assert_eq!(code, 0);
    assert!(out.contains("[[23,2,16;19]]_2"), "{out}");
}

#[test]
fn analyze_reports_parse_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g4m");
    std::fs::write(&path, "3 1\n1 x 0\n").unwrap();
    let (code, _, err) = invoke(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2, column 3"), "{err}");
}

#[test]
fn analyze_digits_alphabet() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("omega.g4m");
    std::fs::write(&path, "2 1\n1 2\n").unwrap();
    let (code, out, _) = invoke(&[
        "analyze",
        path.to_str().unwrap(),
        "--digits",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out.lines().nth(1).unwrap(),
        "2,1,2,2,1,SELF_ORTHOGONAL,1 0 3,"
    );
}

#[test]
fn search_small_k_is_exhaustive() {
    let (code, out, _) = invoke(&["search", "10", "2", "--hull", "1"]);
    assert_eq!(code, 0);
    assert!(
        out.starts_with("# [10, 2] hull 1: best_d = 7 (exhaustive)"),
        "{out}"
    );
}

#[test]
fn search_certifies_a_gap() {
    let (code, out, _) = invoke(&["search", "16", "3", "--hull", "1", "--target-d", "12"]);
    assert_eq!(code, 0);
    assert!(out.contains("no hull-1 [16, 3, >=12] code exists"), "{out}");
}

#[test]
fn random_search_is_deterministic_across_threads() {
    let args = [
        "search",
        "8",
        "4",
        "--target-d",
        "4",
        "--seed",
        "1",
        "--budget",
        "100000",
    ];
    let one = invoke(&[&args[..], &["--threads", "1"]].concat());
    let four = invoke(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(one.0, 0);
    assert_eq!(one.1, four.1);
    assert!(one.1.contains("best_d = 4"));
}

#[test]
fn search_rejects_other_hulls() {
    let (code, _, err) = invoke(&["search", "8", "4", "--hull", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("--hull 1"));
}

#[test]
fn table_writes_json_csv_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("tables");
    let (code, out, _) = invoke(&[
        "table",
        "--max-n",
        "12",
        "--exhaustive-up-to",
        "8",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("wrote 66 cells"), "{out}");
    let csv = std::fs::read_to_string(out_dir.join("dh_table.csv")).unwrap();
    assert_eq!(csv.lines().next().unwrap(), "n,k,d,hull_dim,method");
    assert!(csv.lines().any(|l| l == "12,6,6,1,witness"));
    assert!(csv.lines().any(|l| l == "8,3,5,1,exhaustive"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("dh_table.json")).unwrap())
            .unwrap();
    assert_eq!(json.as_array().unwrap().len(), 66);
    assert!(out_dir.join("dh_cache.json").exists());
}

#[test]
fn table_single_cell() {
    let (code, out, _) = invoke(&["table", "--max-n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "n,k,d,hull_dim,method\n2,1,2,1,formula\n");
}

#[test]
fn verify_paper_passes_on_embedded_corpus() {
    let (code, out, _) = invoke(&["verify-paper"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS table2 griesmer k=3: 126 cells match"));
    assert!(out.ends_with("0 failed\n"));
}

#[test]
fn verify_paper_names_corrupted_fixture() {
    let dir = tempfile::tempdir().unwrap();
    for entry in std::fs::read_dir(fixtures()).unwrap() {
        let p = entry.unwrap().path();
        if p.extension().is_some_and(|x| x == "g4m") {
            std::fs::copy(&p, dir.path().join(p.file_name().unwrap())).unwrap();
        }
    }
    let victim = dir.path().join("G_[13,3,9].g4m");
    let text = std::fs::read_to_string(&victim).unwrap();
    let corrupted = text.replacen("1 0 0", "0 0 0", 1);
    assert_ne!(text, corrupted);
    std::fs::write(&victim, corrupted).unwrap();
    let (code, out, err) = invoke(&["verify-paper", "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL fixture G_[13,3,9]"), "{out}");
    assert!(err.contains("fixture G_[13,3,9]"));
}

#[test]
fn usage_error_exit_code() {
    let (code, _, _) = invoke(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify-paper"));
}
