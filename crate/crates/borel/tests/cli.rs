use borel::cli::{run, EXIT_DATA, EXIT_MISMATCH, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};
use borel::format::{CertificateJson, DegenerationJson};

fn borel(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("borel").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn b2_antichains_as_csv() {
    let (code, out, _) = borel(&["antichains", "--type", "B2", "--filter", "all", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "size,g1_a1,g1_a2,g2_a1,g2_a2");
    assert_eq!(lines.len() - 1, 6);
}

#[test]
fn f4_first_row_has_level_two() {
    let (code, out, _) = borel(&["minimize-n", "--type", "F4", "--antichain", "[[1,1,0,0],[0,1,1,0],[0,0,1,1]]"]);
    assert_eq!(code, EXIT_OK);
    let j: CertificateJson = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(j.n, 2);
    assert_eq!(j.coweight, vec![1, 1, 1, 1]);
    assert!(j.minimal);
}

#[test]
fn auto_certificate_degeneration_lands_on_the_socle() {
    let element = r#"{"type":"A2","terms":[{"root":[1,0],"coeff":"2"},{"root":[1,1],"coeff":"-1/3"}]}"#;
    let (code, out, _) = borel(&["degenerate", "--type", "A2", "--element", element, "--auto-cert"]);
    assert_eq!(code, EXIT_OK);
    let j: DegenerationJson = serde_json::from_str(out.trim()).unwrap();
    let support: Vec<Vec<i64>> = j.limit.terms.iter().map(|t| t.root.clone()).collect();
    assert_eq!(support, j.socle);
    assert_eq!(j.socle, vec![vec![1, 0]]);
    assert_eq!(j.limit.terms[0].coeff, "2");
}

#[test]
fn explicit_certificate_must_match_the_socle() {
    let element = r#"[{"root":[1,0],"coeff":"1"},{"root":[1,1],"coeff":"1"}]"#;
    let good = r#"{"type":"A2","antichain":[[1,0]],"H":[1,1],"n":1,"minimal":true}"#;
    let bad = r#"{"type":"A2","antichain":[[0,1]],"H":[1,1],"n":1,"minimal":true}"#;
    assert_eq!(borel(&["degenerate", "--type", "A2", "--element", element, "--certificate", good]).0, EXIT_OK);
    assert_eq!(borel(&["degenerate", "--type", "A2", "--element", element, "--certificate", bad]).0, EXIT_DATA);
}

#[test]
fn exit_codes() {
    assert_eq!(borel(&["--help"]).0, EXIT_OK);
    assert_eq!(borel(&["--version"]).0, EXIT_OK);
    assert_eq!(borel(&[]).0, EXIT_USAGE);
    assert_eq!(borel(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(borel(&["certify", "--type", "Z9", "--antichain", "[[1]]"]).0, EXIT_USAGE);
    assert_eq!(borel(&["certify", "--type", "A2", "--antichain", "[[1,"]).0, EXIT_USAGE);
    assert_eq!(borel(&["--jobs", "0", "reproduce", "f4-table"]).0, EXIT_USAGE);
    assert_eq!(borel(&["certify", "--type", "A2", "--antichain", "[[2,0]]"]).0, EXIT_DATA);
    assert_eq!(borel(&["certify", "--type", "A2", "--antichain", "[[1,0],[1,1]]"]).0, EXIT_DATA);
    assert_eq!(borel(&["certify", "--type", "A2", "--antichain", "[]"]).0, EXIT_DATA);
    assert_eq!(borel(&["certify", "--type", "A2", "--antichain", r#"{"type":"B2","roots":[[1,0]]}"#]).0, EXIT_USAGE);
    let (code, _, err) = borel(&["conjugate", "--type", "E6", "--antichain", "[[1,2,2,3,2,1]]", "--budget", "1"]);
    assert_eq!(code, EXIT_RESOURCE);
    assert!(err.contains("exhausted"));
    let (code, _, err) = borel(&["invariants", "--type", "A2", "--antichain", "[[1,0]]", "--weight", "[1,0]"]);
    assert_eq!(code, EXIT_DATA, "{err}");
    assert_ne!(EXIT_MISMATCH, EXIT_OK);
}

#[test]
fn reproduce_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f4.json");
    let (code, out, _) = borel(&["reproduce", "f4-table", "--report", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let file = std::fs::read_to_string(&path).unwrap();
    assert_eq!(file, out);
    let report: borel::format::Report = serde_json::from_str(&file).unwrap();
    assert!(report.passed);
    assert_eq!(report.rows.len(), 11);
    assert_eq!(report.notes.len(), 10);
}

#[test]
fn cold_and_warm_cache_runs_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let cold = borel(&["--cache-dir", d, "reproduce", "case4-counts"]);
    let files = std::fs::read_dir(dir.path()).unwrap().count();
    assert!(files > 0);
    let warm = borel(&["--cache-dir", d, "reproduce", "case4-counts"]);
    assert_eq!(cold.0, EXIT_OK);
    assert_eq!(cold.1, warm.1);
    assert_eq!(files, std::fs::read_dir(dir.path()).unwrap().count());
    let uncached = borel(&["reproduce", "case4-counts"]);
    assert_eq!(cold.1, uncached.1);

    let a = borel(&["--cache-dir", d, "antichains", "--type", "D4", "--format", "csv"]);
    let b = borel(&["--cache-dir", d, "antichains", "--type", "D4", "--format", "csv"]);
    assert_eq!(a.1, b.1);
}

#[test]
fn corrupted_cache_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = borel(&["--cache-dir", d, "antichains", "--type", "B3"]);
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let p = entry.unwrap().path();
        if p.to_str().unwrap().ends_with(".ndjson") {
            std::fs::write(&p, "garbage\n").unwrap();
        }
    }
    let second = borel(&["--cache-dir", d, "antichains", "--type", "B3"]);
    assert_eq!(first, second);
}

#[test]
fn sampling_is_seeded() {
    let a = borel(&["--seed", "3", "antichains", "--type", "F4", "--sample", "25"]);
    let b = borel(&["--seed", "3", "antichains", "--type", "F4", "--sample", "25"]);
    let c = borel(&["--seed", "4", "antichains", "--type", "F4", "--sample", "25"]);
    assert_eq!(a, b);
    assert_eq!(a.1.lines().count(), 25);
    assert_ne!(a.1, c.1);
}

#[test]
fn jobs_do_not_change_output() {
    let one = borel(&["--jobs", "1", "reproduce", "prop31"]);
    let four = borel(&["--jobs", "4", "reproduce", "prop31"]);
    assert_eq!(one.0, EXIT_OK);
    assert_eq!(one.1, four.1);
}

#[test]
fn case4_filter_readings_agree() {
    let a = borel(&["antichains", "--type", "F4", "--filter", "case4", "--maximality", "non-simple"]);
    let b = borel(&["antichains", "--type", "F4", "--filter", "case4", "--maximality", "filtered"]);
    assert_eq!(a, b);
    assert_eq!(a.1.lines().count(), 10);
}

#[test]
fn socle_from_ideal_and_from_element() {
    let (code, out, _) = borel(&["socle", "--type", "A3", "--ideal", "[[1,1,0],[0,1,1],[1,1,1]]"]);
    assert_eq!(code, EXIT_OK);
    let j: borel::format::SocleJson = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(j.socle, vec![vec![0, 1, 1], vec![1, 1, 0]]);
    let (code, out, _) = borel(&["socle", "--type", "A3", "--element", r#"[{"root":[1,1,1],"coeff":"1"}]"#]);
    assert_eq!(code, EXIT_OK);
    let j: borel::format::SocleJson = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(j.socle, vec![vec![1, 1, 1]]);
    assert_eq!(borel(&["socle", "--type", "A3", "--ideal", "[[1,1,0]]"]).0, EXIT_DATA);
}

#[test]
fn invariants_of_a_socle_monomial() {
    let (code, out, _) = borel(&["invariants", "--type", "A3", "--antichain", "[[1,1,0],[0,1,1]]", "--weight", "[-1,-2,-1]", "--acting", "m0"]);
    assert_eq!(code, EXIT_OK);
    let j: borel::format::InvariantsJson = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(j.invariants.len(), 1);
    let (_, out_n, _) = borel(&["invariants", "--type", "A3", "--antichain", "[[1,1,0],[0,1,1]]", "--weight", "[-1,-2,-1]"]);
    let jn: borel::format::InvariantsJson = serde_json::from_str(out_n.trim()).unwrap();
    assert_eq!(jn.invariants.len(), 1);
}

#[test]
fn table_and_csv_formats_render() {
    for fmt in ["table", "csv"] {
        for args in [
            vec!["certify", "--type", "F4", "--antichain", "[[1,2,2,0],[1,1,1,1],[0,1,2,2]]"],
            vec!["conjugate", "--type", "D4", "--antichain", "[[1,1,1,1]]"],
            vec!["socle", "--type", "B2", "--ideal", "[[1,1],[1,2]]"],
            vec!["invariants", "--type", "B2", "--antichain", "[[1,1]]", "--weight", "[-2,-2]"],
            vec!["degenerate", "--type", "B2", "--element", r#"[{"root":[1,1],"coeff":"1"}]"#, "--auto-cert"],
            vec!["reproduce", "delta1-stats"],
        ] {
            let mut a = args.clone();
            a.extend(["--format", fmt]);
            let (code, out, err) = borel(&a);
            assert_eq!(code, EXIT_OK, "{a:?}: {err}");
            assert!(!out.is_empty());
        }
    }
}
