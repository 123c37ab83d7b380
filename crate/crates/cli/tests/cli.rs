use std::fs;
use std::process::Command;

use class_spectrum::verify::{OmegaSweep, ScanSummary};
use class_spectrum::{Certificate, Verdict};
use class_spectrum_cli::{run, EXIT_ERROR, EXIT_FAIL, EXIT_PASS};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["class-spectrum", "--no-cache"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn round_trips<T: Serialize + DeserializeOwned>(text: &str, pretty: bool) {
    let value: T = serde_json::from_str(text).unwrap();
    let again = if pretty { serde_json::to_string_pretty(&value) } else { serde_json::to_string(&value) }.unwrap();
    assert_eq!(again, text.trim_end());
}

#[test]
fn alt5_spectrum_json() {
    let (code, out, _) = cli(&["spectrum", "--kind", "alt", "--n", "5", "--format", "json"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out, "{\"values\":[\"1\",\"12\",\"15\",\"20\"]}\n");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap(), out.trim_end());
}

#[test]
fn spectrum_formats_and_families() {
    let (_, csv, _) = cli(&["spectrum", "--kind", "sym", "--n", "4", "--format", "csv"]);
    assert_eq!(csv, "value\n1\n3\n6\n8\n");
    let (_, text, _) = cli(&["spectrum", "--kind", "sym", "--n", "6", "--family", "psi", "--t", "2"]);
    assert_eq!(text, "15\n40\n45\n90\n");
    let (_, text, _) = cli(&["spectrum", "--kind", "sym", "--n", "5", "--family", "phi", "--t", "3"]);
    assert_eq!(text, "20\n");
    let (code, _, err) = cli(&["spectrum", "--kind", "sym", "--n", "5", "--family", "phi"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("--t"));
}

#[test]
fn full_spectrum_refuses_large_degree() {
    let (code, _, err) = cli(&["spectrum", "--kind", "sym", "--n", "60"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.starts_with("error:"));
}

#[test]
fn height_of_powers_of_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chain.txt");
    fs::write(&path, "2\n4\n8\n16\n").unwrap();
    let p = path.to_str().unwrap();
    let (code, out, _) = cli(&["height", "--input", p]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out, "height: 4 (vertices)\nwitness: 2 4 8 16\n");
    let (_, out, _) = cli(&["height", "--input", p, "--convention", "edges", "--format", "json"]);
    assert_eq!(out, "{\"height\":3,\"witness\":[\"2\",\"4\",\"8\",\"16\"],\"convention\":\"edges\"}\n");
    round_trips::<class_spectrum::ChainResult>(&out, false);
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "6\n-3\n").unwrap();
    let (code, out, err) = cli(&["height", "--input", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_ERROR);
    assert!(out.is_empty());
    assert!(err.contains(":2:"), "{err}");

    for args in [
        &["omega", "--n", "12x"][..],
        &["omega", "--bogus"],
        &["spectrum", "--kind", "cyclic", "--n", "3"],
        &["omega", "--n", "2"],
    ] {
        let (code, _, err) = cli(args);
        assert_eq!(code, EXIT_ERROR, "{args:?}");
        assert!(!err.is_empty());
    }
    let (code, _, err) = cli(&["height", "--input", "/nonexistent/values.txt"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("/nonexistent/values.txt"));
}

#[test]
fn omega_exit_codes() {
    let (code, out, _) = cli(&["omega", "--n", "1362"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.lines().any(|l| l == "verdict: PASS"));
    let (code, out, _) = cli(&["omega", "--n", "1360"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.lines().any(|l| l == "verdict: FAIL"));
    let (_, csv, _) = cli(&["omega", "--n", "1360", "--format", "csv"]);
    assert_eq!(csv.lines().nth(1), Some("1360,1327,94,95,343,FAIL"));
}

#[test]
fn verify_case_round_trips() {
    let (code, out, _) = cli(&["verify", "case", "--n", "1345", "--kind", "alt"]);
    assert_eq!(code, EXIT_PASS);
    let cert: Certificate = serde_json::from_str(&out).unwrap();
    assert_eq!(cert.verdict, Verdict::Pass);
    cert.validate().unwrap();
    round_trips::<Certificate>(&out, true);
}

#[test]
fn scan_outputs_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) =
        cli(&["verify", "scan", "--from", "23", "--to", "60", "--jobs", "2", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    round_trips::<ScanSummary>(&out, true);
    let written = fs::read_to_string(dir.path().join("summary.json")).unwrap();
    assert_eq!(written, out);
    let certs: Vec<Certificate> =
        serde_json::from_str(&fs::read_to_string(dir.path().join("certificates.json")).unwrap()).unwrap();
    assert_eq!(certs.len(), 2 * 38);
    let csv = fs::read_to_string(dir.path().join("certificates.csv")).unwrap();
    assert!(csv.starts_with("n,kind,strategy,r,p,t_star,support_m,"));
    assert_eq!(csv.lines().count(), certs.len() + 1);
}

#[test]
fn omega_scan_reports_failures() {
    let (code, out, _) = cli(&["verify", "omega-scan", "--from", "1362", "--to", "1400", "--jobs", "2"]);
    assert_eq!(code, EXIT_FAIL);
    let sweep: OmegaSweep = serde_json::from_str(&out).unwrap();
    assert_eq!(sweep.failures.first(), Some(&1391));
    round_trips::<OmegaSweep>(&out, true);
}

#[test]
fn hz_table_marks_exceedances() {
    let (code, out, _) = cli(&["hz-table", "--max-m", "4"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("above published bound (*): m=4 sym/vertices=4"), "{out}");
}

#[test]
fn bounds_diagnostic() {
    let (code, out, _) = cli(&["bounds", "--x", "100"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("pi(x): 25"));
    assert!(out.lines().any(|l| l.starts_with("upper") && l.ends_with("VIOLATED")));
    let (code, _, _) = cli(&["bounds", "--x", "10"]);
    assert_eq!(code, EXIT_ERROR);
}

#[test]
fn binary_exit_codes_and_cache_env() {
    let bin = env!("CARGO_BIN_EXE_class-spectrum");
    let dir = tempfile::tempdir().unwrap();
    let run_bin =
        |args: &[&str]| Command::new(bin).args(args).env("CLASS_SPECTRUM_CACHE", dir.path()).output().unwrap();

    let ok = run_bin(&["spectrum", "--kind", "alt", "--n", "7", "--format", "json"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1, "entry written under CLASS_SPECTRUM_CACHE");
    let hit = run_bin(&["spectrum", "--kind", "alt", "--n", "7", "--format", "json"]);
    assert_eq!(hit.stdout, ok.stdout);

    assert_eq!(run_bin(&["omega", "--n", "1360"]).status.code(), Some(1));
    let bad = run_bin(&["spectrum", "--n", "5"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty() && !bad.stderr.is_empty());
}
