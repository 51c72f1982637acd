use std::process::{Command, Output};

use serde_json::Value;

fn zplane(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zplane"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = zplane(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).expect("valid JSON")
}

fn texts(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|e| e["text"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn classify_zero_divisor_prime() {
    let v = json(&["classify", "1+1j"]);
    let c = &v["classification"];
    assert_eq!(c["is_zero_divisor"], true);
    assert_eq!(c["is_prime"], true);
    assert_eq!(c["is_reducible"], true);
    assert_eq!(c["is_irreducible"], false);
    assert_eq!(v["eta"], "0");
}

#[test]
fn classify_with_ring_hint() {
    let v = json(&["classify", "2", "--ring", "j"]);
    assert_eq!(v["classification"]["is_irreducible"], true);
    assert_eq!(v["classification"]["is_prime"], false);
    let v = json(&["classify", "k"]);
    assert_eq!(v["classification"]["is_prime"], true);
    assert_eq!(v["classification"]["is_irreducible"], true);
    let text = stdout(&["classify", "--color", "never", "-3-1j"]);
    assert!(text.contains("canonical:    3+1j"), "{text}");
}

#[test]
fn factor_outputs_and_errors() {
    let v = json(&["factor", "8", "--ring", "j"]);
    assert_eq!(texts(&v["factors"]), ["2+0j", "2+0j", "2+0j"]);
    assert_eq!(v["unit"]["text"], "1+0j");
    assert_eq!(v["zero_divisor_extension"], false);

    let v = json(&["factor", "0+6k"]);
    assert_eq!(v["zero_divisor_extension"], true);

    let out = zplane(&["factor", "3+3j"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn integers_are_strings_in_json() {
    let big = "123456789012345678901234567890";
    let v = json(&["norm", &format!("{big}+1i")]);
    assert_eq!(v["element"]["x"], big);
    assert!(v["eta"].is_string());
}

#[test]
fn divmod_reports_the_bound() {
    let v = json(&["divmod", "7+3i", "2+1i"]);
    assert_eq!(v["remainder_smaller"], true);
    assert_eq!(v["half_bound"], true);
    let v = json(&["divmod", "17", "3+1j"]);
    assert_eq!(v["a"]["text"], "17+0j");
    let out = zplane(&["divmod", "5+0j", "2+2j"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn dts_rows() {
    let v = json(&["dts", "8"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0]["r"], "1");
    assert_eq!(rows[0]["s"], "0");
    assert_eq!(rows[5]["representable"], false);
    assert_eq!(rows[7]["r"], "3");
    assert_eq!(rows[7]["s"], "1");
    assert_eq!(rows[7]["nu2"], 3);
}

#[test]
fn ideal_decomposition() {
    let v = json(&["ideal", "2", "1+1j", "--contains", "3+1j"]);
    assert_eq!(v["alpha"]["text"], "2+0j");
    assert_eq!(v["dplus_gen"], "1");
    assert_eq!(v["dminus_gen"], "1");
    assert_eq!(v["contains"]["member"], true);
    let v = json(&["ideal", "3+3j"]);
    assert_eq!(v["alpha"], Value::Null);
    assert_eq!(v["dplus_gen"], "3");
}

#[test]
fn oracle_modes() {
    let v = json(&["oracle", "prime", "2", "--ring", "j", "--box", "3"]);
    assert_eq!(v["verdict"], "refuted");
    assert_eq!(texts(&v["witness"]), ["1+1j", "1-1j"]);
    let v = json(&["oracle", "irreducible", "3+1j"]);
    assert_eq!(v["verdict"], "confirmed");
    let v = json(&["oracle", "divisors", "5", "--ring", "i"]);
    assert_eq!(texts(&v["divisors"]), ["1+0i", "1+2i", "2+1i", "5+0i"]);
    let out = zplane(&["oracle", "divisors", "2+2j"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify_poly() {
    assert_eq!(json(&["classify-poly", "1", "0", "1"])["ring"], "i");
    assert_eq!(json(&["classify-poly", "1", "0", "-1"])["ring"], "j");
    assert_eq!(json(&["classify-poly", "2/3", "4/3", "2/3"])["ring"], "k");
    let out = zplane(&["classify-poly", "0", "1", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = zplane(&["classify-poly", "x", "1", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exp_and_pow() {
    let v = json(&["exp", "0", "3", "--ring", "k"]);
    assert_eq!(v["exp"]["x"], 1.0);
    assert_eq!(v["exp"]["y"], 3.0);
    let v = json(&["pow", "5", "3", "2", "--ring", "j"]);
    let (x, y) = (v["power"]["x"].as_f64().unwrap(), v["power"]["y"].as_f64().unwrap());
    assert!((x - 34.0).abs() < 1e-9 && (y - 30.0).abs() < 1e-9);
    let out = zplane(&["pow", "1", "1", "2", "--ring", "j"]);
    assert_eq!(out.status.code(), Some(1));
    let out = zplane(&["exp", "0", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_csv_and_summary() {
    let text = stdout(&["table", "--ring", "j", "--bound", "5"]);
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let find = |name: &str| rows.iter().find(|r| &r[0] == name).cloned().unwrap();
    let r = find("2+1j");
    assert_eq!((&r[3], &r[7]), ("3", "1"));
    let r = find("3+1j");
    assert_eq!((&r[7], &r[8]), ("0", "1"));

    let v = json(&["table", "--ring", "k", "--bound", "5"]);
    assert_eq!(v["summary"]["primes"], 1);
    let out = zplane(&["table", "--ring", "k", "--bound", "100000"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["classify", "7"][..],
        &["classify", "3+1q"],
        &["classify", "3+1j", "--ring", "k"],
        &["frobnicate"],
    ] {
        assert_eq!(zplane(args).status.code(), Some(2), "{args:?}");
    }
    let out = zplane(&["--json", "classify", "3+1q"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["kind"], "parse");
}
