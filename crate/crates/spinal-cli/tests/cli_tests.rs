use std::path::Path;
use std::process::{Command, Output};

use num_bigint::BigUint;
use spinal::{network_to_json, samples};

fn spinal_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinal"))
        .args(args)
        .output()
        .expect("binary should launch")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be utf-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr should be utf-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process should exit normally")
}

fn write_file(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).expect("temp file should be writable");
    path.to_string_lossy().into_owned()
}

#[test]
fn count_prints_csv_rows() {
    let cases = [
        (["count", "--family", "stc", "--n", "3", "--k", "1"], "3,1,15,formula\n"),
        (["count", "--family", "nlstc", "--n", "5", "--k", "2"], "5,2,45,formula\n"),
        (["count", "--family", "stc", "--n", "1", "--k", "0"], "1,0,1,formula\n"),
        (["count", "--family", "nlsctc", "--n", "5", "--k", "2"], "5,2,84,formula\n"),
        (["count", "--family", "s", "--n", "4", "--k", "3"], "4,3,360,formula\n"),
        (["count", "--family", "d", "--n", "4", "--k", "3"], "4,3,15,formula\n"),
    ];
    for (args, expected) in cases {
        let out = spinal_bin(&args);
        assert_eq!(exit_code(&out), 0, "{args:?}");
        assert_eq!(stdout_of(&out), expected, "{args:?}");
    }
}

#[test]
fn count_json_object() {
    let out = spinal_bin(&["count", "--family", "nlsctc", "--n", "5", "--k", "2", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["n"], 5);
    assert_eq!(value["k"], 2);
    assert_eq!(value["value"], "84");
    assert_eq!(value["provenance"], "formula");
}

#[test]
fn table_nlstc_has_unit_tree_row() {
    let out = spinal_bin(&["table", "--family", "nlstc", "--n", "6", "--k", "0"]);
    assert_eq!(exit_code(&out), 0);
    let body = stdout_of(&out);
    let mut lines = body.lines();
    assert_eq!(lines.next(), Some("n,k,value,provenance"));
    assert_eq!(lines.next(), Some("0,0,0,formula"));
    for n in 1..=6 {
        assert_eq!(lines.next(), Some(format!("{n},0,1,formula").as_str()));
    }
    assert_eq!(lines.next(), None);
}

#[test]
fn table_bessel_matches_polynomial_coefficients() {
    let out = spinal_bin(&["table", "--family", "bessel", "--n", "6", "--k", "6"]);
    assert_eq!(exit_code(&out), 0);
    let body = stdout_of(&out);
    let factorial = |m: u32| (1..=m).map(BigUint::from).product::<BigUint>().max(BigUint::from(1u32));
    for line in body.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let n: u32 = fields[0].parse().unwrap();
        let k: u32 = fields[1].parse().unwrap();
        let expected = if k > n {
            BigUint::from(0u32)
        } else {
            factorial(n + k) / (BigUint::from(2u32).pow(k) * factorial(n - k) * factorial(k))
        };
        assert_eq!(fields[2], expected.to_string(), "cell n={n} k={k}");
    }
    assert!(body.contains("3,3,15,formula"));
    assert!(body.contains("6,6,10395,formula"));
}

#[test]
fn enumerate_word_output_matches_formula_count() {
    let out = spinal_bin(&["enumerate", "--family", "c1", "--n", "4", "--k", "2"]);
    assert_eq!(exit_code(&out), 0);
    let body = stdout_of(&out);
    let mut lines = body.lines();
    assert_eq!(lines.next(), Some("n=4 k=2"));
    assert_eq!(lines.count(), 45);

    let csv = spinal_bin(&["enumerate", "--family", "c1", "--n", "4", "--k", "2", "--format", "csv"]);
    let csv_body = stdout_of(&csv);
    assert_eq!(csv_body.lines().next(), Some("n,k,letters"));
    assert_eq!(csv_body.lines().count(), 46);
    assert!(csv_body.lines().skip(1).all(|line| line.starts_with("4,2,\"")));
}

#[test]
fn enumerate_networks_json_with_dedup_report() {
    let out = spinal_bin(&["enumerate", "--family", "nlstc", "--n", "3", "--k", "1", "--dedup-report"]);
    assert_eq!(exit_code(&out), 0);
    let nets: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(nets.as_array().unwrap().len(), 3);
    assert_eq!(stderr_of(&out).trim(), "dedup: 3 objects, 3 distinct certificates");
}

#[test]
fn enumerate_network_word_format_reencodes() {
    let out = spinal_bin(&["enumerate", "--family", "nlstc", "--n", "3", "--k", "1", "--format", "word"]);
    assert_eq!(exit_code(&out), 0);
    let body = stdout_of(&out);
    let mut lines = body.lines();
    assert_eq!(lines.next(), Some("n=2 k=1"));
    assert_eq!(lines.count(), 3);
}

#[test]
fn enumerate_rejects_count_only_families() {
    let out = spinal_bin(&["enumerate", "--family", "bessel", "--n", "3", "--k", "1"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).starts_with("error[usage]:"));
}

#[test]
fn encode_reproduces_known_word() {
    let dir = tempfile::tempdir().unwrap();
    let json = network_to_json(&samples::five_leaf_two_ret());
    let input = write_file(dir.path(), "net.json", &json);
    let out = spinal_bin(&["encode", &input]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "n=4 k=2\n3,1,2,1,1,2,2,4,3,4\n");

    let round = spinal_bin(&["encode", &input, "--roundtrip"]);
    assert_eq!(exit_code(&round), 0);
    assert_eq!(stderr_of(&round).trim(), "roundtrip ok");
}

#[test]
fn decode_roundtrip_json_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "word.txt", "n=4 k=2\n3,1,2,1,1,2,2,4,3,4\n");

    let out = spinal_bin(&["decode", &input, "--roundtrip"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stderr_of(&out).trim(), "roundtrip ok");
    let net: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(net["n"], 5);
    assert_eq!(net["k"], 2);
    assert_eq!(net["vertices"].as_array().unwrap().len(), 14);

    let dot = spinal_bin(&["decode", &input, "--format", "dot"]);
    assert_eq!(exit_code(&dot), 0);
    let dot_body = stdout_of(&dot);
    assert!(dot_body.starts_with("digraph network {"));
    assert!(dot_body.trim_end().ends_with('}'));
}

#[test]
fn decode_empty_word_gives_single_leaf() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "empty.txt", "n=0 k=0\n\n");
    let out = spinal_bin(&["decode", &input]);
    assert_eq!(exit_code(&out), 0);
    let net: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(net["n"], 1);
    assert_eq!(net["k"], 0);
    assert_eq!(net["vertices"].as_array().unwrap().len(), 2);
    assert_eq!(net["arcs"].as_array().unwrap().len(), 1);
}

#[test]
fn decode_output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "word.txt", "n=4 k=2\n3,1,2,1,1,2,2,4,3,4\n");
    let target = dir.path().join("net.json");
    let out = spinal_bin(&["decode", &input, "--output", target.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "");
    let written = std::fs::read_to_string(&target).unwrap();
    let net: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert_eq!(net["n"], 5);
}

#[test]
fn transform_prints_intermediate_steps() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "tokens.txt", "L R1 L R2 L Q1 Q2 L\n");
    let out = spinal_bin(&["transform", &input, "--steps"]);
    assert_eq!(exit_code(&out), 0);
    let expected = "substituted: L,2,2,1,1,2,1,L\n\
                    assigned: 4,2,2,1,1,2,1,3\n\
                    reversed: 3,1,2,1,1,2,2,4\n\
                    n=4 k=2\n3,1,2,1,1,2,2,4,3,4\n";
    assert_eq!(stdout_of(&out), expected);

    let quiet = spinal_bin(&["transform", &input]);
    assert_eq!(stdout_of(&quiet), "n=4 k=2\n3,1,2,1,1,2,2,4,3,4\n");
}

#[test]
fn oracle_counts_match_formulas() {
    let out = spinal_bin(&["oracle", "--family", "nlstc", "--n", "3", "--k", "1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "3,1,3,oracle\n");

    let stc = spinal_bin(&["oracle", "--family", "stc", "--n", "2", "--k", "1"]);
    assert_eq!(stdout_of(&stc), "2,1,2,oracle\n");

    let json = spinal_bin(&["oracle", "--family", "nlstc", "--n", "3", "--k", "1", "--format", "json"]);
    let nets: serde_json::Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    assert_eq!(nets.as_array().unwrap().len(), 3);
}

#[test]
fn verify_default_run_passes() {
    let out = spinal_bin(&["verify"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    let body = stdout_of(&out);
    assert!(body.contains("labeled-count-naive n=8 k=7: pass"));
    assert!(body.contains("series-closed-form n=8 k=8: pass"));
    let summary = body.lines().last().unwrap();
    assert!(summary.starts_with("summary: "));
    assert!(summary.ends_with("0 fail, 0 skipped"));
}

#[test]
fn verify_injected_fault_is_a_named_failure() {
    let out = spinal_bin(&[
        "verify",
        "--only",
        "labeled-count-naive",
        "--inject-fault",
        "labeled-count-naive",
    ]);
    assert_eq!(exit_code(&out), 2);
    let body = stdout_of(&out);
    assert!(body.contains("labeled-count-naive n=2 k=0: fail"));
    assert!(body.lines().last().unwrap().contains("0 pass"));
    assert!(stderr_of(&out).starts_with("error[verification-failure]:"));
}

#[test]
fn verify_only_selects_a_subset() {
    let out = spinal_bin(&["verify", "--only", "series-closed-form"]);
    assert_eq!(exit_code(&out), 0);
    let body = stdout_of(&out);
    assert_eq!(body.lines().count(), 2);
    assert_eq!(body.lines().next(), Some("series-closed-form n=8 k=8: pass"));
    assert_eq!(body.lines().last(), Some("summary: 1 pass, 0 fail, 0 skipped"));
}

#[test]
fn verify_unknown_identity_is_a_usage_error() {
    let out = spinal_bin(&["verify", "--only", "nonsense"]);
    assert_eq!(exit_code(&out), 1);
    let err = stderr_of(&out);
    assert!(err.starts_with("error[usage]: unknown identity \"nonsense\""));
    assert!(err.contains("labeled-count-naive"));
}

#[test]
fn verify_exhausted_budget_skips_cells() {
    let out = spinal_bin(&["verify", "--budget-seconds", "0"]);
    assert_eq!(exit_code(&out), 3);
    let body = stdout_of(&out);
    assert!(body.contains("skipped (budget exhausted)"));
    assert!(body.lines().last().unwrap().starts_with("summary: 0 pass, 0 fail,"));
    assert!(stderr_of(&out).starts_with("error[budget-exceeded]:"));
}

#[test]
fn enumeration_budget_exceeded_exits_three() {
    let out = spinal_bin(&["enumerate", "--family", "c1", "--n", "4", "--k", "2", "--max-objects", "10"]);
    assert_eq!(exit_code(&out), 3);
    assert!(stderr_of(&out).starts_with("error[budget-exceeded]:"));
}

#[test]
fn usage_errors_are_single_machine_parseable_lines() {
    let missing = spinal_bin(&["count", "--family", "stc", "--n", "3"]);
    assert_eq!(exit_code(&missing), 1);
    let err = stderr_of(&missing);
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("error[usage]:"));
    assert!(err.contains("--k"));

    let bad_family = spinal_bin(&["count", "--family", "zzz", "--n", "3", "--k", "1"]);
    assert_eq!(exit_code(&bad_family), 1);
    assert!(stderr_of(&bad_family).starts_with("error[usage]:"));
}

#[test]
fn class_membership_errors_name_the_violated_condition() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "word.txt", "n=2 k=1\n1,1,2,1,2\n");
    let out = spinal_bin(&["decode", &input]);
    assert_eq!(exit_code(&out), 1);
    let err = stderr_of(&out);
    assert!(err.starts_with("error[class-membership]:"));
    assert!(err.contains("adjacent"));
}

#[test]
fn dash_reads_standard_input() {
    use std::io::Write;
    use std::process::Stdio;

    let mut child = Command::new(env!("CARGO_BIN_EXE_spinal"))
        .args(["transform", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary should launch");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"L R1 L R2 L Q1 Q2 L\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "n=4 k=2\n3,1,2,1,1,2,2,4,3,4\n");
}

#[test]
fn output_is_byte_deterministic() {
    let args = ["enumerate", "--family", "nlsctc", "--n", "4", "--k", "2"];
    let first = spinal_bin(&args);
    let second = spinal_bin(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let verify_args = ["verify", "--only", "network-shape"];
    let va = spinal_bin(&verify_args);
    let vb = spinal_bin(&verify_args);
    assert_eq!(va.stdout, vb.stdout);
}
