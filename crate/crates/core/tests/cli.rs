mod common;

use std::io::Write;
use std::process::{Command, Stdio};

use omega_lie::cli::run;
use omega_lie::decomp_nd::deformability;
use omega_lie::document::{parse, serialize};
use omega_lie::{AlgebraSpec, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cli(args: &[&str], stdin: &str) -> omega_lie::cli::Outcome {
    let mut full = vec!["omega-lie"];
    full.extend_from_slice(args);
    run(full, &mut stdin.as_bytes())
}

fn binary(args: &[&str], stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_omega-lie"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

const IX_BAD_OMEGA: &str = r#"{
  "dim": 3,
  "c_entries": [[1, 2, 3, "1"], [1, 3, 2, "-1"], [2, 3, 1, "1"]],
  "omega_entries": [[1, 2, "1"]]
}"#;

#[test]
fn generate_pipes_into_classify() {
    let (code, doc) = binary(&["generate", "VIII_a", "--param", "1/2"], "");
    assert_eq!(code, 0);
    let (code, report) = binary(&["classify", "-"], &doc);
    assert_eq!(code, 0, "{report}");
    assert!(report.contains("label: VIII_a(a=0.5)"), "{report}");

    let (code, doc) = binary(
        &["orbit-sample", "VII_a", "--param", "2", "--seed", "7"],
        "",
    );
    assert_eq!(code, 0);
    let (code, report) = binary(&["--json", "classify"], &doc);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(v["label"], "VII_a");
    assert!((v["parameter"].as_f64().unwrap() - 2.0).abs() < 1e-9);
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn validate_exit_codes() {
    let abelian = r#"{"dim":3,"c_entries":[],"omega_entries":[]}"#;
    assert_eq!(cli(&["validate"], abelian).code, 0);

    let out = cli(&["validate"], IX_BAD_OMEGA);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("valid: false"));
    assert!(out.stdout.contains("R^"), "{}", out.stdout);

    let out = cli(&["--json", "validate"], IX_BAD_OMEGA);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["valid"], false);
    assert!(!v["residual"].as_array().unwrap().is_empty());

    let fixed = cli(&["--force-omega", "validate"], IX_BAD_OMEGA);
    assert_eq!(fixed.code, 0);

    assert_eq!(cli(&["classify"], IX_BAD_OMEGA).code, 1);
}

#[test]
fn bad_input_exits_with_two() {
    for (args, stdin) in [
        (vec!["validate"], "{ not json"),
        (vec!["validate"], r#"{"dim":3,"c_entries":[[1,2,3,"1/0"]]}"#),
        (vec!["validate"], r#"{"dim":3,"c_entries":[[2,1,3,"1"]]}"#),
        (vec!["generate", "X"], ""),
        (vec!["generate", "VI_a"], ""),
        (vec!["generate", "IX", "--param", "2"], ""),
        (vec!["decompose"], r#"{"dim":4}"#),
        (vec!["frobnicate"], ""),
        (vec!["validate", "/nonexistent/file.json"], ""),
    ] {
        let out = cli(&args, stdin);
        assert_eq!(out.code, 2, "{args:?}: {}", out.stdout);
        assert!(!out.stderr.is_empty());
    }
    let (code, _) = binary(&["validate"], "[]");
    assert_eq!(code, 2);
}

#[test]
fn tables_documents_round_trip_and_validate() {
    let out = cli(&["tables"], "");
    assert_eq!(out.code, 0);
    let (grid, docs) = out.stdout.split_once("\n\n").unwrap();
    assert_eq!(grid.lines().count(), 1 + 6 + 13);

    let mut sections = Vec::new();
    let mut current: Option<(String, String)> = None;
    for line in docs.lines() {
        if let Some(header) = line.strip_prefix("# ") {
            sections.extend(current.take());
            current = Some((header.to_string(), String::new()));
        } else if let Some((_, body)) = current.as_mut() {
            body.push_str(line);
            body.push('\n');
        }
    }
    sections.extend(current);
    let zero = sections
        .iter()
        .filter(|(h, _)| h.starts_with("a = 0:"))
        .count();
    let nonzero = sections
        .iter()
        .filter(|(h, _)| h.starts_with("a != 0:"))
        .count();
    assert_eq!((zero, nonzero), (6, 13));

    for (header, body) in &sections {
        let spec = parse(body).unwrap();
        let doc = omega_lie::document::AlgebraDocument::from_json(body).unwrap();
        let reserialized = omega_lie::document::AlgebraDocument::from_spec(&spec)
            .unwrap()
            .with_metadata("label", doc.metadata["label"].clone());
        let reserialized = match doc.metadata.get("parameter") {
            Some(p) => reserialized.with_metadata("parameter", p.clone()),
            None => reserialized,
        };
        assert_eq!(&reserialized.to_json(), body, "{header}");
        assert_eq!(cli(&["validate"], body).code, 0, "{header}");
    }

    let json = cli(&["--json", "tables"], "");
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    let rows: Vec<usize> = v["tables"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["rows"].as_array().unwrap().len())
        .collect();
    assert_eq!(rows, vec![6, 13]);
}

#[test]
fn decompose_reports_forced_b() {
    let (_, doc) = binary(&["generate", "IX_a", "--param", "1"], "");
    let out = cli(&["decompose"], &doc);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("b: (0, 0, -2)"), "{}", out.stdout);
    assert!(out.stdout.contains("t: (0, 0, 0)"));
}

/// Brute-force search over sparse integer brackets in dim 4 for one whose
/// forced candidate fails the identity.
fn dim4_counterexample() -> AlgebraSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    for _ in 0..10_000 {
        let mut c = AlgebraSpec::abelian(4);
        for _ in 0..3 {
            use rand::Rng;
            let i = rng.gen_range(0..3);
            let j = rng.gen_range(i + 1..4);
            c.set_bracket(i, j, rng.gen_range(0..4), common::random_int(&mut rng, 1));
        }
        if let Err(Error::NotDeformable { candidate }) = deformability(&c) {
            let with = c.with_omega(candidate).unwrap();
            assert!(!with.residual().unwrap().is_zero());
            return c;
        }
    }
    panic!("no dim-4 counterexample found");
}

#[test]
fn deformability_in_dimension_four() {
    let c = dim4_counterexample();
    let out = cli(&["deformability"], &serialize(&c).unwrap());
    assert_eq!(out.code, 1, "{}", out.stdout);
    assert!(out.stdout.contains("deformable: false"));

    let mut lie = AlgebraSpec::abelian(4);
    lie.set_bracket(0, 1, 2, omega_lie::scalar::int(1));
    let out = cli(&["deformability"], &serialize(&lie).unwrap());
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("deformable: true"));
}

#[test]
fn every_outcome_uses_a_known_exit_code() {
    for args in [
        vec!["--help"],
        vec!["--version"],
        vec![],
        vec!["tables", "--json"],
        vec!["orbit-sample", "IV", "--seed", "3"],
        vec!["orbit-sample", "IV"],
    ] {
        let code = cli(&args, "").code;
        assert!([0, 1, 2].contains(&code), "{args:?} -> {code}");
    }
}
