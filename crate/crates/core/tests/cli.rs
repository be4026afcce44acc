use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn youngbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_youngbound")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn assert_valid(schema_file: &str, doc: &Value) {
    let compiled = jsonschema::JSONSchema::compile(&schema(schema_file)).unwrap();
    let msgs: Vec<String> = match compiled.validate(doc) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    panic!("{schema_file}: {}", msgs.join("; "));
}

#[test]
fn exit_codes() {
    assert_eq!(youngbound(&["dim", "[3,2,1]"]).status.code(), Some(0));
    assert_eq!(stdout(&youngbound(&["dim", "[3,2,1]"])), "16\n");
    assert_eq!(youngbound(&["dim", "[1,2]"]).status.code(), Some(2));
    assert_eq!(youngbound(&["excited", "[2]", "[3]", "--count"]).status.code(), Some(2));
    assert_eq!(youngbound(&["decompose", "[3,2]"]).status.code(), Some(2));
    assert_eq!(youngbound(&["--help"]).status.code(), Some(0));
    assert_eq!(youngbound(&["--version"]).status.code(), Some(0));
}

#[test]
fn worked_examples_from_the_command_line() {
    assert_eq!(stdout(&youngbound(&["char", "[4,3,3]", "(3,3,2,1,1)"])), "2\n");
    assert_eq!(stdout(&youngbound(&["tableaux", "[4,3,3]", "(1,3,3,2,1)"])), "2\n");
    assert_eq!(stdout(&youngbound(&["tableaux", "[4,3,3]", "(3,3,2,1,1)"])), "12\n");
    assert_eq!(stdout(&youngbound(&["char", "[3,2]", "(3,1,1)", "--method", "branching"])), "-1\n");
    let d = stdout(&youngbound(&[
        "decompose",
        "[24,19,14,12,11,10,9,7,6,3,1]",
        "--cuts",
        "1,2,4,7",
        "--window",
        "18,36",
    ]));
    assert_eq!(d, "cuts: 1,2,4,7\nsizes: 34,26,33,23\nvalid (18,36)\n");
}

#[test]
fn excited_listing_draws_french_diagrams() {
    let o = youngbound(&["excited", "[2,2]", "[1]", "--list", "--draw"]);
    let text = stdout(&o);
    assert_eq!(text.matches("H = ").count(), 2);
    assert!(text.contains("o o\n# o\n"), "{text}");
    let u = stdout(&youngbound(&["--style", "unicode", "excited", "[2,2]", "[1]", "--draw"]));
    assert!(u.contains('■'));
}

#[test]
fn csv_header_and_file_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nested").join("diag.csv");
    let o = youngbound(&["verify", "thm-diag", "--n", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("thm-diag: "));
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,lambda,alpha_or_mu,lhs_num,lhs_den,rhs_num,rhs_den,implied_c_num,implied_c_den,satisfied"
    );
    // every (λ, α) with |λ| = |α| ≤ 5
    let expected: usize = [1usize, 2, 3, 5, 7].iter().map(|p| p * p).sum();
    assert_eq!(lines.count(), expected);
}

#[test]
fn config_file_sets_format_and_directory() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    let out_dir = dir.path().join("results");
    std::fs::write(&cfg, format!("format = json\nout_dir = {}\nbudget.oracle = 6\n", out_dir.display())).unwrap();
    let c = cfg.to_str().unwrap();
    let o = youngbound(&["--config", c, "verify", "oracle", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(out_dir.join("oracle.json")).unwrap()).unwrap();
    assert_valid("check_report.schema.json", &doc);
    assert_eq!(doc["check"], "oracle");
    assert_eq!(youngbound(&["--config", c, "verify", "oracle", "--n", "7"]).status.code(), Some(2));

    std::fs::write(&cfg, "colour = blue\n").unwrap();
    assert_eq!(youngbound(&["--config", c, "dim", "[1]"]).status.code(), Some(2));
}

#[test]
fn json_reports_match_their_schemas() {
    for (target, n) in [("thm-main", "5"), ("skew-bound", "5"), ("line-bounds", "6"), ("sharpness", "12")] {
        let o = youngbound(&["--format", "json", "verify", target, "--n", n]);
        assert_eq!(o.status.code(), Some(0), "{target}");
        let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_valid("sweep_report.schema.json", &doc);
        assert_eq!(doc["summary"]["count"].as_u64().unwrap() as usize, doc["records"].as_array().unwrap().len());
    }
    for target in ["orthogonality", "branching", "order"] {
        let o = youngbound(&["--format", "json", "--jobs", "2", "verify", target, "--n", "5"]);
        assert_eq!(o.status.code(), Some(0), "{target}");
        assert_valid("check_report.schema.json", &serde_json::from_slice(&o.stdout).unwrap());
    }
}

#[test]
fn thread_count_does_not_change_tables() {
    let one = youngbound(&["--jobs", "1", "verify", "general-bound", "--n", "7"]);
    let four = youngbound(&["--jobs", "4", "verify", "general-bound", "--n", "7"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn printed_partitions_parse_back() {
    let text = stdout(&youngbound(&["ribbons", "[4,3,3]", "3", "--list"]));
    let leftovers: Vec<&str> = text.lines().filter_map(|l| l.split(" leaves ").nth(1)).collect();
    assert!(!leftovers.is_empty());
    for shape in leftovers {
        assert_eq!(youngbound(&["dim", shape]).status.code(), Some(0), "{shape}");
    }
}
