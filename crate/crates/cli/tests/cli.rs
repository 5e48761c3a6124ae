use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_greedyconv"))
        .args(args)
        .env_remove("GREEDYCONV_OUTPUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn sift_text() {
    assert_eq!(
        stdout(&["sift", "--set", "2", "--n", "12", "--format", "text"]),
        "1 3 4 5 7 9 11 12\n"
    );
}

#[test]
fn greedy_parts() {
    let out = stdout(&["greedy", "--d", "3", "--n", "21", "--parts"]);
    assert_eq!(
        out,
        "(1, 2, 3)\n(4, 8, 12)\n(5, 10, 15)\n(6,)\n(7, 14, 21)\n"
    );
}

#[test]
fn closed_density() {
    assert_eq!(
        stdout(&["density", "--closed", "--p", "2", "--mod", "2", "--res", "0"]),
        "2/3\n"
    );
    let joint = [
        "density", "--closed", "--p", "2", "--mod", "2", "--res", "0", "--q", "3", "--q-mod", "2",
        "--q-res", "0",
    ];
    assert_eq!(stdout(&joint), "1/2\n");
}

#[test]
fn csv_has_header_and_trailing_newline() {
    let out = stdout(&[
        "greedy",
        "--d",
        "2",
        "--n",
        "10",
        "--primitives",
        "--format",
        "csv",
    ]);
    assert_eq!(out, "primitive\n1\n3\n4\n5\n7\n9\n");
    let out = stdout(&[
        "conv", "--rule", "unitary", "--n", "12", "--op", "divisors", "--format", "csv",
    ]);
    assert!(out.starts_with("n,divisors\n1,1\n"));
    assert!(out.ends_with("12,1 3 4 12\n"));
}

#[test]
fn json_schema() {
    let out = stdout(&[
        "conv",
        "--rule",
        "dirichlet",
        "--n",
        "6",
        "--f",
        "zeta",
        "--g",
        "zeta",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["meta"]["rule"], "dirichlet");
    assert_eq!(v["meta"]["f"], "zeta");
    assert!(v["meta"]["version"].is_string());
    let data = v["data"].as_array().unwrap();
    assert_eq!(data.len(), 6);
    assert_eq!(data[5]["value"], "4");
}

#[test]
fn mobius_with_rational_input() {
    let out = stdout(&[
        "conv", "--rule", "ternary", "--n", "4", "--op", "mobius", "--format", "csv",
    ]);
    assert_eq!(out, "n,mu\n1,1\n2,-1\n3,-1\n4,0\n");
    let out = stdout(&[
        "conv",
        "--rule",
        "unitary",
        "--n",
        "3",
        "--f",
        "values:1,-1/2",
        "--g",
        "e:1",
        "--format",
        "csv",
    ]);
    assert_eq!(out, "n,value\n1,1\n2,-1/2\n3,0\n");
}

#[test]
fn verification_failures_exit_one() {
    let out = run(&[
        "conv",
        "--rule",
        "parts:1,3",
        "--n",
        "100",
        "--op",
        "axioms",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["conv", "--rule", "greedy:3", "--n", "200", "--op", "axioms"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["sift", "--set", "1", "--n", "10"],
        &["sift", "--set", "6", "--n", "10", "--check"],
        &["greedy", "--d", "3", "--n", "10", "--parts", "--heights"],
        &["table", "table9"],
        &[
            "density", "--closed", "--p", "4", "--mod", "2", "--res", "0",
        ],
        &["conv", "--rule", "nope", "--n", "5", "--op", "mobius"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn sift_check_agrees() {
    let out = stdout(&[
        "sift", "--set", "2,3", "--n", "5000", "--check", "--format", "csv",
    ]);
    assert!(out.contains(",5000,true,"), "{out}");
}

#[test]
fn conjecture_search() {
    let out = stdout(&["conjecture-d4", "--n", "4000", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let row = |name: &str| {
        v["data"]
            .as_array()
            .unwrap()
            .iter()
            .find(|r| r["field"] == name)
            .unwrap()["values"]
            .clone()
    };
    assert_eq!(
        row("sift_set"),
        serde_json::json!([2, 3, 4, 8, 9, 16, 36, 72, 192, 384, 768, 1024, 2048])
    );
    assert_eq!(
        row("sporadic"),
        serde_json::json!([256, 1280, 1792, 2816, 3328])
    );
    assert_eq!(row("extra"), serde_json::json!([]));
}

#[test]
fn table_and_output_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_greedyconv"))
        .args([
            "table",
            "ternary_parts",
            "--format",
            "csv",
            "--output",
            "t1.csv",
        ])
        .env("GREEDYCONV_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(dir.path().join("t1.csv")).unwrap();
    assert!(text.starts_with("part,elements\n1,\"(1, 2)\"\n2,\"(3, 6)\"\n"));
    assert_eq!(text.lines().count(), 9);
}

#[test]
fn bfile_compare() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    let evens: Vec<String> = (1..=2000u64)
        .filter(|n| n.trailing_zeros() % 2 == 0)
        .enumerate()
        .map(|(i, n)| format!("{} {n}", i + 1))
        .collect();
    fs::write(&good, evens.join("\n")).unwrap();
    let good = good.to_str().unwrap();
    let args = [
        "bfile-compare",
        "--seq",
        "primitives",
        "--d",
        "2",
        "--n",
        "2000",
        "--bfile",
        good,
    ];
    assert_eq!(run(&args).status.code(), Some(0));
    let args = [
        "bfile-compare",
        "--seq",
        "sift",
        "--set",
        "2",
        "--n",
        "2000",
        "--bfile",
        good,
    ];
    assert_eq!(run(&args).status.code(), Some(0));

    let mut bad = evens.clone();
    bad[41] = "42 1".into();
    let bad_path = dir.path().join("bad.txt");
    fs::write(&bad_path, bad.join("\n")).unwrap();
    let out = run(&[
        "bfile-compare",
        "--seq",
        "primitives",
        "--d",
        "2",
        "--n",
        "2000",
        "--bfile",
        bad_path.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let want = format!("{},false,42,1,", evens.len());
    assert!(text.lines().nth(1).unwrap().starts_with(&want), "{text}");
}

#[test]
fn verify_single_criterion() {
    let out = run(&["verify", "--only", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("[PASS] 8."), "{text}");
}
