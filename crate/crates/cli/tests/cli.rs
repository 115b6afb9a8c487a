use std::path::Path;
use std::process::{Command, Output};

fn polybern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polybern"))
        .args(args)
        .env_remove("POLYBERN_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = polybern(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/fixtures")
            .join(name),
    )
    .unwrap()
}

/// Lines that differ between two renderings of the same shape.
fn differing_lines<'a>(a: &'a str, b: &'a str) -> Vec<(&'a str, &'a str)> {
    assert_eq!(a.lines().count(), b.lines().count());
    a.lines().zip(b.lines()).filter(|(x, y)| x != y).collect()
}

#[test]
fn markdown_tables_match_transcribed_fixtures() {
    for m in ["1", "2"] {
        let got = stdout(&["mstirling", "--m", m, "--rows", "7", "--format", "markdown"]);
        assert_eq!(got, fixture(&format!("mstirling_m{m}.md")), "m = {m}");
    }
    // The printed m = 3 table has one misprinted cell, R_5^5(3).
    let got = stdout(&[
        "mstirling",
        "--m",
        "3",
        "--rows",
        "7",
        "--format",
        "markdown",
    ]);
    let expected = fixture("mstirling_m3.md");
    let diff = differing_lines(&expected, &got);
    assert_eq!(diff.len(), 1);
    assert_eq!(diff[0].0.replace("1550", "1500"), diff[0].1);
}

#[test]
fn documented_examples() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["polybern", "--n", "0..6", "--k", "1", "--a", "1"],
            "1, 1/2, 1/6, 0, -1/30, 0, 1/42",
        ),
        (&["polybern", "--n", "2", "--k", "-1", "--a", "1"], "4"),
        (
            &["polybern", "--n", "0", "--m", "5", "--k", "3", "--a", "1/2"],
            "8",
        ),
        (
            &["poly", "--n", "1", "--m", "0", "--k", "1", "--a", "1"],
            "1/2 - x",
        ),
        (
            &[
                "poly", "--n", "0", "--m", "2", "--k", "2", "--a", "1", "--format", "json",
            ],
            "{\"coeffs\":[\"1\"]}",
        ),
        (
            &["poly", "--n", "1", "--m", "0", "--k", "-1", "--a", "1"],
            "2 - x",
        ),
        (&["second", "--n", "4", "--k", "2"], "7"),
        (&["lah", "--m", "3", "--k", "2"], "6"),
        (&["first", "--n", "4", "--k", "2"], "11"),
        (&["r", "--n", "3", "--i", "1", "--r", "2"], "19"),
        (&["weighted", "--n", "2", "--i", "1"], "1 + 2x"),
        (&["mstirling", "--m", "3", "--n", "7", "--k", "4"], "60817"),
        (
            &[
                "mstirling",
                "--m",
                "2",
                "--n",
                "1",
                "--k",
                "1",
                "--x",
                "1/2",
            ],
            "3",
        ),
    ];
    for (args, want) in cases {
        assert_eq!(stdout(args).trim_end(), *want, "{args:?}");
    }
}

#[test]
fn algorithms_agree() {
    let base = [
        "polybern", "--n", "0..6", "--m", "0..3", "--k", "-2", "--a", "3/2", "--format", "csv",
    ];
    let explicit = stdout(&base);
    for alg in ["form2", "matrix"] {
        let mut args = base.to_vec();
        args.extend(["--algorithm", alg]);
        assert_eq!(stdout(&args), explicit, "{alg}");
    }
    let negative = stdout(&[
        "polybern",
        "--n",
        "0..6",
        "--m",
        "0..3",
        "--k",
        "2",
        "--a",
        "3/2",
        "--negative",
        "--format",
        "csv",
    ]);
    assert_eq!(negative, explicit);
}

#[test]
fn bfile_output() {
    assert_eq!(
        stdout(&["second", "--n", "0..4", "--k", "1", "--format", "bfile"]),
        "0 0\n1 1\n2 1\n3 1\n4 1\n"
    );
    assert_eq!(
        stdout(&["lah", "--m", "1..4", "--k", "1", "--format", "bfile", "--offset", "10"]),
        "10 1\n11 2\n12 6\n13 24\n"
    );
    let out = polybern(&["polybern", "--n", "0..3", "--k", "1", "--format", "bfile"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("integer"));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("polybern-cli-{}.csv", std::process::id()));
    let out = polybern(&[
        "second",
        "--n",
        "0..3",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, "n\\k,0,1,2,3\n0,1\n1,0,1\n2,0,1,1\n3,0,1,3,1\n");
}

#[test]
fn chromatic_from_edge_list() {
    let path = std::env::temp_dir().join(format!("polybern-triangle-{}.txt", std::process::id()));
    std::fs::write(&path, "# triangle\nn 3\n0 1\n1 2\n0 2\n").unwrap();
    let file = path.to_str().unwrap();
    assert_eq!(stdout(&["chromatic", file]).trim_end(), "2x - 3x^2 + x^3");
    assert_eq!(
        stdout(&["chromatic", file, "--pbar", "--eval", "2"]).trim_end(),
        "24"
    );
    assert_eq!(
        stdout(&["chromatic", file, "--bruteforce", "2"]).trim_end(),
        "24"
    );
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| polybern(args).status.code();
    assert_eq!(code(&["verify", "tables"]), Some(0));
    assert_eq!(
        code(&["polybern", "--n", "1", "--k", "1", "--a", "-2"]),
        Some(2)
    );
    assert_eq!(
        code(&["polybern", "--n", "1", "--k", "1", "--a", "zero"]),
        Some(2)
    );
    assert_eq!(code(&["verify", "nonsense"]), Some(2));
    assert_eq!(code(&["second", "--n", "3..1"]), Some(2));
    assert_eq!(code(&["chromatic", "/nonexistent/graph.txt"]), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_polybern"))
        .args(["second", "--n", "20", "--k", "3"])
        .env("POLYBERN_MAX_N", "10")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("POLYBERN_MAX_N"));
}

#[test]
fn verify_reports() {
    assert!(stdout(&["verify", "tables"]).starts_with("tables: 3/3 exact"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "duality", "--format", "json"])).unwrap();
    assert_eq!(json["passed"], true);
    assert_eq!(json["suites"][0]["checks"][0]["points"], 121);
}

#[test]
fn verify_all_is_deterministic() {
    let first = polybern(&["verify", "all", "--seed", "42", "--format", "json"]);
    let second = polybern(&["verify", "all", "--seed", "42", "--format", "json"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let names: Vec<String> = serde_json::from_slice::<serde_json::Value>(&first.stdout).unwrap()
        ["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["suite"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(
        names,
        [
            "duality",
            "egf",
            "formulas",
            "graphs",
            "polynomials",
            "tables"
        ]
    );
}
