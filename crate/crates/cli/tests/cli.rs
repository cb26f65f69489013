use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn hfs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hfs"))
        .args(args)
        .output()
        .expect("spawn hfs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn relate_lists_every_relation() {
    let o = hfs(&["relate", &data("expression-types.json"), "A", "C"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    for line in ["A ⊂ₛ C", "C ⊂ₜ A", "A =ₛ C", "A ⊂ₛₒₜ C"] {
        assert!(out.contains(line), "missing {line:?} in\n{out}");
    }

    let o = hfs(&["relate", &data("expression-types.json"), "A", "B", "--json"]);
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["left"], "A");
    assert_eq!(json["elements"].as_array().unwrap().len(), 2);
}

#[test]
fn ops_evaluates_expressions() {
    let o = hfs(&["ops", &data("mean-failures.json"), "A & B"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("A ∩ B\n"), "{out}");
    assert!(out.contains("x  {0.8, 0.7, 0.1}"), "{out}");

    let o = hfs(&[
        "ops",
        &data("mean-failures.json"),
        "~(A ∪ B)",
        "--json",
        "--name",
        "D",
    ]);
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(json["sets"]["D"].is_object());

    let o = hfs(&["ops", &data("mean-failures.json"), "(A ∪ B"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("6"), "{}", stderr(&o));

    let o = hfs(&["ops", &data("mean-failures.json"), "A ∪ Q"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn rank_orders_and_draws() {
    let o = hfs(&["rank", &data("schemes.json"), "H", "--kind", "m"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let order: Vec<&str> = ["x6", "x4", "x2", "x3", "x1", "x5"]
        .into_iter()
        .filter(|x| out.contains(x))
        .collect();
    assert_eq!(order.len(), 6);
    let pos = |x: &str| out.find(&format!("  {x} ")).unwrap();
    assert!(pos("x6") < pos("x4") && pos("x4") < pos("x2") && pos("x1") < pos("x5"));
    assert!(out.contains("x2 =ₘ x3"), "{out}");

    let o = hfs(&["rank", &data("schemes.json"), "H", "--kind", "t"]);
    assert_eq!(o.status.code(), Some(2));

    let o = hfs(&["rank", &data("schemes.json"), "H", "--kind", "q"]);
    assert_eq!(o.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("h.dot");
    let o = hfs(&[
        "rank",
        &data("schemes.json"),
        "H",
        "--kind",
        "p",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph") && text.contains("->"), "{text}");

    let o = hfs(&["rank", &data("schemes.json"), "H", "--kind", "n", "--dot"]);
    assert!(stdout(&o).starts_with("digraph"));
}

#[test]
fn check_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let o = hfs(&[
        "check",
        "--law",
        "prop13.1",
        "--law",
        "exam-sec2.3-m-intersection",
        "--trials",
        "200",
        "--seed",
        "0x2a",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    let out = stdout(&o);
    assert!(
        out.contains("prop13.1") && out.contains("0 failed"),
        "{out}"
    );
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["passed"], true);
    assert_eq!(json["laws"].as_array().unwrap().len(), 2);
}

#[test]
fn proved_outcomes_do_not_depend_on_the_seed() {
    let run = |seed: &str| {
        let o = hfs(&[
            "check", "--trials", "300", "--seed", seed, "--law", "thm6.1", "--law", "prop13.1",
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
        let out = stdout(&o);
        out.lines()
            .filter(|l| l.starts_with("ok"))
            .map(str::to_owned)
            .collect::<Vec<_>>()
    };
    let a = run("1");
    assert_eq!(a.len(), 2);
    assert_eq!(a, run("99"));
}

#[test]
fn check_is_reproducible() {
    let run = |extra: &[&str]| {
        let mut args = vec![
            "check", "--trials", "100", "--seed", "7", "--law", "prop13.1", "--json",
        ];
        args.extend_from_slice(extra);
        stdout(&hfs(&args))
    };
    assert_eq!(run(&[]), run(&["--sequential"]));
}

#[test]
fn counterexamples_trace_the_failure() {
    let o = hfs(&["counterexamples", "exam-sec2.3-m-intersection"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("mean 8/15"), "{out}");
    assert!(out.contains("claim: FAILS"), "{out}");

    let o = hfs(&["counterexamples"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).matches("[REFUTED]").count() >= 15);
}

#[test]
fn unknown_law_is_an_error() {
    for args in [
        &["counterexamples", "no-such-law"][..],
        &["check", "--law", "no-such-law"],
    ] {
        let o = hfs(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains("no-such-law"));
    }
}

#[test]
fn ingest_builds_a_document() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.json");
    let o = hfs(&["ingest", &data("schemes.csv"), "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        std::fs::read_to_string(&out).unwrap(),
        std::fs::read_to_string(data("schemes.json")).unwrap()
    );

    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "scheme,expert,score\na,e1,1.2\n").unwrap();
    let o = hfs(&["ingest", bad.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn missing_file_is_an_error() {
    let o = hfs(&["relate", "/nonexistent.json", "A", "B"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: loading /nonexistent.json"));
}
