use std::fs;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_sparing");

fn sparing(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("SPARING_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

/// Drops the volatile runtime_ms column from CSV output.
fn without_runtime(csv: &str) -> String {
    csv.lines()
        .map(|l| l.rsplit_once(',').map_or(l, |(head, _)| head))
        .map(|l| format!("{l}\n"))
        .collect()
}

#[test]
fn solve_golden() {
    let golden = include_str!("golden/solve.txt");
    let mut lines = golden.lines();
    while let Some(cmd) = lines.next() {
        let args: Vec<&str> = cmd.strip_prefix("$ ").unwrap().split(' ').collect();
        let want = lines.next().unwrap();
        for threads in ["1", "4"] {
            let mut full = vec!["--threads", threads];
            full.extend(&args);
            let o = sparing(&full);
            assert_eq!(code(&o), 0, "{cmd}");
            assert_eq!(stdout(&o).trim_end(), want, "{cmd} at {threads} threads");
        }
    }
}

#[test]
fn check_csv_golden() {
    let args = [
        "check",
        "--claim",
        "C1,C2,C4,C6,C8,C15,C16",
        "--format",
        "csv",
    ];
    let first = sparing(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(
        without_runtime(&stdout(&first)),
        include_str!("golden/check_csv.txt")
    );
    let summary = String::from_utf8(first.stderr.clone()).unwrap();
    assert_eq!(summary.trim(), "summary: rows=56 MATCH=53 MISMATCH=3");

    let threaded = Command::new(BIN)
        .args(args)
        .env("SPARING_THREADS", "8")
        .output()
        .unwrap();
    assert_eq!(
        without_runtime(&stdout(&threaded)),
        without_runtime(&stdout(&first))
    );
}

#[test]
fn check_examples() {
    let o = sparing(&["check", "--claim", "C1", "--n", "3..6"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("C1:")).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.contains(" MATCH ")));
    assert!(text.ends_with("summary: rows=4 MATCH=4 MISMATCH=0\n"));

    let o = sparing(&["check", "--claim", "C15", "--m", "4..7", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let verdicts: Vec<&str> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["verdict"].as_str().unwrap())
        .collect();
    assert_eq!(verdicts, ["MATCH", "MISMATCH", "MATCH", "MISMATCH"]);

    assert_eq!(code(&sparing(&["check", "--claim", "C99"])), 2);
    assert_eq!(code(&sparing(&["check", "--claim", "C2", "--n", "4"])), 2);
}

#[test]
fn certify_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 6] = [
        &["--family", "friendship", "--r", "2"],
        &["--family", "path", "--n", "2"],
        &["--family", "complete_sun", "--n", "5"],
        &["--family", "cactus_chain", "--cycles", "3,4,5"],
        &["--family", "complete_bipartite", "--parts", "3,4"],
        &["--family", "family=windmill;params=n=4,r=3"],
    ];
    for (i, source) in cases.iter().enumerate() {
        let path = dir.path().join(format!("f{i}.json"));
        let path = path.to_str().unwrap();
        let mut args = vec!["certify"];
        args.extend(*source);
        args.extend(["--out", path]);
        let o = sparing(&args);
        assert_eq!(code(&o), 0, "{source:?}");
        let line = stdout(&o);
        let phi = line
            .split(' ')
            .next()
            .unwrap()
            .strip_prefix("phi=")
            .unwrap()
            .to_string();
        assert_eq!(line, format!("phi={phi} mono={phi} verified=true\n"));

        let mut args = vec!["verify"];
        args.extend(*source);
        args.extend(["--labeling", path]);
        let o = sparing(&args);
        assert_eq!(code(&o), 0, "{source:?}");
        assert_eq!(stdout(&o), format!("weak-IASI: ok, mono={phi}\n"));
    }

    let w = dir.path().join("f0.json");
    let labels = fs::read_to_string(&w).unwrap();
    assert!(labels.contains("\"vertices\": 5"));
    assert!(
        stdout(&sparing(&["certify", "--family", "friendship", "--r", "2"])).starts_with("phi=2 ")
    );
    let p = fs::read_to_string(dir.path().join("f1.json")).unwrap();
    assert!(p.contains("\"vertices\": 2"));
}

#[test]
fn verify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    };
    let c3 = write(
        "c3.json",
        r#"{"vertices": 3, "labels": {"0": [1], "1": [2], "2": [3]}}"#,
    );
    let o = sparing(&["verify", "--family", "cycle", "--n", "3", "--labeling", &c3]);
    assert_eq!(
        (code(&o), stdout(&o)),
        (0, "weak-IASI: ok, mono=3\n".to_string())
    );

    let k2 = write(
        "k2.json",
        r#"{"vertices": 2, "labels": {"0": [1, 2], "1": [3, 4]}}"#,
    );
    let o = sparing(&[
        "verify",
        "--family",
        "complete",
        "--n",
        "2",
        "--labeling",
        &k2,
    ]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "WeakConditionViolated edge (0,1)\n");

    let missing = write(
        "m.json",
        r#"{"vertices": 3, "labels": {"0": [1], "1": [2]}}"#,
    );
    let o = sparing(&[
        "verify",
        "--family",
        "cycle",
        "--n",
        "3",
        "--labeling",
        &missing,
    ]);
    assert_eq!(code(&o), 2);

    let o = sparing(&["verify", "--family", "cycle", "--n", "4", "--labeling", &c3]);
    assert_eq!(code(&o), 2, "vertex count mismatch");
    let garbage = write("g.json", "{not json");
    let o = sparing(&[
        "verify",
        "--family",
        "cycle",
        "--n",
        "3",
        "--labeling",
        &garbage,
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn generate_and_solve_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("w.g");
    let g = g.to_str().unwrap();
    let o = sparing(&["generate", "--family", "wheel", "--m", "6", "--out", g]);
    assert_eq!(code(&o), 0);
    let o = sparing(&["solve", "--graph", g]);
    assert_eq!(
        stdout(&o),
        stdout(&sparing(&["solve", "--family", "wheel", "--m", "6"]))
    );

    let a = stdout(&sparing(&[
        "generate",
        "--random",
        "er",
        "--n",
        "12",
        "--density",
        "0.3",
        "--seed",
        "9",
    ]));
    let b = stdout(&sparing(&[
        "generate",
        "--random",
        "er",
        "--n",
        "12",
        "--density",
        "0.3",
        "--seed",
        "9",
    ]));
    assert_eq!(a, b);
    assert!(a.starts_with("p 12 "));
    let tree = stdout(&sparing(&[
        "generate", "--random", "tree", "--n", "9", "--seed", "1",
    ]));
    assert!(tree.starts_with("p 9 8\n"));

    let bad = dir.path().join("bad.g");
    fs::write(&bad, "p 3 1\ne 0 7\n").unwrap();
    assert_eq!(
        code(&sparing(&["solve", "--graph", bad.to_str().unwrap()])),
        2
    );
    assert_eq!(code(&sparing(&["solve", "--graph", "missing.g"])), 2);
    assert_eq!(code(&sparing(&["solve"])), 2);
}

#[test]
fn resource_limits_exit_3() {
    assert_eq!(
        code(&sparing(&["certify", "--family", "complete", "--n", "30"])),
        3
    );
    assert_eq!(
        code(&sparing(&["solve", "--family", "path", "--n", "65"])),
        3
    );
}
