use rootminor_cli::commands::exit;
use rootminor_cli::document::Document;
use rootminor_cli::run_args;
use std::path::PathBuf;
use std::process::Command;
use tempfile::TempDir;

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(tempfile::tempdir().unwrap())
    }

    fn file(&self, name: &str, text: &str) -> String {
        let p: PathBuf = self.0.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    }
}

const K4: &str = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\ns 1 2 3 4\n";
// K4 on 1..4 with a pendant 5 on vertex 1, roots {5, 2, 3}.
const K4_PENDANT: &str = "p edge 5 7\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\ne 1 5\ns 5 2 3\n";
const C4: &str = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\ns 1 2 3 4\n";
const C5: &str = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\ns 1 2 3 4 5\n";

fn run(args: &[&str]) -> rootminor_cli::Outcome {
    let mut full = vec!["rootminor"];
    full.extend_from_slice(args);
    run_args(full)
}

#[test]
fn solve_exit_codes() {
    let d = Dir::new();
    let k4 = d.file("k4.txt", K4);
    let out = run(&["solve", &k4]);
    assert_eq!(out.code, exit::OK);
    assert!(matches!(
        Document::from_json(&out.stdout).unwrap(),
        Document::Minor(_)
    ));

    let p = d.file("p.txt", K4_PENDANT);
    let out = run(&["solve", &p]);
    assert_eq!(out.code, exit::NEGATIVE);
    assert!(matches!(
        Document::from_json(&out.stdout).unwrap(),
        Document::Coloring(_)
    ));

    let bad = d.file("bad.txt", "p edge 3 1\ne 1 4\n");
    let out = run(&["solve", &bad]);
    assert_eq!(out.code, exit::INPUT);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);

    let k5 = d.file(
        "k5.txt",
        &rootminor_cli::commands::generate(rootminor_cli::commands::GenKind::Critical5, 5, 0)
            .unwrap(),
    );
    assert_eq!(run(&["solve", &k5]).code, exit::PRECONDITION);

    let none = d.file("none.txt", "p edge 2 1\ne 1 2\n");
    assert_eq!(run(&["solve", &none]).code, exit::INPUT);
    assert_eq!(
        run(&["solve", &none, "--roots", "1,2"]).code,
        exit::NEGATIVE
    );
}

#[test]
fn verify_examples() {
    let d = Dir::new();
    let k4 = d.file("k4.txt", K4);
    let good = d.file(
        "good.json",
        r#"{"kind": "minor", "t": 4, "roots": [1, 2, 3, 4], "branch_sets": [[1], [2], [3], [4]]}"#,
    );
    assert_eq!(run(&["verify", &k4, &good]).code, exit::OK);
    let overlap = d.file(
        "overlap.json",
        r#"{"kind": "minor", "t": 4, "roots": [1, 2, 3, 4], "branch_sets": [[1, 2], [2], [3], [4]]}"#,
    );
    assert_ne!(run(&["verify", &k4, &overlap]).code, exit::OK);
    let c4 = d.file("c4.txt", C4);
    assert_ne!(run(&["verify", &c4, &good]).code, exit::OK);
    assert_eq!(
        run(&["verify", &k4, &good, "--kind", "coloring"]).code,
        exit::KIND_MISMATCH
    );
    let junk = d.file("junk.json", "{\"kind\": \"minor\"");
    assert_eq!(run(&["verify", &k4, &junk]).code, exit::INPUT);
}

#[test]
fn colorful_examples() {
    let d = Dir::new();
    let w5 = d.file(
        "w5.txt",
        &rootminor_cli::commands::generate(rootminor_cli::commands::GenKind::Wheel, 6, 0).unwrap(),
    );
    assert_eq!(run(&["check-colorful", &w5]).code, exit::OK);
    let c5 = d.file("c5.txt", C5);
    assert_eq!(run(&["check-colorful", &c5]).code, exit::OK);
    let p = d.file("p.txt", K4_PENDANT);
    let out = run(&["check-colorful", &p]);
    assert_eq!(out.code, exit::NEGATIVE);
    let cert = d.file("cert.json", &out.stdout);
    assert_eq!(run(&["verify", &p, &cert]).code, exit::OK);
}

#[test]
fn gen_examples() {
    let out = run(&["gen", "wheel", "6"]);
    assert_eq!(out.code, exit::OK);
    assert!(out.stdout.starts_with("p edge 6 10\n"));
    let a = run(&["gen", "random-3conn", "9", "--seed", "7"]);
    let b = run(&["gen", "random-3conn", "9", "--seed", "7"]);
    assert_eq!(a.code, exit::OK);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(run(&["gen", "critical5", "6"]).code, exit::UNSATISFIABLE);
    assert_eq!(run(&["gen", "wheel", "3"]).code, exit::UNSATISFIABLE);
    assert_eq!(run(&["gen", "planar", "100000"]).code, exit::INPUT);
    // K2 joined with C5: vertices 1 and 2 are the K2.
    let out = run(&["gen", "critical5", "7"]);
    assert!(out.stdout.starts_with("p edge 7 16\ne 1 2\n"));
}

#[test]
fn k5_examples() {
    let d = Dir::new();
    let k5 = d.file("k5.txt", &run(&["gen", "critical5", "5"]).stdout);
    let out = run(&["k5", &k5, "--vertex", "1"]);
    assert_eq!(out.code, exit::OK);
    let k4 = d.file("k4.txt", K4);
    let out = run(&["k5", &k4, "--vertex", "1"]);
    assert_eq!(out.code, exit::NOT_APPLICABLE);
    assert!(matches!(
        Document::from_json(&out.stdout).unwrap(),
        Document::NotApplicable(_)
    ));
    let join = d.file("join.txt", &run(&["gen", "critical5", "7"]).stdout);
    let out = run(&["k5", &join, "--vertex", "1"]);
    assert_eq!(out.code, exit::OK);
    match Document::from_json(&out.stdout).unwrap() {
        Document::Minor(m) => assert!(m.branch_sets.contains(&vec![1])),
        other => panic!("{other:?}"),
    }
    let cert = d.file("cert.json", &out.stdout);
    assert_eq!(run(&["verify", &join, &cert]).code, exit::OK);
}

#[test]
fn rooted_and_apex_commands() {
    let d = Dir::new();
    let k4 = d.file("k4.txt", K4);
    assert_eq!(run(&["rooted-k4", &k4]).code, exit::OK);
    assert_eq!(run(&["rooted-k3", &k4, "--roots", "1,2,3"]).code, exit::OK);
    assert_eq!(run(&["rooted-k3", &k4]).code, exit::INPUT);
    let c4 = d.file("c4.txt", C4);
    assert_eq!(run(&["rooted-k4", &c4]).code, exit::NEGATIVE);

    let out = run(&["planar-apex", &c4]);
    assert_eq!(out.code, exit::OK);
    let emb = d.file("emb.json", &out.stdout);
    assert_eq!(run(&["verify", &c4, &emb]).code, exit::OK);
    let out = run(&["planar-apex", &k4]);
    assert_eq!(out.code, exit::NEGATIVE);
    let w = d.file("w.json", &out.stdout);
    assert_eq!(
        run(&["verify", &k4, &w, "--kind", "kuratowski"]).code,
        exit::OK
    );
}

#[test]
fn trace_out_replays() {
    let d = Dir::new();
    let g = d.file(
        "g.txt",
        &run(&["gen", "random-3conn", "8", "--seed", "3"]).stdout,
    );
    let trace = d.0.path().join("trace.json");
    let out = run(&["solve", &g, "--trace-out", trace.to_str().unwrap()]);
    assert!(
        out.code == exit::OK || out.code == exit::NEGATIVE,
        "{out:?}"
    );
    assert_eq!(
        run(&["verify", &g, trace.to_str().unwrap(), "--kind", "trace"]).code,
        exit::OK
    );
}

#[test]
fn binary_reports_exit_codes() {
    let d = Dir::new();
    let k4 = d.file("k4.txt", K4);
    let bin = env!("CARGO_BIN_EXE_rootminor");
    let out = Command::new(bin).args(["solve", &k4]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("\"kind\": \"minor\""));
    let p = d.file("p.txt", K4_PENDANT);
    let out = Command::new(bin).args(["solve", &p]).output().unwrap();
    assert_eq!(out.status.code(), Some(10));
    let out = Command::new(bin)
        .args(["solve", "/nonexistent/file"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
