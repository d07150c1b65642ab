use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn afp(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_afp")).current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

/// A temp dir holding `k9.qf` (left Andre-9) and `f9.qf` (GF(9)).
fn workspace() -> TempDir {
    let dir = TempDir::new().unwrap();
    let o = afp(dir.path(), &["andre", "--p", "3", "--n", "2", "--subfield-deg", "1", "--phi", "0,1", "--out", "k9.qf"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let o = afp(dir.path(), &["gf", "--p", "3", "--n", "2", "--out", "f9.qf"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    dir
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

#[test]
fn documented_andre_check_classify_session() {
    let dir = workspace();
    let text = fs::read_to_string(path(&dir, "k9.qf")).unwrap();
    assert!(text.starts_with("QF 1\nq 9\n"));
    assert_eq!(text.lines().count(), 2 + 2 * 81);

    let o = afp(dir.path(), &["check", "quasifield", "k9.qf"]);
    assert_eq!(code(&o), 0);
    let report = stdout(&o);
    for name in ["VW1", "VW2", "VW3", "VW4", "VW5", "VW4-r", "VW5-r"] {
        assert!(report.contains(name), "report lacks {name}:\n{report}");
    }

    let o = afp(dir.path(), &["classify", "k9.qf"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("non-desarguesian"));

    let o = afp(dir.path(), &["classify", "f9.qf"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("desarguesian"));
}

#[test]
fn plane_pipeline_round_trips_through_the_canonical_frame() {
    let dir = workspace();
    assert_eq!(code(&afp(dir.path(), &["convert", "k9.qf", "--out", "k9.trs"])), 0);
    assert_eq!(code(&afp(dir.path(), &["check", "ternary", "k9.trs"])), 0);
    let o = afp(dir.path(), &["plane", "build", "k9.trs", "--out", "k9.aplane"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(code(&afp(dir.path(), &["check", "plane", "k9.aplane"])), 0);

    let plane = fs::read_to_string(path(&dir, "k9.aplane")).unwrap();
    let lines: Vec<&str> = plane.lines().skip(3).collect();
    assert_eq!(lines.len(), 90);
    let m = lines.iter().position(|l| *l == "0 1 2 3 4 5 6 7 8").unwrap();
    let l = lines.iter().position(|l| *l == "0 9 18 27 36 45 54 63 72").unwrap();
    let o = afp(
        dir.path(),
        &["coordinatize", "k9.aplane", "--l", &l.to_string(), "--m", &m.to_string(), "--z", "10", "--out", "back.trs"],
    );
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(fs::read(path(&dir, "back.trs")).unwrap(), fs::read(path(&dir, "k9.trs")).unwrap());

    let o = afp(dir.path(), &["translate", "k9.aplane", "--from", "0", "--to", "1", "--out", "t.coll"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).starts_with("translation\n"));
    let coll = fs::read_to_string(path(&dir, "t.coll")).unwrap();
    assert!(coll.starts_with("COLL 1\npoints 81\n0 -> 1\n"));
}

#[test]
fn searches_report_verdicts_with_exit_zero() {
    let dir = workspace();
    for (qf, trs) in [("k9.qf", "k9.trs"), ("f9.qf", "f9.trs")] {
        assert_eq!(code(&afp(dir.path(), &["convert", qf, "--out", trs])), 0);
    }
    let o = afp(dir.path(), &["iso", "k9.trs", "f9.trs"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "not isomorphic\n"));
    let o = afp(dir.path(), &["iso", "f9.trs", "f9.trs"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "isomorphic\nmap 0 1 2 3 4 5 6 7 8\n");
    let o = afp(dir.path(), &["isotopy", "k9.trs", "f9.trs"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "not isotopic\n"));
}

#[test]
fn failing_axiom_checks_exit_one() {
    let dir = workspace();
    let text = fs::read_to_string(path(&dir, "k9.qf")).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    // The product 2*2 sits at offset 2 + 81 + 2*9 + 2.
    lines[2 + 81 + 20] = "0".into();
    fs::write(path(&dir, "bad.qf"), lines.join("\n") + "\n").unwrap();
    let o = afp(dir.path(), &["check", "quasifield", "bad.qf"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("axiom check failed"));
    assert_eq!(code(&afp(dir.path(), &["classify", "bad.qf"])), 1);
}

#[test]
fn malformed_input_exits_two_and_names_the_line() {
    let dir = workspace();
    let text = fs::read_to_string(path(&dir, "k9.qf")).unwrap();
    fs::write(path(&dir, "range.qf"), text.replacen("\n0\n", "\n9\n", 1)).unwrap();
    let o = afp(dir.path(), &["check", "quasifield", "range.qf"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 3:"), "{}", stderr(&o));

    fs::write(path(&dir, "space.qf"), text.replacen("q 9", "q 9 ", 1)).unwrap();
    let o = afp(dir.path(), &["classify", "space.qf"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 2:"), "{}", stderr(&o));

    fs::write(path(&dir, "short.qf"), &text[..text.len() / 2]).unwrap();
    assert_eq!(code(&afp(dir.path(), &["check", "quasifield", "short.qf"])), 2);

    for args in [
        &["check", "quasifield", "missing.qf"][..],
        &["classify", "k9.qf", "--bogus"],
        &["gf", "--p", "4", "--n", "1"],
        &["andre", "--p", "3", "--n", "2", "--subfield-deg", "1", "--phi", "1,0"],
        &["andre", "--p", "3", "--n", "2", "--subfield-deg", "1", "--phi", "0,1,1"],
        &["--jobs", "0", "classify", "k9.qf"],
    ] {
        let o = afp(dir.path(), args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!stderr(&o).is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_byte_identical_across_runs_and_job_counts() {
    let dir = workspace();
    let first = fs::read(path(&dir, "k9.qf")).unwrap();
    let again = afp(dir.path(), &["andre", "--p", "3", "--n", "2", "--subfield-deg", "1", "--phi", "0,1", "--out", "k9b.qf"]);
    assert_eq!(code(&again), 0);
    assert_eq!(fs::read(path(&dir, "k9b.qf")).unwrap(), first);

    let runs: Vec<Output> = ["1", "4"].iter().map(|j| afp(dir.path(), &["--jobs", j, "classify", "k9.qf"])).collect();
    assert_eq!(runs[0].stdout, runs[1].stdout);
    assert!(runs[0].stderr.is_empty());
}
