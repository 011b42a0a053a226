use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn slimlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slimlat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn verify_s7_script_passes() {
    let dir = tempfile::tempdir().unwrap();
    let script = write(dir.path(), "forks.seq", "grid 2 2\nfork 3 0\n");
    let o = slimlat(&["verify", "--script", &script]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("PASS dual-atoms"), "{text}");
    assert!(text.contains("t=2"));
    assert!(text.ends_with("checks 10 passed 10 failed 0\n"));
}

#[test]
fn verify_non_slim_lattice_fails_with_status_1() {
    let dir = tempfile::tempdir().unwrap();
    let m3 = "slimlat-lattice 1\nflags\nelements 5\ne 0 up 1 2 3 down\ne 1 up 4 down 0\ne 2 up 4 down 0\ne 3 up 4 down 0\ne 4 up down 1 2 3\n";
    let path = write(dir.path(), "m3.lat", m3);
    let o = slimlat(&["verify", "--lattice", &path]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL meet-sd"));
}

#[test]
fn build_round_trips_through_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let script = write(dir.path(), "s.seq", "grid 3 2\nfork 5 0\n");
    let lat = dir.path().join("s.lat");
    let dot = dir.path().join("s.dot");
    let o = slimlat(&[
        "build",
        "--script",
        &script,
        "--out",
        lat.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(fs::read_to_string(&lat)
        .unwrap()
        .starts_with("slimlat-lattice 1\nflags sps slim semimodular rectangular\n"));
    assert!(fs::read_to_string(&dot)
        .unwrap()
        .starts_with("digraph lattice {"));
    let a = slimlat(&["analyze", "--lattice", lat.to_str().unwrap()]);
    let b = slimlat(&["analyze", "--script", &script]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn search_c3_is_exhausted() {
    let o = slimlat(&["search", "--target", "c3", "--max-elements", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("exhausted: no witness"), "{text}");
    assert!(text.contains("bounds max_elements=10"));
}

#[test]
fn search_b2_finds_witness() {
    let o = slimlat(&["search", "--target", "b2", "--max-elements", "9"]);
    assert!(
        stdout(&o).contains("witness grid 2 2 elements 4"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn enumerate_is_deterministic_across_jobs_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cache = cache.to_str().unwrap();
    let a = slimlat(&["--jobs", "1", "enumerate", "--max-elements", "12"]);
    let b = slimlat(&[
        "--jobs",
        "4",
        "enumerate",
        "--max-elements",
        "12",
        "--cache",
        cache,
    ]);
    let c = slimlat(&[
        "--jobs",
        "2",
        "enumerate",
        "--max-elements",
        "12",
        "--cache",
        cache,
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a), stdout(&c));
    assert!(stdout(&a).contains("invariant_violations 0\n"));
}

#[test]
fn enumerate_seven() {
    let o = slimlat(&["enumerate", "--max-elements", "7"]);
    assert!(stdout(&o).contains("\ncount 3\n"));
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let script = write(dir.path(), "bad.seq", "grid 2 2\nfork x 0\n");
    let o = slimlat(&["verify", "--script", &script]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2, column 6"), "{err}");
    let o = slimlat(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_fork_reports_step() {
    let dir = tempfile::tempdir().unwrap();
    let script = write(dir.path(), "bad.seq", "grid 2 2\nfork 99 0\n");
    let o = slimlat(&["build", "--script", &script]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("step 1"));
}

#[test]
fn verify_corpus_is_deterministic() {
    let a = slimlat(&["--jobs", "1", "verify", "--max-elements", "9"]);
    let b = slimlat(&["--jobs", "3", "verify", "--max-elements", "9"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&b));
}
