use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn splitfactor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitfactor"))
        .args(args)
        .env_remove("SPLITFACTOR_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn example() -> String {
    data("example.txt").display().to_string()
}

#[test]
fn verify_example_passes_every_check() {
    let o = splitfactor(&["verify", &example()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.starts_with("instance: "));
    assert!(
        out.ends_with("result: PASS (22 checks, 0 failures)\n"),
        "{out}"
    );
    assert!(!out.contains(" FAIL"));
}

#[test]
fn verify_machine_lines() {
    let o = splitfactor(&["verify", "--machine", &example()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 22);
    assert!(out.lines().all(|l| l.starts_with("CHECK ")));
    assert!(out.contains("CHECK formula-matches-enumeration PASS\n"));
    assert!(out.contains("CHECK diameter-bound PASS\n"));
}

#[test]
fn phi_listing_and_dot() {
    let o = splitfactor(&["phi", &example()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "# deg(S)=5 diameter=3\n1 2 1\n2 3 2\n3 4 2\n");
    let o = splitfactor(&["phi", "--dot", &example()]);
    let out = stdout(&o);
    assert!(out.contains("graph phi {"));
    assert!(out.contains("\"2\" -- \"3\""));
}

#[test]
fn moves_lists_each_switch_once() {
    let o = splitfactor(&["moves", &example()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 5);
    assert_eq!(out.lines().next(), Some("1 x 2 y"));
    for line in out.lines() {
        assert_eq!(line.split(' ').count(), 4, "{line}");
    }
}

#[test]
fn recognize_five_cycle_is_not_split() {
    let o = splitfactor(&["recognize", &data("c5.edges").display().to_string()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "NOT-SPLIT\n");
}

#[test]
fn recognize_path_then_feed_back() {
    let o = splitfactor(&["recognize", &data("p4.edges").display().to_string()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("K: x1 x2\nI: y1 y2\n"), "{text}");

    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    let path = f.path().display().to_string();
    let o = splitfactor(&["moves", &path]);
    assert_eq!(stdout(&o), "y1 x1 y2 x2\n");
}

#[test]
fn edge_list_input_is_recognized_for_other_subcommands() {
    let p4 = data("p4.edges").display().to_string();
    let o = splitfactor(&["phi", &p4]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "# deg(S)=1 diameter=1\ny1 y2 1\n");
    let o = splitfactor(&["verify", &data("c5.edges").display().to_string()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("NOT-SPLIT"));
}

#[test]
fn parse_error_reports_line_and_exits_one() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "K: x\nI: 1\n1 q").unwrap();
    let o = splitfactor(&["verify", &f.path().display().to_string()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn missing_file_exits_one() {
    let o = splitfactor(&["phi", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cannot read"));
}

#[test]
fn unknown_flag_exits_one() {
    let o = splitfactor(&["verify", "--nope", &example()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn small_exhaustive_sweep() {
    let o = splitfactor(&["sweep", "--kmax", "3", "--imax", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("512 instances, 0 failures\n"));
}

#[test]
fn full_four_by_four_sweep() {
    let o = splitfactor(&["sweep", "--kmax", "4", "--imax", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).lines().next(),
        Some("65536 instances, 0 failures")
    );
}

#[test]
fn random_sweep_is_deterministic_across_thread_counts() {
    let args = [
        "sweep", "--kmax", "6", "--imax", "6", "--mode", "random", "--count", "200", "--seed", "11",
    ];
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_splitfactor"))
            .args(args)
            .env("SPLITFACTOR_THREADS", threads)
            .output()
            .unwrap()
    };
    let a = run("1");
    let b = run("3");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("200 instances, 0 failures\n"));
    assert_eq!(run("zero").status.code(), Some(1));
}

#[test]
fn extremal_with_dot_and_checks() {
    let o = splitfactor(&["extremal", "5", "--dot", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("K: x1 x2 z1 z2\nI: y1 y2 y3 y4\n"), "{out}");
    assert!(out.contains("graph phi {"));
    assert_eq!(out.matches(" PASS\n").count(), 6);
}
