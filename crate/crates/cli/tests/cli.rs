use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_indpoly"))
        .args(args)
        .env_remove("INDPOLY_WORKERS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn poly_text_line() {
    let o = run(&["poly"], "Dhc\n");
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "Dhc 1 5 5 alpha=2 lc=yes um=yes\n");
}

#[test]
fn poly_json_and_expression_input() {
    let o = run(&["poly", "--json", "-e", "complete(3)"], "");
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["poly"], "1 3");
    assert_eq!(v["alpha"], 1);
}

#[test]
fn empty_input_is_fine() {
    let o = run(&["poly"], "");
    assert_eq!((code(&o), stdout(&o).as_str()), (0, ""));
}

#[test]
fn blank_and_comment_lines_are_skipped() {
    let o = run(&["poly"], "# pentagon\n\nDhc\n");
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn check_exit_codes() {
    assert_eq!(code(&run(&["check", "wp(2)"], "Dhc\n")), 0);
    let o = run(&["check", "quasireg(2/1)"], "Dhc\n");
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "Dhc quasireg(2/1)=false\n");
    assert_eq!(code(&run(&["check", "quasireg(3/2)"], "Dhc\n")), 0);
    assert_eq!(code(&run(&["check", "bogus"], "Dhc\n")), 2);
}

#[test]
fn bad_graph6_reports_line() {
    let o = run(&["poly"], "Dhc\n!!!\n");
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn classify_keeps_going_after_bad_records() {
    let o = run(&["classify"], "Dhc\n!!!\n@\n");
    assert_eq!(code(&o), 0);
    let rows: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["poly"], "1 5 5");
    assert_eq!(rows[0]["qr_threshold"], "3/2");
    assert!(rows[1]["error"].is_string());
    assert_eq!(rows[2]["one_well_covered"], serde_json::Value::Null);
}

#[test]
fn edge_list_format() {
    let o = run(&["check", "wellcovered", "--format", "edgelist"], "4 3\n0 1\n1 2\n2 3\n# next\n5 0\n");
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 2);
    assert_eq!(code(&run(&["poly", "--format", "edgelist"], "3 2\n0 1\n")), 2);
}

#[test]
fn gen_counts() {
    let o = run(&["gen", "--max-n", "5", "--filter", "connected"], "");
    assert_eq!(stdout(&o).lines().count(), 21);
    let o = run(&["gen", "--min-n", "1", "--max-n", "4"], "");
    assert_eq!(stdout(&o).lines().count(), 1 + 2 + 4 + 11);
}

#[test]
fn verify_streams_are_clean() {
    let conn = stdout(&run(&["gen", "--min-n", "1", "--max-n", "7", "--filter", "connected"], ""));
    let o = run(&["verify", "mthm"], &conn);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).starts_with("mthm: scanned=996 "));
    let free = stdout(&run(&["gen", "--min-n", "2", "--max-n", "7", "--filter", "isolate-free"], ""));
    assert_eq!(code(&run(&["verify", "th4"], &free)), 0);
    assert_eq!(code(&run(&["verify", "coeffs"], &free)), 0);
    assert_eq!(code(&run(&["hunt"], &conn)), 0);
}

#[test]
fn mthm_refuses_p2_without_override() {
    assert_eq!(code(&run(&["verify", "mthm", "--p", "2"], "Dhc\n")), 2);
    assert_eq!(code(&run(&["verify", "mthm", "--p", "2", "--allow-p2"], "Dhc\n")), 0);
}

#[test]
fn example_statement() {
    let o = run(&["verify", "example", "--m", "2", "--n", "24"], "");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("not log-concave at k=2"));
}

#[test]
fn corona_finds_edgeless_bases() {
    let o = run(&["verify", "corona", "--p-max", "2"], "Bw\nB?\n");
    assert_eq!(code(&o), 3);
    let s = stdout(&o);
    assert!(s.contains("violation B?:") && !s.contains("violation Bw:"), "{s}");
}

#[test]
fn json_report_and_detail_files() {
    let report = scratch("report.json");
    let detail = scratch("detail.jsonl");
    let o = run(
        &["verify", "th4", "-o", report.to_str().unwrap(), "--detail", detail.to_str().unwrap()],
        "Dhc\nBw\n",
    );
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["statement"], "th4");
    assert_eq!(v["graphs_scanned"], 2);
    assert_eq!(std::fs::read_to_string(&detail).unwrap().lines().count(), 2);
}

#[test]
fn workers_do_not_change_results() {
    let gs = stdout(&run(&["gen", "--max-n", "6"], ""));
    let one = run(&["classify", "--workers", "1"], &gs);
    let four = run(&["classify", "--workers", "4"], &gs);
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn construct_expression() {
    let o = run(&["construct", "corona(path(2),1)"], "");
    assert_eq!(code(&o), 0);
    let g6 = stdout(&o);
    let p = run(&["poly"], &g6);
    assert!(stdout(&p).contains(" 1 4 3 alpha=2"), "{}", stdout(&p));
    let bad = run(&["construct", "cycle(2)"], "");
    assert_eq!(code(&bad), 2);
}
