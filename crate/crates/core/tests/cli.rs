use std::process::Command;

fn bintab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bintab")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(line: &str) -> serde_json::Value {
    serde_json::from_str(line).expect("one JSON object per line")
}

#[test]
fn verify_passes_and_reports_every_suite() {
    let (code, out, _) = bintab(&["verify", "--n", "5", "--seed", "3"]);
    assert_eq!(code, 0);
    let report = json(out.trim());
    assert_eq!(report["ok"], true);
    assert_eq!(report["suites"].as_array().unwrap().len(), 10);
}

#[test]
fn verify_rejects_large_n_with_usage() {
    let (code, out, err) = bintab(&["verify", "--n", "99"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("Usage"), "{err}");
}

#[test]
fn bench_reports_closed_form_counts() {
    for (alg, g, e, nest) in [("td", 41, 24, 1), ("bu", 15, 1, 2)] {
        let (code, out, _) = bintab(&["bench", "--n", "4", "--alg", alg, "--problem", "digest"]);
        assert_eq!(code, 0);
        let r = json(out.trim());
        assert_eq!(r["g_calls"], g);
        assert_eq!(r["e_calls"], e);
        assert_eq!(r["peak_nesting"], nest);
        assert_eq!(r["result_digest"].as_str().unwrap().len(), 16);
    }
    let td = json(bintab(&["bench", "--n", "6", "--alg", "td", "--problem", "subtree-count"]).1.trim());
    let bu = json(bintab(&["bench", "--n", "6", "--alg", "bu", "--problem", "subtree-count"]).1.trim());
    assert_eq!(td["result_digest"], bu["result_digest"]);
}

#[test]
fn bench_enforces_size_limits() {
    assert_eq!(bintab(&["bench", "--n", "10", "--alg", "td", "--problem", "digest"]).0, 3);
    assert_eq!(bintab(&["bench", "--n", "21", "--alg", "bu", "--problem", "digest"]).0, 3);
}

#[test]
fn solve_prints_solution_then_stats() {
    let (code, out, _) = bintab(&["solve", "--problem", "min-removal-max", "--input", "3,1,2", "--alg", "td"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("6"));
    assert_eq!(json(lines.next().unwrap())["g_calls"], 10);
}

#[test]
fn solve_rejects_bad_input() {
    let (code, _, err) = bintab(&["solve", "--problem", "min-removal-sum", "--input", "1,x", "--alg", "bu"]);
    assert_eq!(code, 2);
    assert!(err.contains("not an integer"), "{err}");
    assert_eq!(bintab(&["solve", "--problem", "nope", "--input", "ab", "--alg", "bu"]).0, 2);
}

#[test]
fn render_text_and_ascii() {
    let (code, out, _) = bintab(&["render", "--input", "abcd", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"B(B(S("cd"),B(S("bd"),Z("bc"))),B(B(S("ad"),Z("ac")),Z("ab")))"#);
    let (_, ascii, _) = bintab(&["render", "--input", "abcd", "--k", "2", "--format", "ascii"]);
    assert_eq!(ascii, include_str!("golden/choose2_abcd.txt"));
    assert_eq!(bintab(&["render", "--input", "abc", "--k", "4"]).0, 2);
}
