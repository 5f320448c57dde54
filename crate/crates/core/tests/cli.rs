use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

use homtwist::suite::{BROKEN_MANIFEST, FAILING_MANIFEST, GOLDEN_MANIFEST};

const K2: &str = r#"{"kind": "hom_algebra", "constants": [[["1","0"],["0","0"]],[["0","0"],["0","1"]]]}"#;

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Scratch {
        static NEXT: AtomicUsize = AtomicUsize::new(0);
        let n = NEXT.fetch_add(1, Ordering::Relaxed);
        let dir = std::env::temp_dir().join(format!("homtwist-cli-{tag}-{}-{n}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let path = self.0.join(name);
        std::fs::write(&path, text).unwrap();
        path
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn homtwist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homtwist"))
        .args(args)
        .env("HOMTWIST_THREADS", "2")
        .output()
        .unwrap()
}

fn check(text: &str) -> Output {
    let dir = Scratch::new("check");
    let path = dir.file("m.json", text);
    homtwist(&["check", path.to_str().unwrap()])
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn golden_manifest_succeeds() {
    let out = check(GOLDEN_MANIFEST);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("23 of 23 tasks met their expectation"));
}

#[test]
fn failing_expectation_exits_one() {
    let out = check(FAILING_MANIFEST);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("UNEXPECTED"));
}

#[test]
fn syntax_error_exits_two_with_position() {
    let out = check(BROKEN_MANIFEST);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 10, column 5"), "{}", stderr(&out));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(homtwist(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(homtwist(&[]).status.code(), Some(2));
    assert_eq!(homtwist(&["check", "/nonexistent/manifest.json"]).status.code(), Some(2));
    assert_eq!(homtwist(&["--help"]).status.code(), Some(0));
}

#[test]
fn semantic_errors_exit_three() {
    let unknown = r#"{"tasks": [{"verb": "check_hom_algebra", "args": ["A"]}]}"#;
    assert_eq!(check(unknown).status.code(), Some(3));
    let verb = format!(r#"{{"objects": {{"A": {K2}}}, "tasks": [{{"verb": "explode", "args": ["A"]}}]}}"#);
    assert_eq!(check(&verb).status.code(), Some(3));
    let duplicate = format!(r#"{{"objects": {{"A": {K2}, "A": {K2}}}}}"#);
    assert_eq!(check(&duplicate).status.code(), Some(3));
    let arity = format!(r#"{{"objects": {{"A": {K2}}}, "tasks": [{{"verb": "ttp", "args": ["A"]}}]}}"#);
    assert_eq!(check(&arity).status.code(), Some(3));
}

#[test]
fn table_prints_products() {
    let dir = Scratch::new("table");
    let path = dir.file("m.json", &format!(r#"{{"objects": {{"A": {K2}}}}}"#));
    let out = homtwist(&["table", path.to_str().unwrap(), "A"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "   | e1 | e2\ne1 | e1 | 0\ne2 | 0  | e2\n");
    let missing = homtwist(&["table", path.to_str().unwrap(), "B"]);
    assert_eq!(missing.status.code(), Some(3));
}

#[test]
fn table_reaches_bound_and_gallery_objects() {
    let dir = Scratch::new("bound");
    let path = dir.file("golden.json", GOLDEN_MANIFEST);
    let p = path.to_str().unwrap();
    let out = homtwist(&["table", p, "G.product"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("e1⊗e1 | 2 e1⊗e1  | 2 e1⊗e2 | -e1⊗e1  | -2 e1⊗e2"), "{}", stdout(&out));
    assert_eq!(homtwist(&["table", p, "AA"]).status.code(), Some(0));
    assert_eq!(homtwist(&["table", p, "co"]).status.code(), Some(3));
}

#[test]
fn suite_filter_selects_criteria() {
    let out = homtwist(&["paper", "--filter", "ttp-table", "--bounds", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("ttp-table"));
    assert!(text.contains("1 of 1 criteria passed"), "{text}");
    let none = homtwist(&["paper", "--filter", "no-such-criterion"]);
    assert!(stdout(&none).contains("0 of 0 criteria passed"));
}

#[test]
fn thread_cap_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_homtwist"))
        .args(["paper", "--filter", "2"])
        .env("HOMTWIST_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
