use std::io::Write;
use std::process::{Command, Output, Stdio};

fn szpiro(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_szpiro"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn passing_batch_exits_zero() {
    let o = szpiro(&["szpiro", "--checks", "ogg,szpiro162"], "11a1 0 -1 1 -10 -20\n0 0 0 0 0\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().count(), 2);
    assert!(String::from_utf8(o.stderr).unwrap().contains("records 2"));
}

#[test]
fn parse_error_exits_two() {
    let o = szpiro(&["szpiro"], "11a1 0 -1 1 -10 -20\n0 0 1 -1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 2"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(szpiro(&["szpiro", "--checks", "bogus"], "").status.code(), Some(2));
    assert_eq!(szpiro(&["nosuch"], "").status.code(), Some(2));
    assert_eq!(szpiro(&["theta", "1", "2", "3"], "").status.code(), Some(2));
    assert_eq!(szpiro(&["delta2", "0.1", "1.2"], "").status.code(), Some(2));
    assert_eq!(szpiro(&["constants", "--field", "1,2"], "").status.code(), Some(2));
}

#[test]
fn missing_file_exits_two() {
    let o = szpiro(&["frey", "--abc", "/nonexistent/triples.csv"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn frey_and_constants() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("t.csv");
    std::fs::write(&p, "1,8,9\n5,27,32\n").unwrap();
    let o = szpiro(&["frey", "--abc", p.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().count(), 2);
    let o = szpiro(&["constants", "--genus", "2"], "");
    let table = String::from_utf8(o.stdout).unwrap();
    assert!(table.contains("kappa_liu") && table.contains("c4_162"));
}

#[test]
fn delta2_is_seeded() {
    let args = ["delta2", "0.1", "1.3", "0.2", "0.4", "0.2", "0.4", "-0.15", "1.1", "--samples", "10000", "--seed", "3"];
    let a = szpiro(&args, "");
    let b = szpiro(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v["delta"].as_f64().unwrap() > -186.0);
}

#[test]
fn selftest_passes() {
    let o = szpiro(&["selftest"], "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
}
