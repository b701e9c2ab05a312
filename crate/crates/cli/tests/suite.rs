use szpiro_cli::cache::Cache;
use szpiro_cli::records::parse_curves;
use szpiro_cli::suite::{all_checks, parse_checks, run_suite, SuiteOptions};

const CURVES: &str = "\
11a1 0 -1 1 -10 -20
37a1 0 0 1 -1 0
27a1 0 0 1 0 0
";

fn run(text: &str, opts: &SuiteOptions) -> (String, szpiro_cli::report::Summary) {
    let recs = parse_curves(text).unwrap();
    let mut out = Vec::new();
    let s = run_suite(&recs, opts, &mut out).unwrap();
    (String::from_utf8(out).unwrap(), s)
}

#[test]
fn three_curves_three_lines() {
    let opts = SuiteOptions::new(parse_checks("szpiro162,ogg,integral_j_div").unwrap());
    let (out, s) = run(CURVES, &opts);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("\"11a1\"") && lines[2].contains("\"27a1\""));
    assert_eq!(s.records, 3);
    assert_eq!(s.pass + s.fail + s.skip, 9);
    assert_eq!(s.fail, 0);
}

#[test]
fn empty_file_gives_zero_summary() {
    let opts = SuiteOptions::new(parse_checks("ogg").unwrap());
    let (out, s) = run("# nothing\n", &opts);
    assert!(out.is_empty());
    assert_eq!(s, Default::default());
}

#[test]
fn reports_are_byte_identical() {
    let opts = SuiteOptions::new(all_checks().into_iter().map(String::from).collect());
    let (a, _) = run(CURVES, &opts);
    let (b, _) = run(CURVES, &opts);
    assert_eq!(a, b);
}

#[test]
fn cache_hit_gives_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let mut opts = SuiteOptions::new(all_checks().into_iter().map(String::from).collect());
    let (plain, _) = run(CURVES, &opts);
    opts.cache = Some(Cache::open(dir.path()).unwrap());
    let (cold, _) = run(CURVES, &opts);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 3);
    let (warm, _) = run(CURVES, &opts);
    assert_eq!(plain, cold);
    assert_eq!(cold, warm);
}

#[test]
fn singular_curve_does_not_abort_the_batch() {
    let text = "a 0 -1 1 -10 -20\nsing 0 0 0 0 0\nb 0 0 1 -1 0\n";
    let opts = SuiteOptions::new(all_checks().into_iter().map(String::from).collect());
    let (out, s) = run(text, &opts);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].contains("\"error\""));
    assert!(lines[2].contains("\"invariants\""));
    assert_eq!(s.errors, 1);
    assert_eq!(s.fail, 0);
}

#[test]
fn unknown_check_rejected() {
    assert!(parse_checks("ogg,bogus").is_err());
    assert!(parse_checks(" , ").is_err());
    assert_eq!(parse_checks("ogg,ogg").unwrap(), vec!["ogg".to_string()]);
}

#[test]
fn timing_only_on_request() {
    let mut opts = SuiteOptions::new(parse_checks("ogg").unwrap());
    assert!(!run(CURVES, &opts).0.contains("timing_ms"));
    opts.timing = true;
    assert!(run(CURVES, &opts).0.contains("timing_ms"));
}
