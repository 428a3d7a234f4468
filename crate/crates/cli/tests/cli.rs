use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    run_with_stdin(args, "")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hopforce"))
        .args(args)
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

/// The headline value of a one-row plain output.
fn headline(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).split_whitespace().next().unwrap().to_string()
}

/// CSV rows keyed by header.
fn csv_rows(text: &str) -> Vec<std::collections::HashMap<String, String>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = r.headers().unwrap().iter().map(String::from).collect();
    r.records().map(|rec| header.iter().cloned().zip(rec.unwrap().iter().map(String::from)).collect()).collect()
}

#[test]
fn forcing_numbers() {
    assert_eq!(headline(&["number", "--family", "petersen", "--rule", "H"]), "6");
    assert_eq!(headline(&["number", "--family", "path", "8", "--rule", "Z"]), "1");
    assert_eq!(headline(&["number", "--g6", "@", "--rule", "H"]), "1");
}

#[test]
fn throttling_numbers() {
    assert_eq!(headline(&["throttle", "--family", "cycle", "16", "--rule", "H"]), "9");
    assert_eq!(headline(&["throttle", "--family", "complete", "4", "--rule", "H", "--product", "star"]), "inf");
    assert_eq!(headline(&["throttle", "--family", "path", "7", "--rule", "H", "--product", "star"]), "4");
}

#[test]
fn bound_rows() {
    let row = |args: &[&str]| {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0));
        csv_rows(&stdout(&o)).remove(0)
    };
    let p = row(&["bounds", "--family", "petersen"]);
    assert_eq!((p["lower"].as_str(), p["upper"].as_str(), p["exact"].as_str()), ("8", "9", "8"));
    let c = row(&["bounds", "--family", "cross"]);
    assert_eq!((c["lower"].as_str(), c["upper"].as_str(), c["exact"].as_str()), ("5", "5", "5"));
    let k1 = row(&["bounds", "--g6", "@"]);
    assert_eq!((k1["lower"].as_str(), k1["upper"].as_str(), k1["exact"].as_str()), ("1", "1", "1"));
    let skip = row(&["bounds", "--family", "petersen", "--no-exact"]);
    assert_eq!(skip["exact"], "");
}

#[test]
fn atlas_counts() {
    for (args, count) in [(["--th", "3"], 7), (["--th", "4"], 35), (["--forbidden", "1"], 108)] {
        let mut all = vec!["atlas"];
        all.extend(args);
        let o = run(&all);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        assert_eq!(text.lines().count(), count, "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains(&format!("\"count\":{count}")));
        for line in text.lines() {
            let check = run(&["bounds", "--g6", line, "--no-exact"]);
            assert_eq!(check.status.code(), Some(0), "{line}");
        }
    }
    assert_eq!(run(&["atlas", "--th", "9"]).status.code(), Some(2));
    assert_eq!(run(&["atlas", "--th", "3", "--forbidden", "1"]).status.code(), Some(2));
}

#[test]
fn verify_suite() {
    let o = run(&["verify", "--suite", "paper", "--only", "forcing-numbers,throttling"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 2);
    let bad = run(&["verify", "--suite", "paper", "--only", "1", "--inject-failure"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).starts_with("FAIL"));
    let spider = run(&["verify", "--suite", "paper", "--only", "spider"]);
    assert_eq!(spider.status.code(), Some(0));
    assert!(stdout(&spider).contains("strict-gap"));
    assert!(!String::from_utf8_lossy(&spider.stderr).is_empty());
    assert_eq!(run(&["verify", "--only", "nonsense"]).status.code(), Some(2));
}

#[test]
fn batch_rows_keep_order_and_report_errors_inline() {
    let input = "IheA@GUAo\nnot graph6!\n\n@\nC~\n";
    let o = run_with_stdin(&["number", "--file", "-", "--format", "csv"], input);
    assert_eq!(o.status.code(), Some(3));
    let rows = csv_rows(&stdout(&o));
    let got: Vec<(&str, &str, &str)> =
        rows.iter().map(|r| (r["graph6"].as_str(), r["value"].as_str(), r["status"].as_str())).collect();
    assert_eq!(got, vec![("IheA@GUAo", "6", "ok"), ("not graph6!", "", "error"), ("@", "1", "ok"), ("C~", "4", "ok")]);
    assert!(!rows[1]["error"].is_empty());
}

#[test]
fn output_is_independent_of_worker_count() {
    let input = "IheA@GUAo\nGhCGGC\nEhbw\nFFggW\nHurMJXz\n";
    let one = run_with_stdin(&["throttle", "--file", "-", "--format", "json", "--jobs", "1"], input);
    let four = run_with_stdin(&["throttle", "--file", "-", "--format", "json", "--jobs", "4"], input);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(run_with_stdin(&["throttle", "--file", "-", "--format", "json", "--jobs", "4"], input).stdout, one.stdout);
}

#[test]
fn printed_certificates_revalidate() {
    let input = "IheA@GUAo\nGhCGGC\nEhbw\n@\n";
    for args in [
        vec!["throttle", "--file", "-", "--format", "json", "--check"],
        vec!["throttle", "--file", "-", "--format", "json", "--rule", "Z"],
        vec!["throttle", "--file", "-", "--format", "json", "--product", "x"],
        vec!["number", "--file", "-", "--format", "json", "--rule", "floorZ"],
    ] {
        let o = run_with_stdin(&args, input);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let checked = run_with_stdin(&["check"], &stdout(&o));
        assert_eq!(checked.status.code(), Some(0), "{args:?}: {}", stdout(&checked));
        assert_eq!(stdout(&checked).lines().filter(|l| l.starts_with("ok")).count(), 4);
    }
    let o = run(&["throttle", "--family", "petersen", "--format", "json"]);
    let tampered = stdout(&o).replace("\"value\":8", "\"value\":7");
    let checked = run_with_stdin(&["check"], &tampered);
    assert_eq!(checked.status.code(), Some(1));
    assert_eq!(run_with_stdin(&["check"], "{not json").status.code(), Some(3));
}

#[test]
fn limits_fail_soft() {
    let o = run(&["throttle", "--family", "petersen", "--limit-states", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("\"status\":\"partial\""));
    assert_eq!(run(&["throttle", "--family", "petersen", "--limit-states", "0"]).status.code(), Some(2));
    assert_eq!(run(&["throttle", "--family", "petersen", "--limit-seconds", "-1"]).status.code(), Some(2));
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(run(&["number"]).status.code(), Some(2));
    assert_eq!(run(&["number", "--family", "path", "8", "--g6", "@"]).status.code(), Some(2));
    assert_eq!(run(&["number", "--family", "nosuch", "3"]).status.code(), Some(2));
    assert_eq!(run(&["number", "--family", "path", "x"]).status.code(), Some(2));
    assert_eq!(run(&["number", "--rule", "Q", "--g6", "@"]).status.code(), Some(2));
    assert_eq!(run(&["number", "--g6", "A!"]).status.code(), Some(3));
}
