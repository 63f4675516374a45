use std::collections::BTreeMap;
use std::process::Command as Process;

use burnside_cli::document::*;
use burnside_cli::render::{from_json, to_json, to_text};
use burnside_cli::{parse_config, run, Format, EXIT_CAP, EXIT_OK, EXIT_USAGE};

fn doc(argv: &[&str]) -> ReportDocument {
    run(&parse_config(argv.iter().copied()).unwrap()).unwrap()
}

#[test]
fn s3_theorem_a_lists_the_single_pair_for_c2() {
    let d = doc(&["theorem-a", "--group", "S3", "--primes", "3"]);
    assert_eq!(d.exit_code(), EXIT_OK);
    let Payload::TheoremA(t) = &d.payload else { panic!("wrong payload") };
    assert!(t.report.verdict);
    let c2 = t.admissible.iter().find(|f| f.l == "2:0").unwrap();
    let admitted: Vec<(&str, &str)> = c2.pairs.iter().filter(|p| p.admissible).map(|p| (p.k.as_str(), p.h.as_str())).collect();
    assert_eq!(admitted, vec![("1:0", "3:0")]);
}

#[test]
fn a5_idempotents() {
    let d = doc(&["idempotents", "--group", "A5", "--primes", "all"]);
    let Payload::Idempotents(p) = &d.payload else { panic!("wrong payload") };
    assert_eq!(d.group.subgroups, 59);
    assert_eq!(p.perfect_classes, vec!["1:0", "60:0"]);
    let ones = |n: usize, at: &[usize]| -> Vec<String> { (0..n).map(|i| if at.contains(&i) { "1/1" } else { "0/1" }.to_string()).collect() };
    assert_eq!(p.idempotents[0].marks, ones(9, &[0, 1, 2, 3, 4, 5, 6, 7]));
    assert_eq!(p.idempotents[1].marks, ones(9, &[8]));
}

#[test]
fn c1_marks_is_one_by_one() {
    let d = doc(&["marks", "--group", "C1"]);
    let Payload::Marks(m) = &d.payload else { panic!("wrong payload") };
    assert_eq!(m.rows, vec![MarksRow { orbit: "1:0".into(), marks: vec![1] }]);
}

#[test]
fn s3_marks_rows_are_orbits() {
    let d = doc(&["marks", "--group", "S3"]);
    let Payload::Marks(m) = &d.payload else { panic!("wrong payload") };
    let rows: Vec<Vec<u64>> = m.rows.iter().map(|r| r.marks.clone()).collect();
    assert_eq!(rows, vec![vec![6, 0, 0, 0], vec![3, 1, 0, 0], vec![2, 0, 2, 0], vec![1, 1, 1, 1]]);
}

#[test]
fn norm_resolves_to_class_representatives() {
    let a = doc(&["norm", "--group", "S4", "--from", "(1,3)", "--to", "(1,3); (2,4)"]);
    let b = doc(&["norm", "--group", "S4", "--from", "(2,4)", "--to", "(1,3); (2,4)"]);
    let (Payload::Norm(x), Payload::Norm(y)) = (&a.payload, &b.payload) else { panic!("wrong payload") };
    assert_eq!(x.from, y.from);
    assert_eq!(x.images, y.images);
    assert!(x.to.subgroup.ends_with("/0"));
    assert!(x.verdict);
}

#[test]
fn norm_of_the_free_orbit_over_s3() {
    let d = doc(&["norm", "--group", "S3", "--primes", "3", "--from", "()", "--to", "(1,2,3)"]);
    let Payload::Norm(n) = &d.payload else { panic!("wrong payload") };
    // N_1^{A3} of the point 1 is the set of maps A3 → 1, a single point
    assert_eq!(n.images[0].norm_marks, vec!["1/1", "1/1"]);
    let c2 = n.descent.iter().find(|r| r.l == "2:0").unwrap();
    assert!(c2.star && c2.diamond && c2.division);
}

#[test]
fn json_round_trips_for_every_command() {
    for argv in [
        vec!["marks", "--group", "S4"],
        vec!["idempotents", "--group", "S4", "--primes", "2"],
        vec!["norm", "--group", "S4", "--from", "(1,2)", "--to", "(1,2,3,4); (1,2)"],
        vec!["theorem-a", "--group", "A4", "--primes", "3"],
        vec!["indexing-systems", "--group", "S3", "--primes", "none"],
        vec!["splitting", "--group", "Q8"],
        vec!["report", "--group", "S3", "--primes", "3"],
    ] {
        let d = doc(&argv);
        let json = to_json(&d);
        assert_eq!(from_json(&json).unwrap(), d, "{argv:?}");
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["payload"]["kind"], argv[0]);
    }
}

fn rationals(text: &str) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for token in text.split(|c: char| !(c.is_ascii_digit() || matches!(c, '/' | '-' | ':'))) {
        let mut parts = token.split('/');
        if let (Some(p), Some(q), None) = (parts.next(), parts.next(), parts.next()) {
            if p.trim_start_matches('-').parse::<u64>().is_ok() && q.parse::<u64>().is_ok() {
                *out.entry(token.to_string()).or_default() += 1;
            }
        }
    }
    out
}

#[test]
fn text_and_json_carry_the_same_numbers() {
    for argv in [
        vec!["idempotents", "--group", "S4", "--primes", "2"],
        vec!["norm", "--group", "S4", "--from", "(1,2)", "--to", "(1,2,3,4); (1,2)"],
        vec!["splitting", "--group", "A4"],
        vec!["report", "--group", "S3", "--primes", "3"],
    ] {
        let d = doc(&argv);
        let payload_json = serde_json::to_string(&d.payload).unwrap();
        assert_eq!(rationals(&to_text(&d)), rationals(&payload_json), "{argv:?}");
    }
    let d = doc(&["marks", "--group", "S4"]);
    let Payload::Marks(m) = &d.payload else { panic!("wrong payload") };
    let text = to_text(&d);
    let table = text.lines().skip_while(|l| !l.starts_with("table of marks")).skip(2);
    for (row, line) in m.rows.iter().zip(table) {
        let mut fields = line.split_whitespace();
        assert_eq!(fields.next(), Some(row.orbit.as_str()));
        let numbers: Vec<u64> = fields.map(|v| v.parse().unwrap()).collect();
        assert_eq!(numbers, row.marks);
    }
}

#[test]
fn json_is_stable_across_runs_and_thread_counts() {
    let config = parse_config(["report", "--group", "S4", "--primes", "2", "--format", "json"]).unwrap();
    assert_eq!(config.format, Format::Json);
    let render = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| to_json(&run(&config).unwrap()))
    };
    let one = render(1);
    assert_eq!(one, render(4));
    assert_eq!(one, render(1));
}

#[test]
fn run_errors_map_to_exit_codes() {
    let cap = run(&parse_config(["marks", "--group", "S6", "--max-order", "100"]).unwrap()).unwrap_err();
    assert_eq!(cap.exit_code(), EXIT_CAP);
    let outside = run(&parse_config(["norm", "--group", "S3", "--from", "(1,4)", "--to", "(1,2)"]).unwrap()).unwrap_err();
    assert_eq!(outside.exit_code(), EXIT_USAGE);
    let not_sub = run(&parse_config(["norm", "--group", "S3", "--from", "(1,2,3)", "--to", "(1,2)"]).unwrap()).unwrap_err();
    assert_eq!(not_sub.exit_code(), EXIT_USAGE);
}

fn binary(args: &[&str]) -> std::process::Output {
    Process::new(env!("CARGO_BIN_EXE_burnside")).args(args).output().unwrap()
}

#[test]
fn binary_exit_codes() {
    assert_eq!(binary(&["theorem-a", "--group", "S3", "--primes", "3"]).status.code(), Some(0));
    assert_eq!(binary(&["norm", "--group", "S3"]).status.code(), Some(1));
    assert_eq!(binary(&["marks", "--group", "S3", "--primes", "6"]).status.code(), Some(1));
    assert_eq!(binary(&["marks", "--group", "S5", "--max-order", "60"]).status.code(), Some(3));
    let help = binary(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&help.stdout).contains("theorem-a"));
}

#[test]
fn binary_writes_out_file() {
    let path = std::env::temp_dir().join(format!("burnside-cli-test-{}.json", std::process::id()));
    let out = binary(&["splitting", "--group", "S3", "--primes", "3", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let d = from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    let Payload::Splitting(s) = &d.payload else { panic!("wrong payload") };
    assert!(s.verdict);
    let c2 = s.factors.iter().find(|f| f.l == "2:0").unwrap();
    assert_eq!(c2.ranks, vec![0, 1, 0, 1]);
}
