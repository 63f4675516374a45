use burnside_cli::{parse_config, Command, Format};

#[test]
fn theorem_a_on_s3() {
    let c = parse_config(["theorem-a", "--group", "S3", "--primes", "3"]).unwrap();
    assert_eq!(c.group_spec, "S3");
    assert_eq!(c.primes.primes().collect::<Vec<_>>(), vec![3]);
    assert_eq!(c.command, Command::TheoremA);
    assert_eq!(c.format, Format::Text);
    assert_eq!(c.output_path, None);
}

#[test]
fn all_primes_mode() {
    let c = parse_config(["idempotents", "--group", "A5", "--primes", "all"]).unwrap();
    assert!(c.primes.is_all());
    assert_eq!(c.command, Command::Idempotents);
}

#[test]
fn flags_before_the_command() {
    let c = parse_config(["--group", "D8", "--format", "json", "--out", "r.json", "--max-order", "50", "splitting"]).unwrap();
    assert_eq!(c.format, Format::Json);
    assert_eq!(c.output_path.as_deref(), Some(std::path::Path::new("r.json")));
    assert_eq!(c.max_order, 50);
    assert_eq!(c.command, Command::Splitting);
}

#[test]
fn norm_needs_both_subgroups() {
    assert!(parse_config(["norm", "--group", "S3"]).is_err());
    assert!(parse_config(["norm", "--group", "S3", "--from", "(1,2)"]).is_err());
    let c = parse_config(["norm", "--group", "S3", "--from", "(1,2)", "--to", "(1,2,3); (1,2)"]).unwrap();
    assert_eq!(c.command, Command::Norm { from: "(1,2)".into(), to: "(1,2,3); (1,2)".into() });
}

#[test]
fn rejects_bad_input() {
    for argv in [
        vec!["marks", "--group", "S3", "--bogus"],
        vec!["marks"],
        vec!["marks", "--group", "(1,2"],
        vec!["marks", "--group", "F7"],
        vec!["marks", "--group", "S3", "--primes", "2,4"],
        vec!["marks", "--group", "S3", "--primes", "two"],
        vec!["marks", "--group", "S3", "--format", "xml"],
        vec!["marks", "--group", "S3", "--max-order", "0"],
        vec!["norm", "--group", "S3", "--from", "1,2", "--to", "(1,2)"],
        vec!["frobnicate", "--group", "S3"],
    ] {
        let err = parse_config(argv.clone()).unwrap_err();
        assert!(!err.is_informational(), "{argv:?}");
    }
}

#[test]
fn help_is_informational() {
    assert!(parse_config(["--help"]).unwrap_err().is_informational());
    assert!(parse_config(["--version"]).unwrap_err().is_informational());
}
