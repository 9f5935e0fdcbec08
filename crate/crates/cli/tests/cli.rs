use std::io::Write;
use std::process::{Command, Output, Stdio};

use proptest::prelude::*;
use srstem::{encode, tokenize};

fn srstem(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_srstem"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn srstem");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

#[test]
fn text_format_keeps_lines() {
    let o = srstem(&["stem"], "Žene su čitale knjige.\n\nbih\n".as_bytes());
    assert!(o.status.success());
    assert_eq!(stdout(&o), "že jesam čit knjig .\n\nbiti\n");
    assert!(o.stderr.is_empty());
}

#[test]
fn lines_and_coded_output() {
    let o = srstem(
        &["--format", "lines", "--coded", "stem"],
        "Žene,".as_bytes(),
    );
    assert_eq!(stdout(&o), "zxe\n,\n");
    let o = srstem(&["--format", "tsv", "stem"], "Žene".as_bytes());
    assert_eq!(stdout(&o), "žene\tže\trule:78\n");
    let o = srstem(&["--format", "tsv", "--coded", "stem"], "Žene".as_bytes());
    assert_eq!(stdout(&o), "zxene\tzxe\trule:78\n");
}

#[test]
fn byte_order_mark_is_skipped() {
    let o = srstem(&["stem"], "\u{feff}bih\r\n".as_bytes());
    assert_eq!(stdout(&o), "biti\n");
}

#[test]
fn stem_reads_input_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.txt");
    std::fs::write(&path, "knjizi ona\n").unwrap();
    let o = srstem(&["stem", path.to_str().unwrap()], b"");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "knjig on\n");
}

#[test]
fn overrides_replace_builtins() {
    let dir = tempfile::tempdir().unwrap();
    let rules = dir.path().join("rules.tsv");
    let dict = dir.path().join("dict.tsv");
    std::fs::write(&rules, "# custom\nama\t\na\ta\na\t\n").unwrap();
    std::fs::write(&dict, "moći\tmoći\n").unwrap();
    let o = srstem(
        &[
            "--rules",
            rules.to_str().unwrap(),
            "--dict",
            dict.to_str().unwrap(),
            "--format",
            "tsv",
            "stem",
        ],
        "ženama bih moći".as_bytes(),
    );
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "ženama\tžen\trule:0\nbih\tbih\tnone\nmoći\tmoći\tdict\n"
    );
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(
        err.contains("duplicate key 'a'") && err.contains("different value"),
        "{err}"
    );

    let o = srstem(&["--rules", rules.to_str().unwrap(), "rules"], b"");
    assert_eq!(stdout(&o), "ama\t\na\ta\n");
}

#[test]
fn exit_statuses() {
    let o = srstem(&["stem", "/definitely/missing.txt"], b"");
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());

    let o = srstem(&["stem"], &[0xff, 0xfe, b'a', b'\n']);
    assert_eq!(o.status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.tsv");
    std::fs::write(&bad, "ok\tok\nbroken\n").unwrap();
    for args in [
        vec!["--rules", bad.to_str().unwrap(), "stem"],
        vec!["--dict", bad.to_str().unwrap(), "stem"],
        vec!["eval", bad.to_str().unwrap()],
    ] {
        let o = srstem(&args, b"");
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.contains("line 2"), "{err}");
    }

    let o = srstem(&["eval", "/definitely/missing.tsv"], b"");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn eval_prints_report() {
    let dir = tempfile::tempdir().unwrap();
    let gold = dir.path().join("gold.tsv");
    std::fs::write(&gold, "bih\tbiti\npevasmo\tpev\nknjizi\tknjig\nona\tbiti\n").unwrap();
    let o = srstem(&["eval", gold.to_str().unwrap()], b"");
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "accuracy=0.7500 correct=3 total=4\nERR ona expected=biti got=on\n"
    );
}

#[test]
fn rules_dump_starts_with_first_rule() {
    let o = srstem(&["rules"], b"");
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("ovnicxki\t\novnicxka\t\n"));
    assert_eq!(stdout(&o).lines().count(), 273);
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn text_output_preserves_token_count_per_line(
        lines in proptest::collection::vec("[a-zA-ZčćžšđŽ .,?!()-]{0,30}", 1..6)
    ) {
        let input = lines.join("\n") + "\n";
        let o = srstem(&["stem"], input.as_bytes());
        prop_assert!(o.status.success());
        let out: Vec<&str> = stdout(&o).lines().collect();
        prop_assert_eq!(out.len(), lines.len());
        for (line, rendered) in lines.iter().zip(out) {
            let expected = tokenize(&encode(line)).len();
            let got = rendered.split(' ').filter(|s| !s.is_empty()).count();
            prop_assert_eq!(got, expected);
        }
    }
}
