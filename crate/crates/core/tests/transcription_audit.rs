//! Checks the embedded tables against the verbatim PHP-array transcriptions.

use std::collections::HashSet;

use srstem::{builtin_lexicon, builtin_rules};

const RULE_ARRAY: &str = include_str!("../data/reference_rules.txt");
const LEXICON_ARRAY: &str = include_str!("../data/reference_lexicon.txt");

struct ArrayEntry {
    key: String,
    value: String,
    disabled: bool,
}

/// Parses `'key'=>'value',` lines; a leading `//` marks a disabled entry.
fn parse_array(src: &str) -> Vec<ArrayEntry> {
    src.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|line| {
            let line = line.trim();
            let disabled = line.starts_with("//");
            let body = line.trim_start_matches('/').trim();
            let mut quoted = body.split('\'');
            quoted.next();
            let key = quoted.next().expect("key").to_owned();
            assert_eq!(quoted.next(), Some("=>"), "{line}");
            let value = quoted.next().expect("value").to_owned();
            ArrayEntry {
                key,
                value,
                disabled,
            }
        })
        .collect()
}

fn code(s: &str) -> String {
    s.replace('č', "cx")
        .replace('ć', "cy")
        .replace('ž', "zx")
        .replace('š', "sx")
        .replace('đ', "dx")
}

#[test]
fn rule_table_matches_transcription() {
    let entries = parse_array(RULE_ARRAY);
    assert_eq!(entries.len(), 290);

    let disabled: Vec<&str> = entries
        .iter()
        .filter(|e| e.disabled)
        .map(|e| e.key.as_str())
        .collect();
    assert_eq!(disabled, ["uga", "k", "t", "n"]);

    let mut seen = HashSet::new();
    let expected: Vec<(String, String)> = entries
        .iter()
        .filter(|e| !e.disabled)
        .map(|e| (code(&e.key), code(&e.value)))
        .filter(|(k, _)| seen.insert(k.clone()))
        .collect();

    let actual: Vec<(String, String)> = builtin_rules()
        .iter()
        .map(|r| (r.suffix().to_owned(), r.replacement().to_owned()))
        .collect();
    assert_eq!(actual, expected);
    assert_eq!(actual.len(), 273);
    for key in disabled {
        assert!(builtin_rules().find(key).is_none());
    }
}

#[test]
fn duplicates_in_transcription() {
    let mut seen = HashSet::new();
    let dups: Vec<String> = parse_array(RULE_ARRAY)
        .into_iter()
        .filter(|e| !e.disabled)
        .filter(|e| !seen.insert(e.key.clone()))
        .map(|e| e.key)
        .collect();
    assert_eq!(
        dups,
        [
            "cyemo", "anje", "cima", "alja", "etu", "vsxi", "cu", "esx", "mo", "ci", "ko", "ac",
            "i"
        ]
    );
}

#[test]
fn lexicon_matches_transcription() {
    let entries = parse_array(LEXICON_ARRAY);
    assert_eq!(entries.len(), 68);
    let mut seen = HashSet::new();
    let mut distinct = 0;
    for e in &entries {
        let key = code(&e.key);
        if seen.insert(key.clone()) {
            distinct += 1;
            assert_eq!(builtin_lexicon().get(&key), Some(code(&e.value).as_str()));
        }
    }
    assert_eq!(distinct, 65);
    assert_eq!(builtin_lexicon().len(), 65);
}
