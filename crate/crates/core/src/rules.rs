//! Ordered suffix rules and the irregular-word lexicon.
//!
//! Both use the same line format: `key<TAB>value`, with `#` comments and
//! blank lines ignored. Keys and values may be written with raw Serbian
//! letters; they are coded and lowercased at load time and must then consist
//! of `a-z` only.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{LineError, LoadError};
use crate::normalize::case_fold;
use crate::translit::encode;

const BUILTIN_RULES: &str = include_str!("../data/rules.tsv");
const BUILTIN_LEXICON: &str = include_str!("../data/lexicon.tsv");

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuffixRule {
    suffix: String,
    replacement: String,
    index: usize,
}

impl SuffixRule {
    pub fn suffix(&self) -> &str {
        &self.suffix
    }

    pub fn replacement(&self) -> &str {
        &self.replacement
    }

    /// Position in the owning table; lower indices are tried first.
    pub fn index(&self) -> usize {
        self.index
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleTable {
    rules: Vec<SuffixRule>,
}

impl RuleTable {
    /// Builds a table from already-coded `(suffix, replacement)` pairs.
    ///
    /// Applies the same validation and first-wins deduplication as
    /// [`load_rules`]; the line numbers in errors are 1-based pair positions.
    pub fn from_pairs<I, S, R>(pairs: I) -> Result<Loaded<RuleTable>, LoadError>
    where
        I: IntoIterator<Item = (S, R)>,
        S: AsRef<str>,
        R: AsRef<str>,
    {
        let lines = pairs
            .into_iter()
            .enumerate()
            .map(|(i, (s, r))| {
                let suffix = normalize_field(s.as_ref());
                let replacement = normalize_field(r.as_ref());
                validate(&suffix, false).map_err(|reason| LoadError::Malformed {
                    line: i + 1,
                    reason,
                })?;
                validate(&replacement, true).map_err(|reason| LoadError::Malformed {
                    line: i + 1,
                    reason,
                })?;
                Ok(Pair {
                    line: i + 1,
                    key: suffix,
                    value: replacement,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_lines(lines)
    }

    fn from_lines(lines: Vec<Pair>) -> Result<Loaded<RuleTable>, LoadError> {
        let (kept, warnings) = dedup_first_wins(lines);
        if kept.is_empty() {
            return Err(LoadError::Empty);
        }
        let rules = kept
            .into_iter()
            .enumerate()
            .map(|(index, pair)| SuffixRule {
                suffix: pair.key,
                replacement: pair.value,
                index,
            })
            .collect();
        Ok(Loaded {
            value: RuleTable { rules },
            warnings,
        })
    }

    pub fn rules(&self) -> &[SuffixRule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&SuffixRule> {
        self.rules.get(index)
    }

    pub fn find(&self, suffix: &str) -> Option<&SuffixRule> {
        self.rules.iter().find(|r| r.suffix == suffix)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SuffixRule> {
        self.rules.iter()
    }

    /// Renders the table in the rule file format, one rule per line.
    pub fn to_rule_file(&self) -> String {
        let mut out = String::new();
        for rule in &self.rules {
            out.push_str(&rule.suffix);
            out.push('\t');
            out.push_str(&rule.replacement);
            out.push('\n');
        }
        out
    }
}

impl<'a> IntoIterator for &'a RuleTable {
    type Item = &'a SuffixRule;
    type IntoIter = std::slice::Iter<'a, SuffixRule>;

    fn into_iter(self) -> Self::IntoIter {
        self.rules.iter()
    }
}

/// Whole-word map from an irregular inflected form to its canonical form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: HashMap<String, String>,
}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, form: &str) -> Option<&str> {
        self.entries.get(form).map(String::as_str)
    }

    pub fn contains(&self, form: &str) -> bool {
        self.entries.contains_key(form)
    }

    /// Adds or replaces an entry. Both sides are coded and lowercased.
    ///
    /// Returns the previous canonical form for that key, if any.
    pub fn insert(&mut self, form: &str, canonical: &str) -> Result<Option<String>, LineError> {
        let form = normalize_field(form);
        let canonical = normalize_field(canonical);
        validate(&form, false)?;
        validate(&canonical, false)?;
        Ok(self.entries.insert(form, canonical))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }
}

/// A successfully loaded table together with its non-fatal diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loaded<T> {
    pub value: T,
    pub warnings: Vec<DuplicateKey>,
}

impl<T> Loaded<T> {
    pub fn into_value(self) -> T {
        self.value
    }
}

/// A key repeated in a source file. The later occurrence was dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplicateKey {
    pub key: String,
    pub first_line: usize,
    pub line: usize,
    /// The dropped occurrence had a different value than the kept one.
    pub conflicting: bool,
}

impl fmt::Display for DuplicateKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}: duplicate key '{}' ignored, first defined on line {}",
            self.line, self.key, self.first_line
        )?;
        if self.conflicting {
            f.write_str(" with a different value")?;
        }
        Ok(())
    }
}

struct Pair {
    line: usize,
    key: String,
    value: String,
}

fn normalize_field(field: &str) -> String {
    case_fold(&encode(field.trim_matches(' ')))
}

fn validate(field: &str, allow_empty: bool) -> Result<(), LineError> {
    if field.is_empty() && !allow_empty {
        return Err(LineError::EmptyField);
    }
    match field.chars().find(|c| !c.is_ascii_lowercase()) {
        Some(c) => Err(LineError::IllegalChar(c)),
        None => Ok(()),
    }
}

fn dedup_first_wins(pairs: Vec<Pair>) -> (Vec<Pair>, Vec<DuplicateKey>) {
    let mut first_seen: HashMap<String, (usize, String)> = HashMap::new();
    let mut kept = Vec::with_capacity(pairs.len());
    let mut warnings = Vec::new();
    for pair in pairs {
        match first_seen.entry(pair.key.clone()) {
            Entry::Occupied(first) => {
                let (first_line, first_value) = first.get();
                warnings.push(DuplicateKey {
                    key: pair.key,
                    first_line: *first_line,
                    line: pair.line,
                    conflicting: *first_value != pair.value,
                });
            }
            Entry::Vacant(slot) => {
                slot.insert((pair.line, pair.value.clone()));
                kept.push(pair);
            }
        }
    }
    (kept, warnings)
}

/// Parses `key<TAB>value` lines. `value_required` controls whether a
/// missing or empty value is accepted.
fn parse_pairs(source: &str, value_required: bool) -> Result<Vec<Pair>, LoadError> {
    let source = source.strip_prefix('\u{feff}').unwrap_or(source);
    let mut pairs = Vec::new();
    for (i, raw) in source.lines().enumerate() {
        let line = i + 1;
        let text = raw.strip_suffix('\r').unwrap_or(raw);
        if text.trim().is_empty() || text.starts_with('#') {
            continue;
        }
        let malformed = |reason| LoadError::Malformed { line, reason };
        let mut fields = text.split('\t');
        let key = fields.next().unwrap_or_default();
        let value = fields
            .next()
            .ok_or(malformed(LineError::MissingSeparator))?;
        if fields.next().is_some() {
            return Err(malformed(LineError::ExtraField));
        }
        let key = normalize_field(key);
        let value = normalize_field(value);
        validate(&key, false).map_err(malformed)?;
        validate(&value, !value_required).map_err(malformed)?;
        pairs.push(Pair { line, key, value });
    }
    Ok(pairs)
}

/// Parses a rule file, preserving order and keeping the first occurrence of
/// each suffix.
pub fn load_rules(source: &str) -> Result<Loaded<RuleTable>, LoadError> {
    RuleTable::from_lines(parse_pairs(source, false)?)
}

/// Parses a lexicon file. An empty lexicon is allowed.
pub fn load_lexicon(source: &str) -> Result<Loaded<Lexicon>, LoadError> {
    let (kept, warnings) = dedup_first_wins(parse_pairs(source, true)?);
    let entries = kept.into_iter().map(|p| (p.key, p.value)).collect();
    Ok(Loaded {
        value: Lexicon { entries },
        warnings,
    })
}

/// The built-in rule table, transcribed from the reference implementation.
pub fn builtin_rules() -> &'static RuleTable {
    static TABLE: OnceLock<RuleTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        load_rules(BUILTIN_RULES)
            .expect("embedded rule table is valid")
            .value
    })
}

/// The built-in irregular-verb lexicon (biti, jesam, hteti, moći).
pub fn builtin_lexicon() -> &'static Lexicon {
    static LEXICON: OnceLock<Lexicon> = OnceLock::new();
    LEXICON.get_or_init(|| {
        load_lexicon(BUILTIN_LEXICON)
            .expect("embedded lexicon is valid")
            .value
    })
}

/// Raw text of the embedded rule file.
pub fn builtin_rules_source() -> &'static str {
    BUILTIN_RULES
}

/// Raw text of the embedded lexicon file.
pub fn builtin_lexicon_source() -> &'static str {
    BUILTIN_LEXICON
}
