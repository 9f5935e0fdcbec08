//! Dictionary-first stemming with an ordered suffix-rule fallback.
//!
//! A word token is first looked up in the [`Lexicon`]. On a miss the rule
//! table is scanned in order and the first rule whose suffix ends the token,
//! with at least [`min_stem`] word characters in front of it, rewrites the
//! ending. Matching works on coded lowercase text (see [`crate::translit`]).

use std::fmt;

use crate::normalize::{tokenize, Token};
use crate::rules::{builtin_lexicon, builtin_rules, Lexicon, RuleTable};
use crate::translit::{decode, encode, starts_with_code};

/// Which step produced a stem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mechanism {
    LexiconHit,
    RuleApplied(usize),
    NoChange,
}

impl fmt::Display for Mechanism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mechanism::LexiconHit => f.write_str("dict"),
            Mechanism::RuleApplied(index) => write!(f, "rule:{index}"),
            Mechanism::NoChange => f.write_str("none"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemResult {
    pub original: Token,
    /// The normalized coded form that was matched.
    pub coded: String,
    pub stem_coded: String,
    /// `stem_coded` with the special letters restored.
    pub stem: String,
    pub mechanism: Mechanism,
}

/// Characters that count toward the stem floor.
pub fn is_word_char(c: char) -> bool {
    c.is_ascii_lowercase() || c.is_ascii_digit()
}

/// Minimum number of characters that must stay in front of a stripped
/// suffix: 3 when the token starts with a coded special letter, 2 otherwise.
pub fn min_stem(coded_token: &str) -> usize {
    if starts_with_code(coded_token) {
        3
    } else {
        2
    }
}

/// Length in bytes of the prefix left by stripping `suffix`, if the rule may
/// fire on `text`.
fn stripped_prefix_len(text: &str, suffix: &str, floor: usize) -> Option<usize> {
    let prefix = text.strip_suffix(suffix)?;
    let guarded = prefix
        .chars()
        .rev()
        .take(floor)
        .filter(|&c| is_word_char(c));
    (guarded.count() == floor).then_some(prefix.len())
}

pub fn stem_token(token: &Token, table: &RuleTable, lexicon: &Lexicon) -> StemResult {
    let coded = token.text().to_owned();
    let (stem_coded, mechanism) = if !token.is_word() {
        (coded.clone(), Mechanism::NoChange)
    } else if let Some(canonical) = lexicon.get(&coded) {
        (canonical.to_owned(), Mechanism::LexiconHit)
    } else {
        let floor = min_stem(&coded);
        table
            .iter()
            .find_map(|rule| {
                stripped_prefix_len(&coded, rule.suffix(), floor).map(|keep| {
                    let mut stem = String::with_capacity(keep + rule.replacement().len());
                    stem.push_str(&coded[..keep]);
                    stem.push_str(rule.replacement());
                    (stem, Mechanism::RuleApplied(rule.index()))
                })
            })
            .unwrap_or_else(|| (coded.clone(), Mechanism::NoChange))
    };
    StemResult {
        original: token.clone(),
        stem: decode(&stem_coded),
        coded,
        stem_coded,
        mechanism,
    }
}

/// Runs the full pipeline: code, fold, tokenize, then stem each token.
pub fn stem_text(text: &str, table: &RuleTable, lexicon: &Lexicon) -> Vec<StemResult> {
    tokenize(&encode(text))
        .iter()
        .map(|token| stem_token(token, table, lexicon))
        .collect()
}

/// A rule table and lexicon bundled together.
#[derive(Debug, Clone, Copy)]
pub struct Stemmer<'a> {
    table: &'a RuleTable,
    lexicon: &'a Lexicon,
}

impl<'a> Stemmer<'a> {
    pub fn new(table: &'a RuleTable, lexicon: &'a Lexicon) -> Self {
        Stemmer { table, lexicon }
    }

    pub fn table(&self) -> &'a RuleTable {
        self.table
    }

    pub fn lexicon(&self) -> &'a Lexicon {
        self.lexicon
    }

    pub fn stem_token(&self, token: &Token) -> StemResult {
        stem_token(token, self.table, self.lexicon)
    }

    pub fn stem_text(&self, text: &str) -> Vec<StemResult> {
        stem_text(text, self.table, self.lexicon)
    }

    /// Stems of `text`, decoded, in token order.
    pub fn stems(&self, text: &str) -> Vec<String> {
        self.stem_text(text).into_iter().map(|r| r.stem).collect()
    }
}

impl Stemmer<'static> {
    /// Uses the built-in rules and lexicon.
    pub fn builtin() -> Self {
        Stemmer::new(builtin_rules(), builtin_lexicon())
    }
}

impl Default for Stemmer<'static> {
    fn default() -> Self {
        Self::builtin()
    }
}
