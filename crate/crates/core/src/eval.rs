//! Accuracy evaluation against hand-stemmed gold data.

use std::fmt;

use crate::error::{LineError, LoadError};
use crate::normalize::is_separator;
use crate::stemmer::Stemmer;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldEntry {
    surface: String,
    expected_stem: String,
}

impl GoldEntry {
    /// Both fields must be non-empty and whitespace-free.
    pub fn new(surface: &str, expected_stem: &str) -> Result<Self, LineError> {
        for field in [surface, expected_stem] {
            if field.is_empty() {
                return Err(LineError::EmptyField);
            }
            if let Some(c) = field.chars().find(|&c| is_separator(c)) {
                return Err(LineError::IllegalChar(c));
            }
        }
        Ok(GoldEntry {
            surface: surface.to_owned(),
            expected_stem: expected_stem.to_owned(),
        })
    }

    pub fn surface(&self) -> &str {
        &self.surface
    }

    pub fn expected_stem(&self) -> &str {
        &self.expected_stem
    }
}

/// Parses `surface<TAB>expected_stem` lines.
pub fn load_gold(source: &str) -> Result<Vec<GoldEntry>, LoadError> {
    let source = source.strip_prefix('\u{feff}').unwrap_or(source);
    let mut entries = Vec::new();
    for (i, raw) in source.lines().enumerate() {
        let line = i + 1;
        let text = raw.strip_suffix('\r').unwrap_or(raw);
        if text.trim().is_empty() || text.starts_with('#') {
            continue;
        }
        let malformed = |reason| LoadError::Malformed { line, reason };
        let mut fields = text.split('\t');
        let surface = fields.next().unwrap_or_default().trim_matches(' ');
        let expected = fields
            .next()
            .ok_or(malformed(LineError::MissingSeparator))?
            .trim_matches(' ');
        if fields.next().is_some() {
            return Err(malformed(LineError::ExtraField));
        }
        entries.push(GoldEntry::new(surface, expected).map_err(malformed)?);
    }
    Ok(entries)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalError {
    pub surface: String,
    pub expected: String,
    /// The produced stem. For an invalid entry, all produced stems joined by `+`.
    pub actual: String,
    /// Set when the surface did not tokenize to exactly one word; holds the
    /// number of tokens it produced.
    pub invalid_tokens: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub total: usize,
    pub correct: usize,
    pub errors: Vec<EvalError>,
    pub accuracy: f64,
}

impl EvalReport {
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "accuracy={:.4} correct={} total={}",
            self.accuracy, self.correct, self.total
        )?;
        for e in &self.errors {
            write!(
                f,
                "ERR {} expected={} got={}",
                e.surface, e.expected, e.actual
            )?;
            if let Some(n) = e.invalid_tokens {
                write!(f, " invalid={n}-tokens")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Stems each gold surface on its own and compares it to the lowercased
/// expected stem. An empty gold set has accuracy 1.0.
pub fn evaluate(gold: &[GoldEntry], stemmer: &Stemmer<'_>) -> EvalReport {
    let mut errors = Vec::new();
    for entry in gold {
        let results = stemmer.stem_text(&entry.surface);
        let expected = entry.expected_stem.to_lowercase();
        let single_word = matches!(results.as_slice(), [r] if r.original.is_word());
        if single_word {
            if results[0].stem != expected {
                errors.push(EvalError {
                    surface: entry.surface.clone(),
                    expected,
                    actual: results[0].stem.clone(),
                    invalid_tokens: None,
                });
            }
        } else {
            let joined = results
                .iter()
                .map(|r| r.stem.as_str())
                .collect::<Vec<_>>()
                .join("+");
            errors.push(EvalError {
                surface: entry.surface.clone(),
                expected,
                actual: joined,
                invalid_tokens: Some(results.len()),
            });
        }
    }
    let total = gold.len();
    let correct = total - errors.len();
    let accuracy = if total == 0 {
        1.0
    } else {
        correct as f64 / total as f64
    };
    EvalReport {
        total,
        correct,
        errors,
        accuracy,
    }
}
