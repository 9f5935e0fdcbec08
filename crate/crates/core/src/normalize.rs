//! Case folding, punctuation spacing and whitespace tokenization.

use std::fmt;

/// The eight characters that always become tokens of their own.
pub const PUNCTUATION: [char; 8] = ['.', ',', '!', ':', '?', '(', ')', ';'];

pub fn is_punctuation(c: char) -> bool {
    PUNCTUATION.contains(&c)
}

/// Token separators: space, tab, newline and carriage return.
pub fn is_separator(c: char) -> bool {
    matches!(c, ' ' | '\t' | '\n' | '\r')
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Word,
    Punct,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    text: String,
    kind: TokenKind,
}

impl Token {
    /// Classifies a separator-free, non-empty piece of text.
    ///
    /// Returns `None` for empty text or text containing a separator.
    pub fn new(text: impl Into<String>) -> Option<Self> {
        let text = text.into();
        if text.is_empty() || text.chars().any(is_separator) {
            return None;
        }
        let mut chars = text.chars();
        let kind = match (chars.next(), chars.next()) {
            (Some(c), None) if is_punctuation(c) => TokenKind::Punct,
            _ => TokenKind::Word,
        };
        Some(Token { text, kind })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn kind(&self) -> TokenKind {
        self.kind
    }

    pub fn is_word(&self) -> bool {
        self.kind == TokenKind::Word
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// ASCII lowercase; everything else is left untouched.
pub fn case_fold(text: &str) -> String {
    text.to_ascii_lowercase()
}

/// Surrounds each punctuation mark with a single space, without doubling
/// existing separators and without padding the string ends.
pub fn separate_punctuation(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + text.len() / 4);
    let mut pending_space = false;
    for c in text.chars() {
        if pending_space && !is_separator(c) {
            out.push(' ');
        }
        pending_space = false;
        if is_punctuation(c) {
            if out
                .chars()
                .next_back()
                .is_some_and(|last| !is_separator(last))
            {
                out.push(' ');
            }
            pending_space = true;
        }
        out.push(c);
    }
    out
}

pub fn tokenize(text: &str) -> Vec<Token> {
    separate_punctuation(&case_fold(text))
        .split(is_separator)
        .filter_map(Token::new)
        .collect()
}
