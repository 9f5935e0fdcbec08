use thiserror::Error;

/// What is wrong with a single line of a rule, lexicon or gold file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineError {
    #[error("expected a TAB between the two fields")]
    MissingSeparator,
    #[error("more than two TAB-separated fields")]
    ExtraField,
    #[error("empty field")]
    EmptyField,
    #[error("illegal character {0:?}")]
    IllegalChar(char),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: LineError },
    #[error("rule table is empty")]
    Empty,
}
