//! Rule-based stemmer for Serbian text written in Latin script.
//!
//! The pipeline codes the special letters `č ć ž š đ` as ASCII digraphs,
//! lowercases, splits punctuation into separate tokens, and stems each word:
//! irregular forms come from a lexicon, everything else goes through an
//! ordered list of suffix rewrite rules where the first match wins.
//!
//! ```
//! use srstem::Stemmer;
//!
//! let stems = Stemmer::builtin().stems("Žene su čitale knjige.");
//! assert_eq!(stems, ["že", "jesam", "čit", "knjig", "."]);
//! ```

pub mod error;
pub mod eval;
pub mod normalize;
pub mod rules;
pub mod stemmer;
pub mod translit;

pub use error::{LineError, LoadError};
pub use eval::{evaluate, load_gold, EvalError, EvalReport, GoldEntry};
pub use normalize::{case_fold, separate_punctuation, tokenize, Token, TokenKind};
pub use rules::{
    builtin_lexicon, builtin_rules, load_lexicon, load_rules, DuplicateKey, Lexicon, Loaded,
    RuleTable, SuffixRule,
};
pub use stemmer::{min_stem, stem_text, stem_token, Mechanism, StemResult, Stemmer};
pub use translit::{decode, encode};
