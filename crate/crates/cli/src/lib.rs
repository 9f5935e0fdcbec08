//! Command-line driver for the `srstem` stemmer.
//!
//! [`run`] takes explicit reader and writer handles so the binary and the
//! tests share one code path.

use std::fmt;
use std::fs;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};

use srstem::{
    builtin_lexicon, builtin_rules, evaluate, load_gold, load_lexicon, load_rules, DuplicateKey,
    Lexicon, LoadError, RuleTable, StemResult, Stemmer,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    /// Stems joined by single spaces, one output line per input line.
    #[default]
    Text,
    /// One stem per line.
    Lines,
    /// `original<TAB>stem<TAB>mechanism` per token.
    Tsv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Stem { input: Option<PathBuf> },
    Eval { gold: PathBuf },
    DumpRules,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub command: Command,
    pub rules_path: Option<PathBuf>,
    pub lexicon_path: Option<PathBuf>,
    pub format: Format,
    pub coded_output: bool,
}

impl CliConfig {
    pub fn new(command: Command) -> Self {
        CliConfig {
            command,
            rules_path: None,
            lexicon_path: None,
            format: Format::default(),
            coded_output: false,
        }
    }
}

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const UNREADABLE: i32 = 1;
    pub const MALFORMED: i32 = 2;
}

#[derive(Debug)]
enum Failure {
    Unreadable { what: String, source: io::Error },
    Malformed { path: PathBuf, source: LoadError },
}

impl Failure {
    fn status(&self) -> i32 {
        match self {
            Failure::Unreadable { .. } => exit::UNREADABLE,
            Failure::Malformed { .. } => exit::MALFORMED,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Unreadable { what, source } => write!(f, "cannot read {what}: {source}"),
            Failure::Malformed { path, source } => write!(f, "{}: {source}", path.display()),
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    let bytes = fs::read(path).map_err(|source| Failure::Unreadable {
        what: path.display().to_string(),
        source,
    })?;
    String::from_utf8(bytes).map_err(|e| Failure::Unreadable {
        what: path.display().to_string(),
        source: io::Error::new(io::ErrorKind::InvalidData, e),
    })
}

fn report_duplicates(path: &Path, warnings: &[DuplicateKey], err: &mut dyn Write) {
    for w in warnings {
        let _ = writeln!(err, "warning: {}: {w}", path.display());
    }
}

struct Tables {
    rules: Option<RuleTable>,
    lexicon: Option<Lexicon>,
}

impl Tables {
    fn load(config: &CliConfig, err: &mut dyn Write) -> Result<Self, Failure> {
        let rules = match &config.rules_path {
            Some(path) => {
                let loaded =
                    load_rules(&read_file(path)?).map_err(|source| Failure::Malformed {
                        path: path.clone(),
                        source,
                    })?;
                report_duplicates(path, &loaded.warnings, err);
                Some(loaded.value)
            }
            None => None,
        };
        let lexicon = match &config.lexicon_path {
            Some(path) => {
                let loaded =
                    load_lexicon(&read_file(path)?).map_err(|source| Failure::Malformed {
                        path: path.clone(),
                        source,
                    })?;
                report_duplicates(path, &loaded.warnings, err);
                Some(loaded.value)
            }
            None => None,
        };
        Ok(Tables { rules, lexicon })
    }

    fn stemmer(&self) -> Stemmer<'_> {
        Stemmer::new(
            self.rules.as_ref().unwrap_or_else(|| builtin_rules()),
            self.lexicon.as_ref().unwrap_or_else(|| builtin_lexicon()),
        )
    }
}

fn write_line(out: &mut dyn Write, line: &str) -> Result<(), Failure> {
    writeln!(out, "{line}").map_err(|source| Failure::Unreadable {
        what: "output stream".into(),
        source,
    })
}

fn render_results(
    results: &[StemResult],
    config: &CliConfig,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let stem = |r: &StemResult| {
        if config.coded_output {
            r.stem_coded.clone()
        } else {
            r.stem.clone()
        }
    };
    match config.format {
        Format::Text => {
            let line = results.iter().map(stem).collect::<Vec<_>>().join(" ");
            write_line(out, &line)?;
        }
        Format::Lines => {
            for r in results {
                write_line(out, &stem(r))?;
            }
        }
        Format::Tsv => {
            for r in results {
                let original = if config.coded_output {
                    r.coded.clone()
                } else {
                    srstem::decode(&r.coded)
                };
                write_line(out, &format!("{original}\t{}\t{}", stem(r), r.mechanism))?;
            }
        }
    }
    Ok(())
}

fn stem_stream(
    input: &mut dyn BufRead,
    what: &str,
    stemmer: &Stemmer<'_>,
    config: &CliConfig,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let mut line = String::new();
    let mut first = true;
    loop {
        line.clear();
        let n = input
            .read_line(&mut line)
            .map_err(|source| Failure::Unreadable {
                what: what.to_owned(),
                source,
            })?;
        if n == 0 {
            break;
        }
        let mut text = line.strip_suffix('\n').unwrap_or(&line);
        text = text.strip_suffix('\r').unwrap_or(text);
        if first {
            text = text.strip_prefix('\u{feff}').unwrap_or(text);
            first = false;
        }
        render_results(&stemmer.stem_text(text), config, out)?;
    }
    Ok(())
}

fn execute(
    config: &CliConfig,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let tables = Tables::load(config, err)?;
    let stemmer = tables.stemmer();
    match &config.command {
        Command::Stem { input: Some(path) } => {
            let file = fs::File::open(path).map_err(|source| Failure::Unreadable {
                what: path.display().to_string(),
                source,
            })?;
            let what = path.display().to_string();
            stem_stream(&mut BufReader::new(file), &what, &stemmer, config, out)
        }
        Command::Stem { input: None } => stem_stream(
            &mut BufReader::new(stdin),
            "standard input",
            &stemmer,
            config,
            out,
        ),
        Command::Eval { gold } => {
            let entries = load_gold(&read_file(gold)?).map_err(|source| Failure::Malformed {
                path: gold.clone(),
                source,
            })?;
            let report = evaluate(&entries, &stemmer);
            out.write_all(report.render().as_bytes())
                .map_err(|source| Failure::Unreadable {
                    what: "output stream".into(),
                    source,
                })
        }
        Command::DumpRules => out
            .write_all(stemmer.table().to_rule_file().as_bytes())
            .map_err(|source| Failure::Unreadable {
                what: "output stream".into(),
                source,
            }),
    }
}

/// Runs one command and returns the process exit status. Diagnostics go to
/// `err` only.
pub fn run(
    config: &CliConfig,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match execute(config, stdin, out, err) {
        Ok(()) => {
            let _ = out.flush();
            exit::OK
        }
        Err(failure) => {
            let _ = out.flush();
            let _ = writeln!(err, "srstem: {failure}");
            failure.status()
        }
    }
}
