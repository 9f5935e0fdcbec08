use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use srstem_cli::{run, CliConfig, Command, Format};

/// Rule-based stemmer for Serbian Latin text.
#[derive(Debug, Parser)]
#[command(name = "srstem", version)]
struct Args {
    /// Rule file (`suffix<TAB>replacement` per line) replacing the built-in rules.
    #[arg(long, global = true, value_name = "PATH")]
    rules: Option<PathBuf>,

    /// Lexicon file (`form<TAB>canonical` per line) replacing the built-in lexicon.
    #[arg(long, global = true, value_name = "PATH")]
    dict: Option<PathBuf>,

    /// Output layout for `stem`.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Print stems in the coded form (cx, cy, zx, sx, dx) instead of decoding.
    #[arg(long, global = true)]
    coded: bool,

    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Stem a file, or standard input when no path is given.
    Stem { input: Option<PathBuf> },
    /// Evaluate against a gold file of `surface<TAB>expected_stem` lines.
    Eval { gold: PathBuf },
    /// Print the active rule table in rule-file format.
    Rules,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Lines,
    Tsv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Lines => Format::Lines,
            FormatArg::Tsv => Format::Tsv,
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = match args.command {
        Sub::Stem { input } => Command::Stem { input },
        Sub::Eval { gold } => Command::Eval { gold },
        Sub::Rules => Command::DumpRules,
    };
    let config = CliConfig {
        command,
        rules_path: args.rules,
        lexicon_path: args.dict,
        format: args.format.into(),
        coded_output: args.coded,
    };
    let status = run(
        &config,
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(status as u8)
}
