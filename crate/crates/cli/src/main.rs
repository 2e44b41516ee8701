//! `ordpart`: ordinal arithmetic, interval sets, finite partition checks and
//! derivations from the command line.
//!
//! Exit status: 0 on success or a true answer, 1 on a false answer or a
//! refutation, 2 on any error, 3 when a finite check is inconclusive.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use commands::{Failure, Outcome};

#[derive(Debug, Parser)]
#[command(
    name = "ordpart",
    version,
    about = "Ordinal arithmetic and partition relations"
)]
struct Cli {
    /// Emit a versioned JSON document on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Render ordinals with ω and ⟶ in text output.
    #[arg(long, global = true)]
    unicode: bool,
    #[command(subcommand)]
    command: Group,
}

#[derive(Debug, Subcommand)]
enum Group {
    /// Ordinal arithmetic.
    #[command(subcommand)]
    Ord(OrdCmd),
    /// Interval sets of ordinals.
    #[command(subcommand)]
    Iset(IsetCmd),
    /// Finite arrow relations and colorings.
    #[command(subcommand)]
    Ramsey(RamseyCmd),
    /// Derivations of partition relations.
    #[command(subcommand)]
    Em(EmCmd),
}

#[derive(Debug, Subcommand)]
pub enum OrdCmd {
    /// Evaluate to Cantor normal form.
    Eval { expr: String },
    /// Compare two ordinals.
    Cmp { left: String, right: String },
    /// List the (exponent, coefficient) terms.
    Cnf { expr: String },
    /// Is the ordinal indecomposable?
    Indecomp { expr: String },
    /// Split a decomposable ordinal into two smaller summands.
    Split { expr: String },
    /// Gödel code of an ordinal.
    Code { expr: String },
    /// Decode a natural number.
    Decode { code: String },
}

#[derive(Debug, Subcommand)]
pub enum IsetCmd {
    /// Order type of a set.
    Otype { set: String },
    /// Trim A1 to the part above x, keeping order type alpha.
    Trim(TrimArgs),
    /// Cut [0, beta) at the points of F.
    Segment(SegmentArgs),
    /// Split D into pieces of indecomposable order type.
    Strong(StrongArgs),
}

#[derive(Debug, Args)]
pub struct TrimArgs {
    #[arg(long = "A")]
    pub a: String,
    #[arg(long = "A1")]
    pub a1: String,
    #[arg(long)]
    pub x: String,
    #[arg(long)]
    pub alpha: String,
}

#[derive(Debug, Args)]
pub struct SegmentArgs {
    #[arg(long)]
    pub beta: String,
    /// Comma-separated, strictly increasing cut points.
    #[arg(long = "F", default_value = "")]
    pub f: String,
}

#[derive(Debug, Args)]
pub struct StrongArgs {
    #[arg(long = "D")]
    pub d: String,
    #[arg(long)]
    pub beta: String,
}

#[derive(Debug, Subcommand)]
pub enum RamseyCmd {
    /// Decide n -> (a, b, ...) for pairs.
    Check(CheckArgs),
    /// Least homogeneous set of a color in a tabulated coloring.
    Homog(HomogArgs),
    /// A coloring witnessing a negative relation.
    Witness(WitnessArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub n: usize,
    /// Comma-separated goal sizes, one per color.
    #[arg(long, value_delimiter = ',', required = true)]
    pub goals: Vec<usize>,
    /// Largest n searched exhaustively.
    #[arg(long, default_value_t = ordpart::partition::DEFAULT_EXHAUSTIVE_CAP)]
    pub cap: usize,
    /// A coloring document to check as a counterexample.
    #[arg(long)]
    pub witness: Option<String>,
}

#[derive(Debug, Args)]
pub struct HomogArgs {
    #[arg(long)]
    pub coloring: String,
    #[arg(long)]
    pub color: usize,
    #[arg(long)]
    pub size: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum WitnessKind {
    Sierpinski,
    Decomposable,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[arg(long, value_enum)]
    pub kind: WitnessKind,
    #[arg(long)]
    pub alpha: String,
    /// Tabulate on the first N ordinals below alpha in code order.
    #[arg(long)]
    pub sample: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum EmCmd {
    /// Derive w^(1+nu*n) -> (2^n, w^(1+nu)).
    Headline {
        #[arg(long)]
        nu: String,
        #[arg(long)]
        n: u64,
    },
    /// Derive w^(n*k) -> (w^n, k).
    Larson {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Check a derivation document.
    Verify { file: String },
}

fn report(json_mode: bool, failure: &Failure) {
    if json_mode {
        let doc = ordpart::json::document(
            "error",
            json!({ "error": { "code": failure.code, "message": failure.message } }),
        );
        eprintln!("{doc}");
    } else {
        eprintln!("error[{}]: {}", failure.code, failure.message);
    }
}

fn main() -> ExitCode {
    let json_mode = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            if json_mode {
                let message = e.to_string();
                let first = message.lines().next().unwrap_or_default();
                report(
                    true,
                    &Failure::new("usage", first.trim_start_matches("error: ")),
                );
            } else {
                let _ = e.print();
            }
            return ExitCode::from(2);
        }
    };
    let style = commands::Style {
        unicode: cli.unicode,
    };
    let result = match cli.command {
        Group::Ord(c) => commands::ord(c, style),
        Group::Iset(c) => commands::iset(c, style),
        Group::Ramsey(c) => commands::ramsey(c, style),
        Group::Em(c) => commands::em(c, style),
    };
    match result {
        Ok(Outcome { doc, text, status }) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("json renders")
                );
            } else {
                println!("{text}");
            }
            ExitCode::from(status as u8)
        }
        Err(f) => {
            report(cli.json, &f);
            ExitCode::from(2)
        }
    }
}
