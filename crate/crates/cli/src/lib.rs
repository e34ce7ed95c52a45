//! Command surface for the `equidouble` binary.

pub mod acceptance;
pub mod commands;
mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use equidouble_core::dw::HomBudget;
use equidouble_core::groups::{EXTENSION_NAMES, GROUP_NAMES};
use equidouble_core::hopf::CheckMode;
use equidouble_core::Error;
use serde_json::Value;

pub use render::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser, Debug)]
#[command(
    name = "equidouble",
    version,
    about = "Exact computations for equivariant Dijkgraaf-Witten theory"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Cap on enumerated tuples for Hom and cochain enumeration.
    #[arg(long, global = true, default_value_t = 50_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_homs: u64,
    /// Largest algebra dimension checked exhaustively.
    #[arg(long, global = true, default_value_t = 144, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_dim: u64,
    /// Check axioms on a seeded random sample of basis tuples.
    #[arg(long, global = true)]
    pub sampled: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl Options {
    pub fn hom_budget(&self) -> HomBudget {
        HomBudget {
            max_tuples: self.budget_homs as u128,
            ..HomBudget::default()
        }
    }

    pub fn check_mode(&self) -> CheckMode {
        if self.sampled {
            CheckMode::Sampled { samples: 4096, seed: 0 }
        } else {
            CheckMode::Exhaustive
        }
    }
}

impl Default for Options {
    fn default() -> Self {
        Options {
            budget_homs: 50_000_000,
            budget_dim: 144,
            sampled: false,
            format: Format::Json,
            out: None,
        }
    }
}

fn group_arg() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(GROUP_NAMES)
}

fn extension_arg() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(EXTENSION_NAMES)
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Dijkgraaf-Witten invariant of a presented 3-manifold group.
    Dw {
        #[arg(long)]
        presentation: String,
        #[arg(long, value_parser = group_arg())]
        group: String,
    },
    /// Hopf and ribbon axioms of the Drinfel'd double D(G).
    Double {
        #[arg(long, value_parser = group_arg())]
        group: String,
    },
    /// Hopf, J-Hopf and ribbon checks of the equivariant double.
    Jdouble {
        #[arg(long, value_parser = extension_arg())]
        extension: String,
    },
    /// Orbifold algebra and the isomorphism with D(H).
    Orbifold {
        #[arg(long, value_parser = extension_arg())]
        extension: String,
    },
    /// Unnormalised S-matrix of D(G).
    Smatrix {
        #[arg(long, value_parser = group_arg())]
        group: String,
    },
    /// Simple modules of the equivariant double, or of D(G).
    Simples {
        #[arg(long, value_parser = extension_arg(), conflicts_with = "group", required_unless_present = "group")]
        extension: Option<String>,
        #[arg(long, value_parser = group_arg())]
        group: Option<String>,
    },
    /// Braided J-equivariant diagrams on all simples.
    VerifyCategory {
        #[arg(long, value_parser = extension_arg())]
        extension: String,
    },
    /// Every check for one extension.
    VerifyAll {
        #[arg(long, value_parser = extension_arg())]
        extension: String,
    },
    /// Twisted Čech classes on the three-arc circle against the twisted sector.
    Cech {
        #[arg(long, value_parser = extension_arg())]
        extension: String,
        /// Monodromy as an index into J (0 is the identity).
        #[arg(long, default_value_t = 0)]
        monodromy: usize,
    },
    /// Twisted sectors H_j//G.
    Sectors {
        #[arg(long, value_parser = extension_arg())]
        extension: String,
    },
    /// Built-in groups, extensions, presentations and nerves.
    Catalogue,
}

/// A finished computation: the report and whether every check passed.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub pass: bool,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Usage(_) | Error::Parse(_) => EXIT_USAGE,
        Error::Resource { .. } => EXIT_RESOURCE,
        _ => EXIT_CHECK_FAILED,
    }
}

/// Runs a command and renders its report; the exit status travels with it.
pub fn run(command: &Command, opts: &Options) -> (i32, String) {
    match commands::execute(command, opts).and_then(|o| Ok((o.pass, render(command, &o.report, opts.format)?))) {
        Ok((pass, text)) => (if pass { EXIT_OK } else { EXIT_CHECK_FAILED }, text),
        Err(e) => {
            let report = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "error": e.to_string(),
                "exit": exit_code(&e),
            });
            (
                exit_code(&e),
                format!("{}\n", serde_json::to_string_pretty(&report).expect("json")),
            )
        }
    }
}
