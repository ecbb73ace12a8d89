use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use cpdist_core::spectra::Part;

/// Exact distance-matrix formulas for cp-graph families: generate matrices,
/// compare closed forms with exact oracles, and run verification suites.
#[derive(Debug, Parser)]
#[command(name = "cpdist", version, about)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,

    /// Graph family
    #[arg(long, value_enum)]
    pub family: Option<Family>,

    #[arg(long)]
    pub n: Option<usize>,

    /// Number of T_n copies in a book graph
    #[arg(long)]
    pub b: Option<usize>,

    /// Size of the first part of K_{m,n}
    #[arg(long)]
    pub m: Option<usize>,

    /// Matrix to generate
    #[arg(long, value_enum, default_value_t = Kind::Dist)]
    pub kind: Kind,

    /// Vertex part for `spectrum`
    #[arg(long, value_enum)]
    pub part: Option<PartArg>,

    #[arg(long, value_enum, default_value_t = SuiteName::All)]
    pub suite: SuiteName,

    /// Seed for random trees and random matrices
    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Write the JSON report to PATH, or to stdout with `-`
    #[arg(long, value_name = "PATH|-")]
    pub json: Option<String>,

    /// Write CSV output to PATH instead of stdout
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Perturb one closed-form constant inside the suites
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Write a distance, Laplacian or R matrix as CSV
    Gen,
    /// Print closed-form and oracle determinants
    Det,
    /// Write the closed-form inverse as CSV
    Inv,
    /// Run a verification suite
    Verify,
    /// Compare claimed and computed spectra of R[part]
    Spectrum,
    /// Time closed-form assembly against exact Gauss–Jordan
    Bench,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Tn,
    TnBook,
    Kmn,
    Star,
    Tree,
    K4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Dist,
    Lap,
    Rmat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartArg {
    #[value(name = "B")]
    B,
    #[value(name = "N")]
    N,
    #[value(name = "NC")]
    NC,
}

impl From<PartArg> for Part {
    fn from(p: PartArg) -> Self {
        match p {
            PartArg::B => Part::B,
            PartArg::N => Part::N,
            PartArg::NC => Part::NC,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    All,
    Dets,
    Inverses,
    Spectra,
    Lemmas,
    Recognizer,
}

impl SuiteName {
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::All => "all",
            SuiteName::Dets => "dets",
            SuiteName::Inverses => "inverses",
            SuiteName::Spectra => "spectra",
            SuiteName::Lemmas => "lemmas",
            SuiteName::Recognizer => "recognizer",
        }
    }
}
