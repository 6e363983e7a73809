use std::fmt;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use tamesign_core::Sign;

#[derive(Debug, Parser)]
#[command(
    name = "tamesign",
    version,
    about = "Orthogonal/symplectic signs of tame self-dual representations",
    allow_negative_numbers = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Worker threads (default: one per core). Output does not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List level-1 self-dual representations of D^× with both signs.
    Enumerate {
        /// Residue field size, or an inclusive range `lo..hi`.
        #[arg(long)]
        q: Range,
        /// Index of the division algebra, or an inclusive range `lo..hi`.
        #[arg(long)]
        n: Range,
    },
    /// Check `c(π) = -c(σ)` for every level-1 self-dual representation.
    VerifyFlip {
        #[arg(long)]
        q: Range,
        #[arg(long)]
        n: Range,
        #[arg(long, value_enum, default_value_t = RecipeArg::Pr)]
        recipe: RecipeArg,
    },
    /// Signs of a single tame character.
    #[command(allow_negative_numbers = true)]
    Sign {
        #[arg(long, value_enum)]
        side: Side,
        #[arg(long)]
        q: u64,
        /// Index of the division algebra (division side only).
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        f: u64,
        /// Residue exponent, `0 ≤ a < q^f - 1`.
        #[arg(long)]
        a: u64,
        /// Value at the uniformizer, `+1` or `-1`.
        #[arg(long)]
        w: Sign,
    },
    /// Check that a product of local signs is +1.
    #[command(allow_negative_numbers = true)]
    ProductCheck { signs: Vec<Sign> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Division,
    Weil,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RecipeArg {
    #[value(name = "PR", alias = "pr")]
    Pr,
    #[value(name = "SZ", alias = "sz")]
    Sz,
    #[value(name = "both", alias = "BOTH")]
    Both,
}

impl fmt::Display for RecipeArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecipeArg::Pr => "PR",
            RecipeArg::Sz => "SZ",
            RecipeArg::Both => "both",
        })
    }
}

/// `v` or inclusive `lo..hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub lo: u64,
    pub hi: u64,
}

impl Range {
    pub fn is_single(&self) -> bool {
        self.lo == self.hi
    }

    pub fn values(&self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Range, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("{t:?} is not a non-negative integer"))
        };
        match s.split_once("..") {
            None => {
                let v = num(s)?;
                Ok(Range { lo: v, hi: v })
            }
            Some((lo, hi)) => {
                let (lo, hi) = (num(lo)?, num(hi)?);
                if lo > hi {
                    return Err(format!("empty range {lo}..{hi}"));
                }
                Ok(Range { lo, hi })
            }
        }
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_single() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}
