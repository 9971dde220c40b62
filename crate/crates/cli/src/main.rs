//! `suppos`: command line front end for the support poset library.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "suppos", version, about = "Support posets of monomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Support family and support poset of an ideal.
    SupportPoset(SupportPosetArgs),
    /// Betti numbers from the homology oracle, a Mayer-Vietoris tree or a closed formula.
    Betti(BettiArgs),
    /// Build one of the explicit ideal families.
    Construct {
        #[command(subcommand)]
        which: ConstructCmd,
        #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
        format: Format,
    },
    /// Polarize an ideal.
    Polarize(PolarizeArgs),
    /// Collapse blocks of variables of a squarefree ideal.
    Depolarize(DepolarizeArgs),
    /// Yes/no checks; prints `true` or `false`.
    Check {
        #[command(subcommand)]
        which: CheckCmd,
    },
    /// Re-emit an input file in another format; `--kind` says what it holds.
    Export(ExportArgs),
}

#[derive(Args, Debug)]
pub struct SupportPosetArgs {
    /// Ideal file, `-` for stdin, or an inline literal starting with `vars:`.
    pub ideal: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Refine to the poset on variables using this comma separated variable order.
    #[arg(long)]
    pub ordered: Option<String>,
    /// Also write the Hasse diagram as DOT to this path (`-` for stdout).
    #[arg(long, value_name = "PATH")]
    pub dot: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Mvt,
    Formula,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Lines,
    Diamonds,
}

#[derive(Args, Debug)]
pub struct BettiArgs {
    /// Ideal file, `-` for stdin, or an inline literal; omit when `--family` is given.
    pub ideal: Option<String>,
    #[arg(long, value_enum, default_value_t = Method::Oracle)]
    pub method: Method,
    /// Use the depolarized ideal of a named family instead of a file.
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Pivot order for `--method mvt`: canonical, reversed, seeded:<u64>,
    /// lines-standard or diamonds-standard.
    #[arg(long, default_value = "canonical")]
    pub order: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the Mayer-Vietoris tree as DOT to this path (`-` for stdout).
    #[arg(long, value_name = "PATH")]
    pub dot: Option<String>,
    /// Append projective dimension and regularity.
    #[arg(long)]
    pub invariants: bool,
}

#[derive(Subcommand, Debug)]
pub enum ConstructCmd {
    /// `J_{n,m}`, or `I_{n,m}` with `--squarefree`.
    Lines {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        squarefree: bool,
    },
    /// The diamond ideal on `2m` variables, or the squarefree one with `--squarefree`.
    Diamonds {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        squarefree: bool,
    },
    /// Leaf ideal of a forest given as a poset file.
    Leaf { poset: String },
    /// Consecutive k-out-of-n ideal, or its zero-dimensional copolar ideal with `--copolar`.
    ConsecutiveKn {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        copolar: bool,
    },
    /// All squarefree products of k of the n variables.
    KOutOfN {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Series-parallel ideal of an expression such as `1 * (2 + 3)`, or of a forest.
    Sp {
        /// Expression; `*` is intersection (series) and `+` is sum (parallel).
        expr: Option<String>,
        /// Build the expression from this forest file instead.
        #[arg(long, conflicts_with = "expr")]
        forest: Option<String>,
        /// Print the expression as well.
        #[arg(long)]
        show_expr: bool,
    },
}

#[derive(Args, Debug)]
pub struct PolarizeArgs {
    pub ideal: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct DepolarizeArgs {
    pub ideal: String,
    /// Blocks such as `1,2,4|3`; every block must be a chain of C sets.
    #[arg(long)]
    pub chains: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum CheckCmd {
    /// Whether a poset, or the support poset of an ideal, is a forest.
    Forest {
        #[arg(long, conflicts_with_all = ["poset", "random_sp"])]
        ideal: Option<String>,
        #[arg(long, conflicts_with = "random_sp")]
        poset: Option<String>,
        /// Check this many random series-parallel ideals instead (needs `--seed`).
        #[arg(long, value_name = "COUNT", requires = "seed")]
        random_sp: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Largest variable count for the random expressions.
        #[arg(long, default_value_t = 8)]
        max_vars: usize,
    },
    /// Whether two ideals have isomorphic polarizations.
    Copolar { left: String, right: String },
    /// Exhaustive search for a squarefree ideal with the given support family.
    Realizable {
        /// JSON family `{"n": 3, "C": [[1], [1,2], [1,2,3]]}`.
        #[arg(long)]
        family: String,
    },
    /// Whether the Taylor complex of an ideal is minimal.
    TaylorMinimal { ideal: String },
    /// Whether a collection of sets satisfies the realization conditions for a family.
    Sigma {
        #[arg(long)]
        family: String,
        /// JSON list of sets, e.g. `[[1],[2,4]]`.
        #[arg(long)]
        sigma: String,
        /// Evaluate the conditions over every member of the collection.
        #[arg(long)]
        literal: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Poset,
    Ideal,
    Family,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    pub input: String,
    #[arg(long, value_enum, default_value_t = Kind::Poset)]
    pub kind: Kind,
    #[arg(long, value_enum, default_value_t = Format::Dot)]
    pub format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
