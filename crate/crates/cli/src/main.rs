mod commands;
mod error;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliError;

/// Farey subsequences, tope systems and tope committees.
#[derive(Parser, Debug)]
#[command(name = "tope-committees", version, about)]
pub struct Cli {
    /// Run every sweep on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Farey sequences and their Boolean-lattice subsequences.
    #[command(subcommand)]
    Farey(FareyCmd),
    /// Tope systems: construction, validation, summary.
    #[command(subcommand)]
    Om(OmCmd),
    /// Tope committee enumeration.
    #[command(subcommand)]
    Committees(CommitteesCmd),
    /// Association-scheme parameters.
    #[command(subcommand)]
    Schemes(SchemesCmd),
    /// Verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqKind {
    /// F_n
    Standard,
    /// F(B(n),m)
    Boolean,
    /// F_n restricted to numerators <= m
    Numbound,
}

#[derive(Subcommand, Debug)]
pub enum FareyCmd {
    /// Print a sequence, one fraction per line.
    Gen {
        #[arg(long, value_enum)]
        kind: SeqKind,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Neighbors of a fraction in F(B(2m),m).
    Neighbors {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        frac: String,
        #[arg(long)]
        json: bool,
    },
    /// Tables of the eight halfsequence bijections with F_m.
    Maps {
        #[arg(long)]
        m: u64,
    },
    /// Run the Farey invariant suite for 2 <= m <= m-max.
    Verify {
        #[arg(long)]
        m_max: u64,
        #[arg(long)]
        force: bool,
    },
    /// F(B(n),m) by subset enumeration.
    Oracle {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum OmCmd {
    /// Topes of a central arrangement file, canonical order.
    FromArrangement { file: String },
    /// Check a topes file.
    Validate { file: String },
    /// t, |T|, acyclicity and halfspace sizes.
    Info {
        file: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
pub struct FamilyOpts {
    /// Topes file.
    pub file: String,
    #[arg(long)]
    pub json: bool,
    /// Override the enumeration guard.
    #[arg(long)]
    pub force: bool,
}

#[derive(Subcommand, Debug)]
pub enum CommitteesCmd {
    /// Committees of one size.
    Enumerate {
        #[command(flatten)]
        opts: FamilyOpts,
        #[arg(long)]
        layer: usize,
        #[arg(long)]
        no_opposites: bool,
    },
    /// Inclusion-minimal committees.
    Minimal {
        #[command(flatten)]
        opts: FamilyOpts,
    },
    /// All committees, by layer.
    All {
        #[command(flatten)]
        opts: FamilyOpts,
        #[arg(long)]
        no_opposites: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SchemeName {
    Johnson,
    Crosspolytope,
    Hamming,
}

#[derive(Args, Debug)]
pub struct SchemeOpts {
    #[arg(long, value_enum)]
    pub scheme: SchemeName,
    /// Johnson ground-set size.
    #[arg(long)]
    pub n: Option<usize>,
    /// Crosspolytope/Hamming dimension.
    #[arg(long)]
    pub m: Option<usize>,
    /// Johnson/crosspolytope rank.
    #[arg(long)]
    pub d: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum SchemesCmd {
    /// Closed-form intersection number p^k_ij.
    P {
        #[command(flatten)]
        scheme: SchemeOpts,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: usize,
    },
    /// Closed-form valencies n_0..n_d.
    Valency {
        #[command(flatten)]
        scheme: SchemeOpts,
    },
    /// Rank-d element count of the crosspolytope lattice O(m).
    Whitney {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
    },
    /// Exhaustive p^k_ij with a pair-independence verdict.
    Oracle {
        #[command(flatten)]
        scheme: SchemeOpts,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Committee layer decompositions.
    Prop8 {
        file: String,
        #[arg(long)]
        force: bool,
    },
    /// Opposite-free committee layer decompositions.
    Thm9 {
        file: String,
        #[arg(long)]
        force: bool,
    },
    /// Scheme closed forms against exhaustive oracles.
    Schemes {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        max_m: usize,
        #[arg(long)]
        force: bool,
    },
    /// Farey suite up to 64, schemes at default sizes, and both committee
    /// verifiers on the built-in triangle and four-line arrangements.
    All,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::Failed | CliError::Hypothesis) {
                eprintln!("{e}");
            }
            e.exit_code()
        }
    }
}
