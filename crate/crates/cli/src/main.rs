use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use covolume_cli::{
    cmd_chi, cmd_growth, cmd_min, cmd_table1, cmd_table2, cmd_verify, parse_positive_rational,
    ChiOptions, CliError, Field, Lattice, MinQuery, Output, RankRange, Status, Suite,
    DEFAULT_APPROX,
};

/// Exact covolumes of minimal arithmetic lattices in Sp(n,1).
#[derive(Parser, Debug)]
#[command(name = "covolume", version, about)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Emit JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact values for n ≤ 5 in factored form.
    Table1,
    /// Decimal values of χ(Γ^s_n) and χ(Δ_n).
    Table2 {
        #[arg(long, default_value_t = DEFAULT_APPROX)]
        approx: u32,
    },
    /// χ of one lattice, for one rank or an inclusive range.
    Chi {
        #[arg(value_enum)]
        lattice: Lattice,
        #[arg(long, conflicts_with = "range", required_unless_present = "range")]
        n: Option<u32>,
        /// Inclusive `a..b`.
        #[arg(long)]
        range: Option<RankRange>,
        /// Significant figures of the decimal view.
        #[arg(long, default_value_t = DEFAULT_APPROX)]
        approx: u32,
        /// Normalization of vol(ℍP^n); adds the orbifold volume 2χ·vol/(n+1).
        #[arg(long, value_parser = parse_positive_rational)]
        vol_hpn: Option<covolume::arith::ExactRational>,
        /// Base field for `stabilizer`.
        #[arg(long, value_enum, default_value_t = Field::Rationals)]
        field: Field,
        /// Comma-separated residue field sizes for `stabilizer`.
        #[arg(long, value_delimiter = ',')]
        ramified: Option<Vec<u64>>,
    },
    /// Run a verification suite; exits 2 if any check fails.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Smallest covolume at one rank, or over 2 ≤ n ≤ N with --global.
    Min {
        #[arg(long, conflicts_with = "global", required_unless_present = "global")]
        n: Option<u32>,
        #[arg(long, value_name = "N")]
        global: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_APPROX)]
        approx: u32,
    },
    /// Growth of χ(Γ^s_n), χ(Δ_n) and their quotient.
    Growth {
        #[arg(long, conflicts_with = "range")]
        n: Option<u32>,
        #[arg(long)]
        range: Option<RankRange>,
        #[arg(long, default_value_t = DEFAULT_APPROX)]
        approx: u32,
    },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let json = cli.json;
    let check_sig = |s: u32| {
        if s == 0 {
            Err(CliError::Usage(
                "--approx needs at least 1 significant figure".into(),
            ))
        } else {
            Ok(s)
        }
    };
    match cli.command {
        Command::Table1 => cmd_table1(json),
        Command::Table2 { approx } => cmd_table2(check_sig(approx)?, json),
        Command::Chi {
            lattice,
            n,
            range,
            approx,
            vol_hpn,
            field,
            ramified,
        } => {
            let ranks = match (n, range) {
                (Some(n), _) => RankRange { start: n, end: n },
                (None, Some(r)) => r,
                (None, None) => unreachable!("clap requires --n or --range"),
            };
            let opts = ChiOptions {
                lattice,
                ranks,
                approx: check_sig(approx)?,
                json,
                vol_hpn,
                field,
                ramified,
            };
            cmd_chi(&opts)
        }
        Command::Verify { suite } => cmd_verify(suite, json),
        Command::Min { n, global, approx } => {
            let query = match (n, global) {
                (Some(n), _) => MinQuery::Rank(n),
                (None, Some(g)) => MinQuery::Global(g),
                (None, None) => unreachable!("clap requires --n or --global"),
            };
            cmd_min(query, check_sig(approx)?, json)
        }
        Command::Growth { n, range, approx } => {
            let ranks = match (n, range) {
                (Some(n), _) => RankRange { start: 2, end: n },
                (None, Some(r)) => r,
                (None, None) => RankRange { start: 2, end: 20 },
            };
            cmd_growth(ranks, check_sig(approx)?, json)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(Status::Usage as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let out = cli.out.clone();
    match run(cli) {
        Ok(output) => {
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &output.text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(Status::Usage as u8);
                    }
                }
                None => print!("{}", output.text),
            }
            ExitCode::from(output.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Status::Usage as u8)
        }
    }
}
