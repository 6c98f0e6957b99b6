use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rm_groebner::MonomialOrder;
use rmgb_cli::{
    cmd_basis, cmd_decode, cmd_divide, cmd_encode, cmd_groebner_check, cmd_selftest, cmd_simulate,
    BasisKind, CliError, Output, SimMode,
};

#[derive(Parser)]
#[command(name = "rmgb", version, about = "Reed-Muller codes decoded with Groebner bases")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List G, H or the Jennings basis, or check them (reduced-check)
    Basis {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        l: usize,
        /// G, H, jennings or reduced-check
        which: BasisKind,
        #[arg(long, default_value = "grlex")]
        order: MonomialOrder,
    },
    /// Encode a message polynomial in y1..ym of degree <= m - l
    Encode {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        l: usize,
        message: String,
    },
    /// Decode a received bitstring, printing a JSON report
    Decode {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        l: usize,
        word: String,
    },
    /// Divide a polynomial by the divisors in a file (one per line)
    Divide {
        f: String,
        divisors: PathBuf,
        #[arg(long, default_value = "grlex")]
        order: MonomialOrder,
        /// Number of variables; inferred from the input when omitted
        #[arg(short)]
        m: Option<usize>,
    },
    /// Check the Buchberger criterion on a basis file
    GroebnerCheck {
        basis: PathBuf,
        #[arg(long, default_value = "grlex")]
        order: MonomialOrder,
        #[arg(short)]
        m: Option<usize>,
    },
    /// Seeded channel simulation with a per-trial CSV
    Simulate {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        l: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// fixed_weight:W or bsc:P
        #[arg(long, default_value = "fixed_weight:1")]
        mode: SimMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the exhaustive checks for every (m, l) with m <= MAX_M
    Selftest {
        #[arg(default_value_t = 3)]
        max_m: usize,
    },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Basis { m, l, which, order } => cmd_basis(m, l, which, order),
        Command::Encode { m, l, message } => cmd_encode(m, l, &message),
        Command::Decode { m, l, word } => cmd_decode(m, l, &word),
        Command::Divide { f, divisors, order, m } => {
            cmd_divide(&f, &std::fs::read_to_string(divisors)?, order, m)
        }
        Command::GroebnerCheck { basis, order, m } => {
            cmd_groebner_check(&std::fs::read_to_string(basis)?, order, m)
        }
        Command::Simulate { m, l, trials, mode, seed, out } => {
            cmd_simulate(m, l, trials, mode, seed, out.as_deref())
        }
        Command::Selftest { max_m } => cmd_selftest(max_m),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
