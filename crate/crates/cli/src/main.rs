use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use peakalg::permutations::GroupType;
use peakalg::radical::Flavor;
use peakalg_cli::commands::{self, parse_pairs, parse_range, BasisName, VerifyArgs};
use peakalg_cli::config::Config;
use peakalg_cli::output::Format;
use peakalg_cli::suites::Suite;
use peakalg_cli::{CliError, EXIT_USAGE};

/// Exact computations in the peak algebra and the descent algebras of types A and B.
#[derive(Parser)]
#[command(name = "peakalg", version)]
struct Cli {
    /// key = value file with cap_a, cap_b and seed.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Largest n for which S_n may be enumerated.
    #[arg(long, global = true)]
    cap_a: Option<usize>,
    /// Largest n for which B_n may be enumerated.
    #[arg(long, global = true)]
    cap_b: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every element of a basis in enumeration order.
    Bases {
        #[arg(long)]
        n: usize,
        /// P, Q, O, Obar, X or Y.
        #[arg(long)]
        basis: BasisName,
        #[arg(long = "type", default_value = "A", value_parser = parse_type)]
        group_type: GroupType,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Print a transition matrix; row i expands the i-th element of --from.
    Matrix {
        #[arg(long)]
        from: BasisName,
        #[arg(long)]
        to: BasisName,
        #[arg(long)]
        n: usize,
        #[arg(long = "type", default_value = "A", value_parser = parse_type)]
        group_type: GroupType,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Run verification suites; exits 1 if any claim fails.
    Verify {
        /// bases, ideals, radical, idempotents, convolution, lie or all.
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: SuiteChoice,
        /// Degree or range of degrees, e.g. 2..6.
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        #[arg(long)]
        seed: Option<u64>,
        /// Radical generator family compared with the default one.
        #[arg(long, value_parser = parse_flavor)]
        flavor: Option<Flavor>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Act on a Lie monomial by an element of kS_n or kB_n.
    Act {
        #[arg(long)]
        element: String,
        #[arg(long)]
        monomial: String,
        /// Letters exchanged by the involution, e.g. aA,bB.
        #[arg(long, value_parser = parse_letter_pairs, default_value = "")]
        pairs: Pairs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand the Eulerian-type idempotents of degree n.
    Idempotents {
        #[arg(long)]
        n: usize,
        /// Also compute dimensions of the left ideals of kS_n they generate.
        #[arg(long)]
        dims: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

#[derive(Clone)]
struct Pairs(Vec<(char, char)>);

fn parse_letter_pairs(s: &str) -> Result<Pairs, String> {
    parse_pairs(s).map(Pairs)
}

#[derive(Clone, Copy)]
struct SuiteChoice(Option<Suite>);

fn parse_suite(s: &str) -> Result<SuiteChoice, String> {
    if s == "all" {
        return Ok(SuiteChoice(None));
    }
    s.parse().map(|x| SuiteChoice(Some(x)))
}

fn parse_type(s: &str) -> Result<GroupType, String> {
    s.parse().map_err(|_| format!("unknown type {s:?} (A or B)"))
}

fn parse_flavor(s: &str) -> Result<Flavor, String> {
    s.parse().map_err(|e: peakalg::Error| e.to_string())
}

fn run(cli: Cli) -> Result<commands::Outcome, CliError> {
    let base = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let seed = match &cli.command {
        Command::Verify { seed, .. } => *seed,
        _ => None,
    };
    let cfg = base.with_overrides(cli.cap_a, cli.cap_b, seed);
    let caps = &cfg.caps;
    match cli.command {
        Command::Bases { n, basis, group_type, format, export } => {
            commands::bases(n, basis, group_type, format, export.as_deref(), caps)
        }
        Command::Matrix { from, to, n, group_type, format, export } => {
            commands::matrix(from, to, n, group_type, format, export.as_deref())
        }
        Command::Verify { suite, n, flavor, format, export, .. } => commands::verify(&VerifyArgs {
            suite: suite.0,
            range: n,
            seed: cfg.seed,
            flavor,
            format,
            export: export.as_deref(),
            caps: cfg.caps,
        }),
        Command::Act { element, monomial, pairs, format } => commands::act(&element, &monomial, &pairs.0, format, caps),
        Command::Idempotents { n, dims, format, export } => {
            commands::idempotents(n, dims, format, export.as_deref(), caps)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
