//! `stableperm`: stability checks, family classification, Ψ traces, and
//! exhaustive sweeps for permutations of `[n]^k`.
//!
//! Exit codes: 0 success / stable, 2 input or capacity error, 3 verified
//! unstable (or not stable within the horizon), 4 classifier/criterion
//! mismatch (which would mean a bug, so CI can tell it from an expected
//! negative).

mod report;

use std::fmt;
use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use stable_perms::enumerate::{
    census_rank1, sweep_family, sweep_t1, EnumReport, RunOptions, SearchSpace, DEFAULT_SAMPLES,
    DEFAULT_SEED,
};
use stable_perms::{
    exact_rank1_verdict, format_cycles, parse_cycles, stability_bounded, Error, FamilySpec,
    Permutation, PsiTrace, DEFAULT_K_MAX, DEFAULT_L_MAX,
};

use report::Envelope;

/// Environment variable consulted for the default worker count.
const JOBS_ENV: &str = "STABLEPERM_JOBS";

const EXIT_UNSTABLE: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser)]
#[command(
    name = "stableperm",
    version,
    about = "Stable permutations of [n]^k: rank tests, family classification, and sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test a permutation for stability (bounded horizon, or exact rank 1).
    Check(CheckArgs),
    /// Classify and verify a two-transposition family spec.
    Family(FamilyArgs),
    /// Print the psi sequence of a permutation with stabilization flags.
    Psi(PsiArgs),
    /// Run a census or verification sweep over a candidate space.
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct CheckArgs {
    /// Alphabet size.
    #[arg(long)]
    n: usize,
    /// Multi-index length.
    #[arg(long)]
    k: usize,
    /// Permutation in cycle notation, e.g. "((1,1),(1,2))((2,1),(2,2))".
    #[arg(long)]
    perm: String,
    /// Bounded-horizon rank limit.
    #[arg(long, default_value_t = DEFAULT_K_MAX)]
    kmax: usize,
    /// Bounded-horizon tail length.
    #[arg(long, default_value_t = DEFAULT_L_MAX)]
    lmax: usize,
    /// Use the exact rank-1 commutation criterion (requires k = 2).
    #[arg(long)]
    exact_rank1: bool,
    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    format: TextOrJson,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    a1: usize,
    #[arg(long)]
    a2: usize,
    #[arg(long)]
    b1: usize,
    #[arg(long)]
    b2: usize,
    #[arg(long)]
    b3: usize,
    #[arg(long)]
    b4: usize,
    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    format: TextOrJson,
}

#[derive(Args)]
struct PsiArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    perm: String,
    /// Highest psi level to compute.
    #[arg(long, default_value_t = 2)]
    upto: usize,
    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    format: TextOrJson,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateMode {
    /// Census of rank-1 stable elements under the exact criterion.
    Rank1,
    /// Verify the family classifier against the exact criterion.
    Family,
    /// Verify that every element of S_n is stable of rank 1.
    T1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CensusSpace {
    /// All of S([n]^2).
    Full,
    /// Products of two disjoint transpositions of [n]^2.
    Involutions,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    mode: EnumerateMode,
    #[arg(long)]
    n: usize,
    /// Candidate space for --mode rank1.
    #[arg(long, value_enum, default_value_t = CensusSpace::Full)]
    space: CensusSpace,
    /// Worker count (0 = all logical CPUs). Defaults to $STABLEPERM_JOBS or 0.
    #[arg(long)]
    jobs: Option<usize>,
    /// Seed for sampled sweeps (family mode at n >= 5).
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Sample count for sampled sweeps.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

enum CliError {
    Lib(Error),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::PredictionMismatch { .. }) => EXIT_MISMATCH,
            _ => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Check(args) => run_check(args),
        Command::Family(args) => run_family(args),
        Command::Psi(args) => run_psi(args),
        Command::Enumerate(args) => run_enumerate(args),
    }
}

fn parse_perm(text: &str, n: usize, k: usize) -> Result<Permutation, Error> {
    parse_cycles(text, n, k)?.to_permutation()
}

fn run_check(args: CheckArgs) -> Result<ExitCode, CliError> {
    let u = parse_perm(&args.perm, args.n, args.k)?;
    let (verdict, inputs) = if args.exact_rank1 {
        (
            exact_rank1_verdict(&u)?,
            report::CheckInputs {
                n: args.n,
                k: args.k,
                perm: format_cycles(&u),
                mode: "exact-rank1",
                k_max: None,
                l_max: None,
            },
        )
    } else {
        (
            stability_bounded(&u, args.kmax, args.lmax)?,
            report::CheckInputs {
                n: args.n,
                k: args.k,
                perm: format_cycles(&u),
                mode: "bounded",
                k_max: Some(args.kmax),
                l_max: Some(args.lmax),
            },
        )
    };
    let stable = verdict.is_stable();
    match args.format {
        TextOrJson::Text => print!("{}", report::check_text(&inputs, &verdict)),
        TextOrJson::Json => {
            let envelope = Envelope::new("check", inputs, report::check_result(&verdict));
            print!("{}", envelope.to_json());
        }
    }
    Ok(if stable {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_UNSTABLE)
    })
}

fn run_family(args: FamilyArgs) -> Result<ExitCode, CliError> {
    let spec = FamilySpec::new(args.n, args.a1, args.a2, args.b1, args.b2, args.b3, args.b4)?;
    let verdict = spec.verify()?;
    match args.format {
        TextOrJson::Text => print!("{}", report::family_text(&spec, &verdict)),
        TextOrJson::Json => {
            let envelope = Envelope::new(
                "family",
                report::FamilyInputs::from(&spec),
                report::family_result(&verdict),
            );
            print!("{}", envelope.to_json());
        }
    }
    Ok(if verdict.verified_stable {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_UNSTABLE)
    })
}

fn run_psi(args: PsiArgs) -> Result<ExitCode, CliError> {
    let u = parse_perm(&args.perm, args.n, args.k)?;
    let trace = PsiTrace::compute(&u, args.upto)?;
    let inputs = report::PsiInputs {
        n: args.n,
        k: args.k,
        perm: format_cycles(&u),
        upto: args.upto,
    };
    let result = report::psi_result(&trace);
    match args.format {
        TextOrJson::Text => print!("{}", report::psi_text(&inputs, &result)),
        TextOrJson::Json => {
            let envelope = Envelope::new("psi", inputs, result);
            print!("{}", envelope.to_json());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn resolve_jobs(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var(JOBS_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(0)
}

fn run_enumerate(args: EnumerateArgs) -> Result<ExitCode, CliError> {
    let opts = RunOptions {
        jobs: resolve_jobs(args.jobs),
        seed: args.seed,
        samples: args.samples,
    };
    let (report, mode, space_flag): (EnumReport, &'static str, Option<&'static str>) =
        match args.mode {
            EnumerateMode::Rank1 => {
                let space = match args.space {
                    CensusSpace::Full => SearchSpace::FullSn2 { n: args.n },
                    CensusSpace::Involutions => {
                        SearchSpace::TwoTranspositionInvolutions { n: args.n }
                    }
                };
                (census_rank1(space, &opts)?, "rank1", Some(space.kind_label()))
            }
            EnumerateMode::Family => (sweep_family(args.n, &opts)?, "family", None),
            EnumerateMode::T1 => (sweep_t1(args.n, &opts)?, "t1", None),
        };

    let bytes = match args.format {
        ReportFormat::Json => {
            let inputs = report::EnumInputs {
                mode,
                n: args.n,
                space: space_flag,
                samples: report.seed.is_some().then_some(args.samples),
            };
            let mut envelope = Envelope::new("enumerate", inputs, report::enumerate_result(&report));
            envelope.seed = report.seed;
            envelope.to_json().into_bytes()
        }
        ReportFormat::Csv => report::enumerate_csv(&report),
        ReportFormat::Text => report::enumerate_text(&report).into_bytes(),
    };

    match &args.out {
        Some(path) => {
            fs::write(path, &bytes)?;
            eprintln!("report written to {}", path.display());
        }
        None => std::io::stdout().write_all(&bytes)?,
    }
    eprintln!(
        "examined {} candidates in {:?} across {} partitions",
        report.examined, report.wall, report.partitions
    );

    Ok(if report.mismatches.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    })
}
