use std::path::PathBuf;
use std::process::exit;

use clap::Parser;

use softgt_cli::checks::{self, CheckContext};
use softgt_cli::document::{self, BuiltSpace};
use softgt_cli::report::Format;
use softgt_cli::{exit_code, CliError};

/// Workbench for finite soft generalized topologies: regular sets,
/// near-compactness metrics, subspaces, projections and growth
/// certificates.
#[derive(Parser)]
#[command(name = "softgt", version, arg_required_else_help = true)]
struct Cli {
    /// Check to run; see --list-checks.
    check: Option<String>,

    /// Check-specific arguments (e.g. `witness family_example_ones 10`).
    args: Vec<String>,

    /// Bundled fixture to load.
    #[arg(long)]
    fixture: Option<String>,

    /// Space document to load.
    #[arg(long)]
    input: Option<PathBuf>,

    /// Seed for randomized suites.
    #[arg(long, default_value_t = softgt_core::laws::DEFAULT_SEED)]
    seed: u64,

    /// Largest size index for witness certificates.
    #[arg(long)]
    n_max: Option<u32>,

    /// Parameter count override for witness families.
    #[arg(long)]
    family_params: Option<u32>,

    /// Instances per law suite.
    #[arg(long)]
    cases: Option<usize>,

    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// List available checks and fixtures.
    #[arg(long)]
    list_checks: bool,
}

fn main() {
    let cli = Cli::parse();
    if cli.list_checks {
        for check in checks::registry() {
            println!("{:<12} {}", check.name(), check.summary());
        }
        println!("fixtures: {}", document::FIXTURE_NAMES.join(", "));
        exit(0);
    }
    match run(&cli) {
        Ok(pass) => exit(if pass { 0 } else { 1 }),
        Err(e) => {
            eprintln!("error: {e}");
            exit(exit_code(&e));
        }
    }
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let name = cli
        .check
        .as_deref()
        .ok_or_else(|| CliError::Input("no check given; try --list-checks".to_string()))?;
    let check = checks::find(name)?;

    let built: Option<BuiltSpace> = if check.needs_document() {
        let (text, path) = match (&cli.fixture, &cli.input) {
            (Some(f), None) => {
                let text = document::fixture(f).ok_or_else(|| {
                    CliError::Input(format!(
                        "unknown fixture '{f}'; available: {}",
                        document::FIXTURE_NAMES.join(", ")
                    ))
                })?;
                (text.to_string(), format!("fixture:{f}"))
            }
            (None, Some(p)) => {
                let text = std::fs::read_to_string(p).map_err(|e| {
                    CliError::Input(format!("cannot read {}: {e}", p.display()))
                })?;
                (text, p.display().to_string())
            }
            (Some(_), Some(_)) => {
                return Err(CliError::Input(
                    "give either --fixture or --input, not both".to_string(),
                ))
            }
            (None, None) => {
                return Err(CliError::Input(format!(
                    "check '{name}' needs --fixture or --input"
                )))
            }
        };
        let doc = document::parse(&text, &path)?;
        Some(document::build(&doc)?)
    } else {
        None
    };

    let ctx = CheckContext {
        built: built.as_ref(),
        args: &cli.args,
        seed: cli.seed,
        n_max: cli.n_max,
        family_params: cli.family_params,
        cases: cli.cases,
    };
    let report = check.run(&ctx)?;
    print!("{}", report.render(cli.format));
    Ok(report.pass)
}
