use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use interalg::config::{parse_vector, DEFAULT_SAMPLES, DEFAULT_SEED};
use interalg::sweep::{sweep_csv, SweepSpec};
use interalg::{CliError, InvariantSet, MethodChoice, OutputFormat, RunConfig};

/// Invariants of intersection algebras B(a, b) of principal monomial ideals.
#[derive(Debug, Parser)]
#[command(name = "interalg", version)]
struct Args {
    /// Exponents of the first ideal, comma-separated.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
    a: Option<String>,
    /// Exponents of the second ideal, comma-separated.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
    b: Option<String>,
    /// Subset of hs, embdim, cl, fsig, hk, all.
    #[arg(long, default_value = "all")]
    invariants: String,
    /// exact, formula, oracle or all.
    #[arg(long, default_value = "exact")]
    method: String,
    /// Monte Carlo samples per region.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Lattice-count scale m (default depends on the dimension).
    #[arg(long)]
    lattice_scale: Option<i64>,
    /// Write OFF meshes of the three regions into this directory.
    #[arg(long, value_name = "DIR")]
    mesh: Option<PathBuf>,
    /// json or table.
    #[arg(long, default_value = "json")]
    output: String,
    /// Parameter sweep, e.g. `k=1..3,b=1..3`; prints CSV.
    #[arg(long, value_name = "SPEC", conflicts_with_all = ["a", "b", "mesh"])]
    sweep: Option<String>,
}

fn execute(args: Args) -> Result<String, CliError> {
    let invariants = InvariantSet::parse(&args.invariants)?;
    let method = MethodChoice::parse(&args.method)?;
    if let Some(spec) = &args.sweep {
        let spec = SweepSpec::parse(spec)?;
        return sweep_csv(
            &spec,
            invariants,
            method.report_options(invariants.selection),
        );
    }
    let output = match args.output.as_str() {
        "json" => OutputFormat::Json,
        "table" => OutputFormat::Table,
        other => {
            return Err(CliError::Parse(format!(
                "unknown output {other:?} (json, table)"
            )))
        }
    };
    let config = RunConfig {
        a: parse_vector(args.a.as_deref().unwrap_or_default())?,
        b: parse_vector(args.b.as_deref().unwrap_or_default())?,
        invariants,
        method,
        samples: args.samples,
        seed: args.seed,
        lattice_scale: args.lattice_scale,
        output,
        mesh: args.mesh,
    };
    interalg::run(&config)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let err = CliError::Parse(e.render().to_string().trim().to_string());
            eprintln!("{}", err.to_json());
            return ExitCode::FAILURE;
        }
    };
    match execute(args) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::FAILURE
        }
    }
}
