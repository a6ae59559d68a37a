use std::process::ExitCode;

use charsheaf::commands::{self, Outcome};
use charsheaf::{envelope, render, CliError};
use charsheaf_core::pairing::Convention;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "charsheaf", version, about = "Cuspidal Levi tables, Levi class counts in centralizers and double-coset identity checks")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Printed,
    Hermitian,
}

#[derive(Subcommand)]
enum Command {
    /// Root counts, Weyl group order and Dynkin diagrams.
    Roots {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Levi subgroups admitting cuspidal pairs, with the M types of each row.
    CuspidalLevis {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        isogeny: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, default_value_t = 0)]
        p: u64,
    },
    /// Number of H-classes of Levi subgroups M_x for a table configuration.
    MClassify {
        #[arg(long)]
        g: String,
        #[arg(long)]
        isogeny: Option<String>,
        #[arg(long, default_value_t = 0)]
        p: u64,
        #[arg(long)]
        l: String,
        #[arg(long)]
        m: String,
    },
    /// Runs the identity checks on a scenario (file or builtin:<name>).
    Verify {
        #[arg(long)]
        scenario: String,
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Pairing matrices of a scenario.
    Pairing {
        #[arg(long)]
        scenario: String,
        #[arg(long, value_enum, default_value = "printed")]
        convention: ConventionArg,
    },
    /// Lists the built-in scenarios; structured output gives their documents.
    Scenarios,
}

fn run(cli: &Cli) -> Result<(String, Outcome), CliError> {
    Ok(match &cli.command {
        Command::Roots { ty, rank } => (
            "roots".into(),
            with_inputs(commands::roots(ty, *rank)?, json!({"type": ty, "rank": rank})),
        ),
        Command::CuspidalLevis { ty, isogeny, rank, p } => (
            "cuspidal-levis".into(),
            with_inputs(
                commands::cuspidal_levis(ty, isogeny.as_deref(), *rank, *p)?,
                json!({"type": ty, "isogeny": isogeny, "rank": rank, "p": p}),
            ),
        ),
        Command::MClassify { g, isogeny, p, l, m } => (
            "m-classify".into(),
            with_inputs(
                commands::m_classify(g, isogeny.as_deref(), *p, l, m)?,
                json!({"g": g, "isogeny": isogeny, "p": p, "l": l, "m": m}),
            ),
        ),
        Command::Verify { scenario, checks, seed } => (
            "verify".into(),
            with_inputs(
                commands::verify(scenario, checks, *seed)?,
                json!({"scenario": scenario, "checks": checks, "seed": seed}),
            ),
        ),
        Command::Pairing { scenario, convention } => {
            let conv = match convention {
                ConventionArg::Printed => Convention::Printed,
                ConventionArg::Hermitian => Convention::Hermitian,
            };
            (
                "pairing".into(),
                with_inputs(commands::pairing(scenario, conv)?, json!({"scenario": scenario})),
            )
        }
        Command::Scenarios => ("scenarios".into(), with_inputs(commands::scenarios()?, json!({}))),
    })
}

// Stashes the echoed inputs inside the report until the envelope is built.
fn with_inputs(mut o: Outcome, inputs: serde_json::Value) -> Outcome {
    o.report = json!({"inputs": inputs, "results": o.report});
    o
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((name, o)) => {
            match cli.format {
                Format::Text => print!("{}", o.text),
                Format::Structured => {
                    let doc = envelope(&name, o.report["inputs"].clone(), o.report["results"].clone());
                    print!("{}", render(&doc));
                }
            }
            if o.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
