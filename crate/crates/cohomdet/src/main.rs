//! Thin command-line front end over the library: compute determinants of
//! form tensors, verify gluing instances, and inspect the bundled corpus.
//!
//! Exit codes: 0 on success (and on a passing verification), 1 when a
//! verification or recheck fails, 2 on any input or usage error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cohomdet::corpus;
use cohomdet::{det_form, BasisPair, Form, GluingInstance, IntMatrix, Orientation};

#[derive(Parser)]
#[command(
    name = "cohomdet",
    version,
    about = "Exact cohomology determinants of 3-manifold forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the determinant of a form tensor.
    Det(DetArgs),
    /// Verify the determinant identity of a gluing instance.
    Verify(VerifyArgs),
    /// List the bundled corpus entries, or re-check their frozen values.
    Corpus(CorpusArgs),
    /// Validate an input file (form or instance) without computing.
    Check(CheckArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct DetArgs {
    /// Form tensor JSON file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    /// Basis of the a-module as a JSON row matrix, e.g. '[[1,0],[1,1]]'
    /// (rows are basis vectors; must be unimodular). Defaults to standard.
    #[arg(long)]
    basis_a: Option<String>,
    /// Basis of the b-module as a JSON row matrix. Defaults to standard.
    #[arg(long)]
    basis_b: Option<String>,
    /// Orientation sign applied to the result: +1 or -1.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    orientation: Orientation,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Gluing instance JSON file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
struct CorpusArgs {
    /// Print one entry in full instead of listing all names.
    #[arg(long)]
    name: Option<String>,
    /// Recompute every listed entry and compare against its frozen value.
    #[arg(long)]
    recheck: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
struct CheckArgs {
    /// Form or instance JSON file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Det(args) => run_det(args),
        Command::Verify(args) => run_verify(args),
        Command::Corpus(args) => run_corpus(args),
        Command::Check(args) => run_check(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

type CliResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn read_input(path: &str) -> Result<String, std::io::Error> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
    }
}

fn parse_basis(text: &str) -> Result<IntMatrix, Box<dyn std::error::Error>> {
    let rows: Vec<Vec<i64>> = serde_json::from_str(text)?;
    Ok(IntMatrix::from_rows(rows)?)
}

fn run_det(args: DetArgs) -> CliResult {
    let form: Form = serde_json::from_str(&read_input(&args.input)?)?;
    let standard = BasisPair::standard_for(&form);
    let a = match &args.basis_a {
        Some(text) => parse_basis(text)?,
        None => standard.a().clone(),
    };
    let b = match &args.basis_b {
        Some(text) => parse_basis(text)?,
        None => standard.b().clone(),
    };
    let bases = BasisPair::new(a, b)?;
    let d = det_form(&form, &bases)?.scaled(args.orientation.sign());
    match args.format {
        OutputFormat::Text => println!("{d}"),
        OutputFormat::Json => {
            let mut out = json!({
                "kind": form.kind(),
                "n": form.n(),
                "d": d.to_string(),
            });
            if let Form::Massey(f) = &form {
                out["m"] = json!(f.m());
            }
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> CliResult {
    let instance: GluingInstance = serde_json::from_str(&read_input(&args.input)?)?;
    let report = instance.verify()?;
    match args.format {
        OutputFormat::Text => {
            println!(
                "case {}: {}",
                report.case_tag.number(),
                if report.passed() { "pass" } else { "fail" }
            );
            println!("lhs: {}", report.lhs);
            println!("rhs: {}", report.rhs);
            println!("{}", report.detail);
        }
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&report)?),
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_corpus(args: CorpusArgs) -> CliResult {
    let selected: Vec<&corpus::CorpusEntry> = match &args.name {
        Some(name) => {
            vec![corpus::get(name).ok_or_else(|| format!("no corpus entry named `{name}`"))?]
        }
        None => corpus::entries().iter().collect(),
    };
    if args.recheck {
        let mut all_ok = true;
        for entry in &selected {
            match entry.self_check() {
                Ok(()) => println!("{}: pass ({})", entry.name, entry.expected_d),
                Err(err) => {
                    all_ok = false;
                    println!("{}: FAIL", entry.name);
                    eprintln!("error: {err}");
                }
            }
        }
        return Ok(if all_ok {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }
    match args.format {
        OutputFormat::Text => {
            for entry in &selected {
                if args.name.is_some() {
                    println!("name:        {}", entry.name);
                    println!("rank:        {}", entry.rank());
                    println!("expected_d:  {}", entry.expected_d);
                    println!("description: {}", entry.description);
                    println!("derivation:  {}", entry.derivation);
                } else {
                    println!("{}: {}", entry.name, entry.description);
                }
            }
        }
        OutputFormat::Json => {
            if args.name.is_some() {
                println!("{}", serde_json::to_string_pretty(&selected[0])?);
            } else {
                let listing: Vec<_> = selected
                    .iter()
                    .map(|e| {
                        json!({
                            "name": e.name,
                            "rank": e.rank(),
                            "expected_d": e.expected_d,
                            "description": e.description,
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&listing)?);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_check(args: CheckArgs) -> CliResult {
    let text = read_input(&args.input)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let (payload, summary) = if value.get("case_tag").is_some() {
        let instance: GluingInstance = serde_json::from_value(value)?;
        let summary = format!(
            "valid gluing instance: case {}, rank {}",
            instance.case_tag().number(),
            instance.glued_form().n()
        );
        (
            json!({
                "valid": true,
                "payload": "instance",
                "case_tag": instance.case_tag().number(),
                "n": instance.glued_form().n(),
            }),
            summary,
        )
    } else {
        let form: Form = serde_json::from_value(value)?;
        let summary = format!("valid {} form: rank {}", form.kind(), form.n());
        (
            json!({
                "valid": true,
                "payload": "form",
                "kind": form.kind(),
                "n": form.n(),
            }),
            summary,
        )
    };
    match args.format {
        OutputFormat::Text => println!("{summary}"),
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&payload)?),
    }
    Ok(ExitCode::SUCCESS)
}
