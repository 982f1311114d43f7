use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qdouble::scalar::FieldDescriptor;
use qdouble_cli::{run, Command, Failure, Flags, RunOptions};

#[derive(Parser)]
#[command(
    name = "qdouble",
    version,
    about = "Exact twisted quantum doubles and their ribbon elements"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Check the 3-cocycle conditions, θ and the antipode identities of ω.
    CheckCocycle(Args),
    /// Build D^ω(H) and run every verification sweep.
    Verify(Args),
    /// Enumerate ribbon elements u(ζβ#1) with ζ² = μ_H.
    Ribbon(Args),
    /// Dump the structure constants of D^ω(H).
    Export(Args),
}

#[derive(clap::Args)]
struct Args {
    /// Session spec (JSON).
    spec: PathBuf,
    /// Stop each sweep at its first violation.
    #[arg(long)]
    fail_fast: bool,
    /// Also check that w is multiplicative for the product of H ⋈ H*_ω.
    #[arg(long)]
    deep_iso: bool,
    #[arg(long, value_name = "N")]
    threads: Option<usize>,
    /// Write the JSON document here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Field descriptor: q, cyclotomic:N or fp:p.
    #[arg(long)]
    field: Option<String>,
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (cmd, args) = match cli.command {
        Sub::CheckCocycle(a) => (Command::CheckCocycle, a),
        Sub::Verify(a) => (Command::Verify, a),
        Sub::Ribbon(a) => (Command::Ribbon, a),
        Sub::Export(a) => (Command::Export, a),
    };
    let field = match args
        .field
        .as_deref()
        .map(str::parse::<FieldDescriptor>)
        .transpose()
    {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let spec_text = match std::fs::read_to_string(&args.spec) {
        Ok(s) => s,
        Err(e) => return fail(format!("{}: {e}", args.spec.display())),
    };
    let flags = Flags {
        options: RunOptions {
            fail_fast: args.fail_fast,
            deep_iso: args.deep_iso,
            threads: args.threads,
            out: args.out,
        },
        field,
    };
    match run(cmd, &spec_text, &flags) {
        Ok(outcome) => {
            let text = outcome.render();
            match &outcome.options.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        return fail(format!("{}: {e}", path.display()));
                    }
                }
                None => print!("{text}"),
            }
            for line in &outcome.summary {
                eprintln!("{line}");
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(Failure::Spec(e)) => fail(e),
        Err(Failure::Checks { reason, checks }) => {
            let document = serde_json::json!({ "command": cmd.name(), "error": reason, "checks": checks, "passed": false });
            print!("{}", qdouble_cli::render(&document));
            eprintln!("error: {reason}");
            ExitCode::from(2)
        }
    }
}
