use std::io::{IsTerminal, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use irrtop::commands::{self, CliError, Command, Options};
use irrtop::report;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CommandArg {
    Validate,
    Irr,
    Radical,
    Vset,
    Zlattice,
    RefinedClosure,
    PointClosure,
    Compare,
    #[value(name = "verify-thm27")]
    VerifyThm27,
    Embed,
    #[value(name = "construct31")]
    Construct31,
    #[value(name = "construct43")]
    Construct43,
    Kappa,
    Sufficiency,
    WeylModel,
    Selftest,
}

impl From<CommandArg> for Command {
    fn from(c: CommandArg) -> Self {
        match c {
            CommandArg::Validate => Command::Validate,
            CommandArg::Irr => Command::Irr,
            CommandArg::Radical => Command::Radical,
            CommandArg::Vset => Command::Vset,
            CommandArg::Zlattice => Command::Zlattice,
            CommandArg::RefinedClosure => Command::RefinedClosure,
            CommandArg::PointClosure => Command::PointClosure,
            CommandArg::Compare => Command::Compare,
            CommandArg::VerifyThm27 => Command::VerifyThm27,
            CommandArg::Embed => Command::Embed,
            CommandArg::Construct31 => Command::Construct31,
            CommandArg::Construct43 => Command::Construct43,
            CommandArg::Kappa => Command::Kappa,
            CommandArg::Sufficiency => Command::Sufficiency,
            CommandArg::WeylModel => Command::WeylModel,
            CommandArg::Selftest => Command::Selftest,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Structured,
    Human,
}

/// Simple modules of finite-dimensional algebras over prime fields and the
/// topologies on them.
#[derive(Debug, Parser)]
#[command(name = "irrtop", version)]
struct Cli {
    command: CommandArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Algebra or family document.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Points, as `0,2` or `{p0,p2}`.
    #[arg(long)]
    set: Option<String>,
    /// Generators of a two-sided ideal, separated by `;`.
    #[arg(long)]
    ideal: Option<String>,
    /// Deletion budget for the finite cofinite-style check.
    #[arg(long)]
    t: Option<usize>,
    /// Random vectors tried before any exhaustive scan.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "structured")]
    format: Format,
    /// Named points of the weyl-model space.
    #[arg(long)]
    points: Option<usize>,
    /// Permutation of the basis indices, comma-separated.
    #[arg(long)]
    basis_order: Option<String>,
    /// Adds wall-clock time to the report.
    #[arg(long)]
    timing: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Command = cli.command.into();
    let mut stdin = None;
    if command == Command::PointClosure && cli.input.is_none() && !std::io::stdin().is_terminal() {
        let mut buf = Vec::new();
        if let Err(e) = std::io::stdin().read_to_end(&mut buf) {
            eprintln!("error: cannot read standard input: {e}");
            return ExitCode::from(2);
        }
        stdin = Some(buf);
    }
    let opts = Options {
        seed: cli.seed,
        input: cli.input,
        set: cli.set,
        ideal: cli.ideal,
        t: cli.t,
        budget: cli.budget,
        points: cli.points,
        basis_order: cli.basis_order,
        timing: cli.timing,
        stdin,
    };
    let outcome = match commands::run(command, &opts) {
        Ok(o) => o,
        Err(e) => {
            match &e {
                CliError::Parse(d) => {
                    for diag in &d.0 {
                        eprintln!("error: {diag}");
                    }
                }
                other => eprintln!("error: {other}"),
            }
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let text = match cli.format {
        Format::Structured => report::to_json(&outcome.report),
        Format::Human => report::to_human(&outcome.report),
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write the report: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(outcome.exit as u8)
}
