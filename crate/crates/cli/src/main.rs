use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use veronese_cli::{parse_document, parse_field, run, BettiSource, CliError, Command, DegreeTarget, Flags};
use veronese_core::betti::GradingKind;
use veronese_core::linearity::OrderDirection;

/// Betti tables, linearity and splitting checks for monomial ideals,
/// in particular intersections of Veronese ideals.
///
/// Exit status: 0 on success, 1 on a negative verdict, 2 on error.
#[derive(Parser)]
#[command(name = "veronese", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Field characteristic for homology: 0 for the rationals, or a supported prime.
    #[arg(long, global = true, env = "VERONESE_FIELD", default_value = "32003")]
    field: String,

    #[arg(long, global = true, value_enum, default_value_t = GradingArg::Total)]
    grading: GradingArg,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args)]
struct Doc {
    /// Ideal document (JSON); `-` reads standard input.
    document: PathBuf,
}

#[derive(Subcommand)]
enum Cmd {
    /// Minimal generators of the ideal.
    Build(Doc),
    /// Graded Betti table.
    Betti {
        /// Evaluate the closed form (two-component or fat-point documents).
        #[arg(long, conflicts_with = "oracle")]
        formula: bool,
        /// Compute by simplicial homology (the default).
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        doc: Doc,
    },
    /// Componentwise linearity.
    Cwl(Doc),
    /// Exchange property of degree components.
    Polymatroidal {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        degree: Option<u32>,
        /// Every degree up to the regularity.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        doc: Doc,
    },
    /// Linear quotients: search, or check one order.
    LinearQuotients {
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
        #[command(flatten)]
        doc: Doc,
    },
    /// Splitting of a two-component intersection.
    Split(Doc),
    /// Alexander dual of a squarefree ideal.
    Dual(Doc),
    /// Sequential Cohen-Macaulayness of a complex.
    Seqcm(Doc),
    /// Multiplicity against the product of maximal shifts.
    MultBound(Doc),
    /// Hilbert series numerator, codimension and multiplicity.
    Hilbert(Doc),
}

#[derive(Clone, Copy, ValueEnum)]
enum GradingArg {
    Fine,
    Block,
    Total,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    DescRevlex,
    AscRevlex,
    DescLex,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn main_inner(cli: Cli) -> Result<i32, CliError> {
    let flags = Flags {
        field: parse_field(&cli.field)?,
        grading: match cli.grading {
            GradingArg::Fine => GradingKind::Fine,
            GradingArg::Block => GradingKind::Block,
            GradingArg::Total => GradingKind::Total,
        },
    };
    let (command, doc) = match cli.command {
        Cmd::Build(d) => (Command::Build, d),
        Cmd::Betti { formula, doc, .. } => {
            let source = if formula { BettiSource::Formula } else { BettiSource::Oracle };
            (Command::Betti(source), doc)
        }
        Cmd::Cwl(d) => (Command::Cwl, d),
        Cmd::Polymatroidal { degree, doc, .. } => {
            let target = degree.map_or(DegreeTarget::All, DegreeTarget::Degree);
            (Command::Polymatroidal(target), doc)
        }
        Cmd::LinearQuotients { order, doc } => {
            let order = order.map(|o| match o {
                OrderArg::DescRevlex => OrderDirection::DescendingRevlex,
                OrderArg::AscRevlex => OrderDirection::AscendingRevlex,
                OrderArg::DescLex => OrderDirection::DescendingLex,
            });
            (Command::LinearQuotients(order), doc)
        }
        Cmd::Split(d) => (Command::Split, d),
        Cmd::Dual(d) => (Command::Dual, d),
        Cmd::Seqcm(d) => (Command::SeqCm, d),
        Cmd::MultBound(d) => (Command::MultBound, d),
        Cmd::Hilbert(d) => (Command::Hilbert, d),
    };
    let document = parse_document(&read(&doc.document)?)?;
    let report = run(command, &document, &flags)?;
    if cli.json {
        println!("{}", report.to_json_string());
    } else {
        print!("{}", report.text);
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // help and version exit 0, usage errors 2
        Err(e) => e.exit(),
    };
    match main_inner(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
