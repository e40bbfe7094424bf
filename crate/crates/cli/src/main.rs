use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use ordcheck_cli::commands::{self, orderable::Mode, CommandOutput};
use ordcheck_cli::formats::{self, FormatError, InstanceDocument};
use ordcheck_cli::report::{input_digest, RunReport};
use ordcheck_core::group::VerifyBudget;

#[derive(Parser)]
#[command(
    name = "ordcheck",
    version,
    about = "Finite-model checks for relation axioms, orderability, additivity and representation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputOpts {
    /// Emit the full machine-readable report.
    #[arg(long, global = false)]
    json: bool,
    /// Emit the human-readable summary (default).
    #[arg(long, conflicts_with = "json")]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check relation axioms and, with a topology, continuity.
    Check {
        /// Relation instance file.
        #[arg(long)]
        input: PathBuf,
        /// Topology instance file for the continuity check.
        #[arg(long)]
        topology: Option<PathBuf>,
        /// Comma-separated properties that must hold (exit 1 otherwise).
        #[arg(long, value_delimiter = ',')]
        require: Vec<String>,
        /// Raise the exhaustive-check size cap.
        #[arg(long)]
        max_size: Option<usize>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Orderability of a finite space: criterion and searches.
    Orderable {
        /// Topology instance file.
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated modes: criterion, search, weak, brute.
        #[arg(long, value_delimiter = ',', default_value = "criterion")]
        mode: Vec<String>,
        /// Raise the search size caps.
        #[arg(long)]
        max_size: Option<usize>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Additivity on a finite Abelian group: one relation or the whole
    /// universe.
    Group {
        /// Group-relation instance file (relation mode).
        #[arg(long, conflicts_with_all = ["moduli", "exhaustive", "sample"])]
        input: Option<PathBuf>,
        /// Cyclic-group moduli, e.g. 2,2 (suite mode).
        #[arg(long, value_delimiter = ',')]
        moduli: Option<Vec<u32>>,
        /// Scan every relation on the group.
        #[arg(long, conflicts_with = "sample")]
        exhaustive: bool,
        /// Scan this many seeded random relations.
        #[arg(long)]
        sample: Option<u64>,
        /// Seed for sampled scans.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads for universe scans.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Event-algebra checks: Villegas additivity or the DeGroot suite.
    Sigma {
        /// Event-relation instance file (relation mode).
        #[arg(long, conflicts_with_all = ["atoms", "exhaustive", "sample"])]
        input: Option<PathBuf>,
        /// Atom count of the algebra (suite mode).
        #[arg(long)]
        atoms: Option<u32>,
        /// Scan every relation on the algebra.
        #[arg(long, conflicts_with = "sample")]
        exhaustive: bool,
        /// Scan this many seeded random relations.
        #[arg(long)]
        sample: Option<u64>,
        /// Seed for sampled scans.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Claim to verify (only `degroot`).
        #[arg(long)]
        claim: Option<String>,
        /// Worker threads for universe scans.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Exact rational representation: linear utility or qualitative
    /// probability.
    Represent {
        /// Verdicts or event-relation instance file.
        #[arg(long)]
        input: PathBuf,
        /// Require strictly positive atom weights in the qualitative
        /// solver.
        #[arg(long)]
        positive_atoms: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Monotone-continuity axioms over the chains of a probes file.
    Probe {
        /// Probes instance file (structure + oracle + probes).
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Print the tool version.
    Version,
}

fn read_instance(path: &Path) -> Result<(InstanceDocument, Vec<u8>), FormatError> {
    let bytes = std::fs::read(path).map_err(|e| {
        FormatError::Json(format!("cannot read {}: {e}", path.display()))
    })?;
    let doc = formats::parse_instance(&bytes)?;
    Ok((doc, bytes))
}

fn render_text(report: &RunReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "ordcheck {} — {}\n",
        report.operation, report.verdict
    ));
    out.push_str(&format!("input:  {}\n", report.input_digest));
    out.push_str(&format!("digest: {}\n", report.report_digest));
    if let Some(ms) = report.timing_ms {
        out.push_str(&format!("time:   {ms} ms\n"));
    }
    out.push_str(&serde_json::to_string_pretty(&report.details).expect("details serialize"));
    out.push('\n');
    out
}

fn emit(mut output: CommandOutput, json: bool, started: Instant) -> i32 {
    output.report.timing_ms = Some(started.elapsed().as_millis() as u64);
    if json {
        println!("{}", output.report.to_json());
    } else {
        print!("{}", render_text(&output.report));
    }
    output.exit_code
}

fn budget_from_flags(
    exhaustive: bool,
    sample: Option<u64>,
    seed: u64,
) -> Result<VerifyBudget, FormatError> {
    match (exhaustive, sample) {
        (true, None) => Ok(VerifyBudget::Exhaustive),
        (false, Some(samples)) => Ok(VerifyBudget::Sampled { samples, seed }),
        _ => Err(FormatError::invalid(
            "--exhaustive/--sample",
            "choose exactly one of --exhaustive and --sample N",
        )),
    }
}

fn run(cli: Cli) -> Result<i32, FormatError> {
    let started = Instant::now();
    match cli.command {
        Command::Check {
            input,
            topology,
            require,
            max_size,
            out,
        } => {
            let (doc, bytes) = read_instance(&input)?;
            let (topology_doc, digest) = match topology {
                Some(path) => {
                    let (tdoc, tbytes) = read_instance(&path)?;
                    (Some(tdoc), input_digest(&[&bytes, &tbytes]))
                }
                None => (None, input_digest(&[&bytes])),
            };
            let output =
                commands::check::run(&doc, topology_doc.as_ref(), &require, max_size, digest)?;
            Ok(emit(output, out.json, started))
        }
        Command::Orderable {
            input,
            mode,
            max_size,
            out,
        } => {
            let (doc, bytes) = read_instance(&input)?;
            let modes: Vec<Mode> = mode
                .iter()
                .map(|m| Mode::parse(m))
                .collect::<Result<_, _>>()?;
            let output =
                commands::orderable::run(&doc, &modes, max_size, input_digest(&[&bytes]))?;
            Ok(emit(output, out.json, started))
        }
        Command::Group {
            input,
            moduli,
            exhaustive,
            sample,
            seed,
            threads,
            out,
        } => match (input, moduli) {
            (Some(path), None) => {
                let (doc, bytes) = read_instance(&path)?;
                let output = commands::group::run_relation(&doc, input_digest(&[&bytes]))?;
                Ok(emit(output, out.json, started))
            }
            (None, Some(moduli)) => {
                let budget = budget_from_flags(exhaustive, sample, seed)?;
                let desc = format!("group:moduli={moduli:?}:budget={budget:?}");
                let output = commands::group::run_suite(
                    &moduli,
                    budget,
                    threads,
                    input_digest(&[desc.as_bytes()]),
                )?;
                Ok(emit(output, out.json, started))
            }
            _ => Err(FormatError::invalid(
                "group",
                "give either --input FILE or --moduli LIST with a budget",
            )),
        },
        Command::Sigma {
            input,
            atoms,
            exhaustive,
            sample,
            seed,
            claim,
            threads,
            out,
        } => {
            if let Some(c) = &claim {
                if c != "degroot" {
                    return Err(FormatError::invalid(
                        "--claim",
                        format!("unknown claim `{c}` (only `degroot`)"),
                    ));
                }
            }
            match (input, atoms) {
                (Some(path), None) => {
                    let (doc, bytes) = read_instance(&path)?;
                    let output = commands::sigma::run_relation(&doc, input_digest(&[&bytes]))?;
                    Ok(emit(output, out.json, started))
                }
                (None, Some(atoms)) => {
                    let budget = budget_from_flags(exhaustive, sample, seed)?;
                    let desc = format!("sigma:atoms={atoms}:budget={budget:?}");
                    let output = commands::sigma::run_suite(
                        atoms,
                        budget,
                        threads,
                        input_digest(&[desc.as_bytes()]),
                    )?;
                    Ok(emit(output, out.json, started))
                }
                _ => Err(FormatError::invalid(
                    "sigma",
                    "give either --input FILE or --atoms N with a budget",
                )),
            }
        }
        Command::Represent {
            input,
            positive_atoms,
            out,
        } => {
            let (doc, bytes) = read_instance(&input)?;
            let output =
                commands::represent::run(&doc, positive_atoms, input_digest(&[&bytes]))?;
            Ok(emit(output, out.json, started))
        }
        Command::Probe { input, out } => {
            let (doc, bytes) = read_instance(&input)?;
            let output = commands::probe::run(&doc, input_digest(&[&bytes]))?;
            Ok(emit(output, out.json, started))
        }
        Command::Version => {
            println!("ordcheck {}", env!("CARGO_PKG_VERSION"));
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}
