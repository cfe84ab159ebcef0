//! Command-line driver: classify models, check axioms, list quotients,
//! run the verification harness, and hunt for counterexamples.
//!
//! Exit codes: 0 success, 1 usage, 2 parse/validation failure, 3 theorem
//! harness violation.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cu_lab::analysis::analyze;
use cu_lab::error::CuError;
use cu_lab::format::{parse_model, parse_search_spec};
use cu_lab::harness::run_harness;
use cu_lab::report;
use cu_lab::search::hunt;
use cu_lab::structure::{check_axioms, enumerate_ideals, classify_finiteness, quotient, Scale};
use cu_lab::Budget;

#[derive(Parser)]
#[command(name = "cu-lab", version, about = "workbench for abstract Cuntz semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Cap for searched multiplicities and witness grids on infinite models
    #[arg(long = "budget-n", default_value_t = 8)]
    budget_n: u32,
    /// Basis-chain expansion depth on infinite models
    #[arg(long = "budget-basis", default_value_t = 12)]
    budget_basis: u32,
    /// Worker threads for parallel sweeps
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Emit the machine-readable document instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Full classification report for a model file
    Classify {
        model: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// O5/O6/O7 verdicts for a model file
    CheckAxioms {
        model: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// The ideal lattice and per-quotient summaries
    Quotients {
        model: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Run the theorem harness; nonzero exit on any violation
    Verify {
        model: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Hunt for models satisfying a target expression
    Search {
        spec: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

fn read(path: &PathBuf) -> Result<String, CuError> {
    std::fs::read_to_string(path)
        .map_err(|e| CuError::ParseError(format!("{}: {e}", path.display())))
}

fn budget_of(opts: &CommonOpts) -> Budget {
    Budget { existential: opts.budget_n, basis_depth: opts.budget_basis }
}

fn configure_jobs(opts: &CommonOpts) {
    if let Some(jobs) = opts.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
}

fn run() -> Result<ExitCode, CuError> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message; help/version are not errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0u8,
                _ => 1u8,
            };
            e.print().expect("stderr is writable");
            return Ok(ExitCode::from(code));
        }
    };

    match &cli.command {
        Command::Classify { model, opts } => {
            configure_jobs(opts);
            let budget = budget_of(opts);
            let (model, scale) = parse_model(&read(model)?)?;
            let scale = scale.unwrap_or_else(|| Scale::full(&model));
            let analysis = analyze(&model, &scale, &budget)?;
            if opts.json {
                let doc = report::analysis_json(&model, &scale, &analysis);
                println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
            } else {
                print!("{}", report::analysis_text(&model, &scale, &analysis));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckAxioms { model, opts } => {
            configure_jobs(opts);
            let budget = budget_of(opts);
            let (model, _) = parse_model(&read(model)?)?;
            let axioms = check_axioms(&model, &budget)?;
            if opts.json {
                let doc = serde_json::json!({
                    "O5": report::verdict_json(&model, &axioms.o5),
                    "O6": report::verdict_json(&model, &axioms.o6),
                    "O7": report::verdict_json(&model, &axioms.o7),
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
            } else {
                println!("O5: {}", axioms.o5.status);
                println!("O6: {}", axioms.o6.status);
                println!("O7: {}", axioms.o7.status);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Quotients { model, opts } => {
            configure_jobs(opts);
            let budget = budget_of(opts);
            let (model, _) = parse_model(&read(model)?)?;
            let ideals = enumerate_ideals(&model)?;
            if opts.json {
                let mut items = Vec::new();
                for ideal in &ideals {
                    let q = quotient(&model, ideal)?;
                    let fin = classify_finiteness(q.target(), &budget)?;
                    items.push(serde_json::json!({
                        "ideal_top": cu_lab::format::element_json(&model, ideal.top()),
                        "target": q.target().describe(),
                        "target_size": q.target().carrier_len(),
                        "target_stably_finite":
                            report::verdict_json(q.target(), &fin.stably_finite),
                    }));
                }
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "ideal_count": ideals.len(),
                        "quotients": items,
                    }))
                    .expect("json")
                );
            } else {
                println!("{} ideal(s)", ideals.len());
                for ideal in &ideals {
                    let q = quotient(&model, ideal)?;
                    let fin = classify_finiteness(q.target(), &budget)?;
                    let size = match q.target().carrier_len() {
                        Some(n) => n.to_string(),
                        None => "infinite".into(),
                    };
                    println!(
                        "ideal ∞-top {} -> target {} (carrier {}, stably finite: {})",
                        model.format_element(ideal.top()),
                        q.target().describe(),
                        size,
                        fin.stably_finite.status,
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { model, opts } => {
            configure_jobs(opts);
            let budget = budget_of(opts);
            let (model, scale) = parse_model(&read(model)?)?;
            let scale = scale.unwrap_or_else(|| Scale::full(&model));
            let violations = run_harness(&model, &scale, &budget)?;
            if violations.is_empty() {
                println!("ok: all checks passed on {}", model.describe());
                Ok(ExitCode::SUCCESS)
            } else {
                println!("{} violation(s) on {}:", violations.len(), model.describe());
                for v in &violations {
                    println!("  {v}");
                }
                Ok(ExitCode::from(3))
            }
        }
        Command::Search { spec, opts } => {
            configure_jobs(opts);
            let budget = budget_of(opts);
            let spec = parse_search_spec(&read(spec)?)?;
            let results = hunt(&spec, &budget)?;
            if opts.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report::search_results_json(&results))
                        .expect("json")
                );
            } else {
                print!("{}", report::search_results_text(&results));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
