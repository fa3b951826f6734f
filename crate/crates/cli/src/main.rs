//! Command-line front end: expression evaluation, factoring, sampled
//! axiom checks, and the unique-factorization-failure verifier, with
//! text and JSON output for scripting.
//!
//! Exit codes are stable: 0 success, 1 internal error or failed check,
//! 2 parse error, 3 unsupported operation or unknown semiring, 4
//! inconclusive verification.

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sempoly::error::AlgebraError;
use sempoly::expr;
use sempoly::factor::{self, SplitOptions};
use sempoly::s0::RewriteBudget;
use sempoly::semiring::axioms::check_axioms_with;
use sempoly::semiring::Registry;
use sempoly::theorem::{self, VerifyConfig};

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum OutputMode {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Node cap for congruence searches in the presented semiring.
    #[arg(long, default_value_t = 100_000)]
    budget_nodes: usize,
    /// Per-side depth cap for congruence searches.
    #[arg(long, default_value_t = 20)]
    budget_depth: usize,
}

impl BudgetArgs {
    fn budget(&self) -> RewriteBudget {
        RewriteBudget { max_nodes: self.budget_nodes, max_depth: self.budget_depth }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "sempoly",
    version,
    about = "Exact polynomial algebra over commutative semirings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the registered semirings and their capability flags.
    ListSemirings {
        #[arg(long, value_enum, default_value_t)]
        output: OutputMode,
    },
    /// Canonically render one expression, or compare two for equality.
    Eval {
        #[arg(long)]
        semiring: String,
        #[arg(long, value_enum, default_value_t)]
        output: OutputMode,
        #[command(flatten)]
        budget: BudgetArgs,
        /// One or two polynomial expressions.
        #[arg(num_args = 1..=2, required = true)]
        exprs: Vec<String>,
    },
    /// Factor a polynomial: complete enumeration over semirings with
    /// bounded-enumerable coefficients, certificate mode elsewhere.
    Factor {
        #[arg(long)]
        semiring: String,
        #[arg(long, value_enum, default_value_t)]
        output: OutputMode,
        /// Coefficient bound for the enumeration oracle.
        #[arg(long, default_value_t = 4)]
        bound: u64,
        expr: String,
    },
    /// Verify that unique factorization fails over the chosen semiring
    /// (or over every registered one with --all).
    VerifyTheorem {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        semiring: Option<String>,
        /// Verify every registered semiring, in id order.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t)]
        output: OutputMode,
        /// Seed for the backing axiom-harness run.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample count for the backing axiom-harness run.
        #[arg(long, default_value_t = 1000)]
        samples: u32,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run the sampled axiom harness.
    CheckAxioms {
        #[arg(long)]
        semiring: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: u32,
        #[arg(long, value_enum, default_value_t)]
        output: OutputMode,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn algebra_exit_code(error: &AlgebraError) -> i32 {
    match error {
        AlgebraError::Unsupported { .. }
        | AlgebraError::UnknownSemiring(_)
        | AlgebraError::Precondition(_) => EXIT_UNSUPPORTED,
        _ => EXIT_INTERNAL,
    }
}

fn fail(error: &dyn std::fmt::Display, code: i32) -> i32 {
    eprintln!("error: {error}");
    code
}

fn run(cli: Cli) -> i32 {
    let registry = Registry::with_builtins();
    match cli.command {
        Command::ListSemirings { output } => {
            print_payload(output, output::list_text(&registry), || output::list_json(&registry));
            EXIT_SUCCESS
        }
        Command::Eval { semiring, output, budget, exprs } => {
            let descriptor = match registry.get(&semiring) {
                Ok(d) => d,
                Err(e) => return fail(&e, EXIT_UNSUPPORTED),
            };
            let mut parsed = Vec::new();
            for src in &exprs {
                match expr::parse(src, descriptor) {
                    Ok(p) => parsed.push(p),
                    Err(e) => return fail(&e, EXIT_PARSE),
                }
            }
            let result = if parsed.len() == 1 {
                output::EvalResult::Rendered(expr::render(&parsed[0]))
            } else {
                match parsed[0].equiv_with(&parsed[1], &budget.budget()) {
                    Ok(verdict) => output::EvalResult::Compared(verdict),
                    Err(e) => return fail(&e, algebra_exit_code(&e)),
                }
            };
            print_payload(output, output::eval_text(&result), || {
                output::eval_json(descriptor.id(), &exprs, &result)
            });
            EXIT_SUCCESS
        }
        Command::Factor { semiring, output, bound, expr: src } => {
            let descriptor = match registry.get(&semiring) {
                Ok(d) => d,
                Err(e) => return fail(&e, EXIT_UNSUPPORTED),
            };
            let polynomial = match expr::parse(&src, descriptor) {
                Ok(p) => p,
                Err(e) => return fail(&e, EXIT_PARSE),
            };
            if descriptor.capabilities().coefficients_enumerable_bounded {
                let options = SplitOptions { bound, monic_only: true };
                match factor::all_factorizations_with(&polynomial, &options) {
                    Ok(factorizations) => {
                        print_payload(
                            output,
                            output::factorizations_text(&src, bound, &factorizations),
                            || {
                                output::factorizations_json(
                                    descriptor.id(),
                                    &src,
                                    bound,
                                    &factorizations,
                                )
                            },
                        );
                        EXIT_SUCCESS
                    }
                    Err(e) => fail(&e, algebra_exit_code(&e)),
                }
            } else {
                match factor::shape_certificate(descriptor, &polynomial) {
                    Ok(Some(certificate)) => {
                        print_payload(output, output::certificate_text(&src, &certificate), || {
                            output::certificate_json(descriptor.id(), &src, &certificate)
                        });
                        EXIT_SUCCESS
                    }
                    Ok(None) => fail(
                        &format!(
                            "no certificate applies to {:?} over {:?}; certified shapes are \
                             T^n+a with a unit constant, T^2+T+1, and T^4+T^2+1",
                            src,
                            descriptor.id()
                        ),
                        EXIT_UNSUPPORTED,
                    ),
                    Err(e) => fail(&e, algebra_exit_code(&e)),
                }
            }
        }
        Command::VerifyTheorem { semiring, all, output, seed, samples, budget } => {
            let config =
                VerifyConfig { axiom_seed: seed, axiom_samples: samples, budget: budget.budget() };
            let descriptors: Vec<_> = if all {
                registry.descriptors().iter().collect()
            } else {
                let id = semiring.expect("clap enforces --semiring unless --all");
                match registry.get(&id) {
                    Ok(d) => vec![d],
                    Err(e) => return fail(&e, EXIT_UNSUPPORTED),
                }
            };
            let mut reports = Vec::new();
            for descriptor in descriptors {
                match theorem::verify_non_ufd_with(descriptor, &config) {
                    Ok(report) => reports.push(report),
                    Err(e) => return fail(&e, algebra_exit_code(&e)),
                }
            }
            match output {
                OutputMode::Text => {
                    for (i, report) in reports.iter().enumerate() {
                        if i > 0 {
                            println!();
                        }
                        print!("{}", output::report_text(report));
                    }
                }
                OutputMode::Json => {
                    let value = if all {
                        serde_json::Value::Array(
                            reports.iter().map(|r| output::report_json(r, seed, samples)).collect(),
                        )
                    } else {
                        output::report_json(&reports[0], seed, samples)
                    };
                    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
                }
            }
            if reports.iter().all(|r| r.verdict.is_not_ufd()) {
                EXIT_SUCCESS
            } else {
                EXIT_INCONCLUSIVE
            }
        }
        Command::CheckAxioms { semiring, seed, samples, output, budget } => {
            let descriptor = match registry.get(&semiring) {
                Ok(d) => d,
                Err(e) => return fail(&e, EXIT_UNSUPPORTED),
            };
            if samples == 0 {
                return fail(&"--samples must be at least 1".to_string(), EXIT_UNSUPPORTED);
            }
            let budget = budget.budget();
            let report = check_axioms_with(descriptor, seed, samples, &budget);
            print_payload(output, output::axioms_text(&report), || {
                output::axioms_json(&report, &budget)
            });
            if report.all_passed() {
                EXIT_SUCCESS
            } else {
                EXIT_INTERNAL
            }
        }
    }
}

fn print_payload(mode: OutputMode, text: String, json: impl FnOnce() -> serde_json::Value) {
    match mode {
        OutputMode::Text => print!("{text}"),
        OutputMode::Json => {
            println!("{}", serde_json::to_string_pretty(&json()).expect("serializable"))
        }
    }
}
