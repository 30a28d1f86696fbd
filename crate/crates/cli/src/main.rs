//! `secant`: invariants of `σ_t(2,a,b)` from the command line.
//!
//! Every subcommand prints a JSON [`report::RunReport`] by default. Exit
//! codes: 0 success, 1 a checked property failed, 2 usage or parameters
//! outside `t < a`, 3 budget exhausted.

mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use secant_core::groebner::{FieldKind, GroebnerBudget};
use secant_core::repro::ReproConfig;
use secant_core::shelling::{HBudget, HMethod};
use secant_core::tensor::SampleRange;
use secant_core::Error;

use commands::{Claim, TensorSource};
use report::{key_value_text, Output, RunReport, SCHEMA_VERSION};

#[derive(Parser, Debug)]
#[command(
    name = "secant",
    version,
    about = "Invariants of the secant varieties σ_t(2,a,b)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; `csv` is only available for `degree`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Worker threads for parallel sections.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Seed for sampled tensors and the acceptance suite.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Overrides the main work cap of the command: facets for shelling
    /// and listing, DP states for `f-vector`, recursion nodes for
    /// `monomial`, S-pairs for Gröbner checks.
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Adds the wall time to the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone, Copy)]
struct Triple {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long)]
    t: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree, dimension and per-tuple determinants, or a table with `--max-b`.
    Degree {
        #[arg(long, requires_all = ["b", "t"], conflicts_with = "max_b")]
        a: Option<usize>,
        #[arg(long, requires = "a")]
        b: Option<usize>,
        #[arg(long, requires = "a")]
        t: Option<usize>,
        /// Every `2 <= a <= b <= max_b`, `t < a`.
        #[arg(long, required_unless_present = "a")]
        max_b: Option<usize>,
    },
    /// Facets of the complex as lattice-path records.
    Facets {
        #[command(flatten)]
        p: Triple,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// h-vector, Hilbert series, regularity and degree.
    Hvector {
        #[command(flatten)]
        p: Triple,
        #[arg(long, default_value = "shelling", value_parser = parse_method)]
        method: HMethod,
        /// Skip the shelling certificate.
        #[arg(long)]
        no_certify: bool,
    },
    /// Regularity against the bound `at`.
    Regularity {
        #[command(flatten)]
        p: Triple,
        #[arg(long, default_value = "shelling", value_parser = parse_method)]
        method: HMethod,
    },
    /// Builds the facet order and checks the shelling condition.
    ShellingCertify {
        #[command(flatten)]
        p: Triple,
        /// Also check that the order extends the facet partial order.
        #[arg(long)]
        check_extension: bool,
    },
    /// Gröbner certification of the minor presentation, or equality of the
    /// Hibi and 2-minor ideals.
    GroebnerCheck {
        #[command(flatten)]
        p: Triple,
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: FieldKind,
        #[arg(long, value_enum, default_value = "minors")]
        claim: Claim,
        /// Skip comparing the initial ideal with the chain ideal.
        #[arg(long)]
        certify_only: bool,
    },
    /// Chains of the poset on the variables.
    Chains {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Decides whether a tensor satisfies the minor equations of `σ_t`.
    Membership {
        #[arg(long)]
        t: usize,
        /// Tensor JSON file.
        #[arg(long, required_unless_present = "sample_rank")]
        input: Option<String>,
        /// Samples a sum of this many rank-one tensors instead.
        #[arg(long, requires_all = ["a", "b"], conflicts_with = "input")]
        sample_rank: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long, default_value_t = -10, allow_hyphen_values = true)]
        low: i64,
        #[arg(long, default_value_t = 10, allow_hyphen_values = true)]
        high: i64,
    },
    /// Draws a facet on the `P′` grid.
    Render {
        #[command(flatten)]
        p: Triple,
        /// Position in the shelling order.
        #[arg(long, default_value_t = 0, conflicts_with = "input")]
        rank: usize,
        /// Facet record JSON file, as printed by `facets`.
        #[arg(long)]
        input: Option<String>,
    },
    /// Runs the acceptance criteria and prints a pass/fail table.
    Repro {
        /// Criterion ids to run, e.g. `--only AC5 --only AC12`.
        #[arg(long)]
        only: Vec<String>,
        #[arg(long, default_value_t = 200)]
        rank_samples: u64,
        #[arg(long, default_value_t = 50)]
        dense_samples: u64,
    },
}

fn parse_method(s: &str) -> Result<HMethod, String> {
    HMethod::parse(s).map_err(|e| e.to_string())
}

fn parse_field(s: &str) -> Result<FieldKind, String> {
    FieldKind::parse(s).map_err(|e| e.to_string())
}

fn h_budget(cap: Option<u64>) -> HBudget {
    let mut b = HBudget::default();
    if let Some(c) = cap {
        b = HBudget {
            max_facets: c,
            max_states: c,
            max_nodes: c,
        };
    }
    b
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Degree { .. } => "degree",
        Command::Facets { .. } => "facets",
        Command::Hvector { .. } => "hvector",
        Command::Regularity { .. } => "regularity",
        Command::ShellingCertify { .. } => "shelling-certify",
        Command::GroebnerCheck { .. } => "groebner-check",
        Command::Chains { .. } => "chains",
        Command::Membership { .. } => "membership",
        Command::Render { .. } => "render",
        Command::Repro { .. } => "repro",
    }
}

fn dispatch(cli: &Cli) -> secant_core::Result<Output> {
    let facet_cap = cli.budget.unwrap_or(200_000);
    match &cli.command {
        Command::Degree {
            a: Some(a),
            b: Some(b),
            t: Some(t),
            ..
        } => commands::degree_one(*a, *b, *t),
        Command::Degree { max_b: Some(m), .. } => commands::degree_grid(*m),
        Command::Degree { .. } => Err(Error::InvalidParams("give --a --b --t or --max-b".into())),
        Command::Facets { p, limit } => commands::facets(p.a, p.b, p.t, *limit, facet_cap),
        Command::Hvector {
            p,
            method,
            no_certify,
        } => commands::hvector(p.a, p.b, p.t, *method, h_budget(cli.budget), !no_certify),
        Command::Regularity { p, method } => {
            commands::regularity_cmd(p.a, p.b, p.t, *method, h_budget(cli.budget))
        }
        Command::ShellingCertify { p, check_extension } => {
            commands::shelling_certify(p.a, p.b, p.t, facet_cap, *check_extension)
        }
        Command::GroebnerCheck {
            p,
            field,
            claim,
            certify_only,
        } => {
            let mut budget = GroebnerBudget::default();
            if let Some(c) = cli.budget {
                budget.max_spairs = c;
            }
            commands::groebner_check(p.a, p.b, p.t, *field, *claim, *certify_only, budget)
        }
        Command::Chains { a, b, len, limit } => commands::chains(*a, *b, *len, *limit),
        Command::Membership {
            t,
            input,
            sample_rank,
            a,
            b,
            low,
            high,
        } => {
            let source = match (input, sample_rank) {
                (Some(path), _) => TensorSource::File(path.clone()),
                (None, Some(rank)) => {
                    if low > high {
                        return Err(Error::InvalidParams(format!(
                            "empty sample range [{low}, {high}]"
                        )));
                    }
                    TensorSource::Sample {
                        a: a.expect("clap requires --a"),
                        b: b.expect("clap requires --b"),
                        rank: *rank,
                        seed: cli.seed,
                        range: SampleRange {
                            low: *low,
                            high: *high,
                        },
                    }
                }
                (None, None) => unreachable!("clap requires --input or --sample-rank"),
            };
            commands::membership_cmd(source, *t)
        }
        Command::Render { p, rank, input } => {
            commands::render(p.a, p.b, p.t, *rank, input.as_deref(), facet_cap)
        }
        Command::Repro {
            only,
            rank_samples,
            dense_samples,
        } => {
            let mut config = ReproConfig {
                rank_samples: *rank_samples,
                dense_samples: *dense_samples,
                seed: cli.seed,
                ..Default::default()
            };
            if cli.budget.is_some() {
                config.h_budget = h_budget(cli.budget);
            }
            commands::repro_cmd(config, only, cli.timing)
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Budget { .. } | Error::Overflow(_) => 3,
        Error::NotGroebner(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let default_format = match cli.command {
        Command::Render { .. } | Command::Repro { .. } => Format::Text,
        _ => Format::Json,
    };
    let format = cli.format.unwrap_or(default_format);
    if format == Format::Csv && name != "degree" {
        eprintln!("error: --format csv is only available for degree");
        return ExitCode::from(2);
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.max(1))
        .build_global()
    {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }

    let start = Instant::now();
    let out = match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let elapsed = start.elapsed();

    match format {
        Format::Json => {
            let report = RunReport {
                schema_version: SCHEMA_VERSION,
                command: name.to_string(),
                params: out.params,
                results: out.results,
                budget: out.budget,
                wall_seconds: cli.timing.then_some(elapsed.as_secs_f64()),
                version: env!("CARGO_PKG_VERSION"),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
        }
        Format::Csv => print!("{}", out.csv.expect("degree always has CSV")),
        Format::Text => {
            print!(
                "{}",
                out.text.unwrap_or_else(|| key_value_text(&out.results))
            );
            if cli.timing {
                println!("wall time: {:.3}s", elapsed.as_secs_f64());
            }
        }
    }

    if out.claim_holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
