use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use curious_core::identities as id;
use curious_core::verifier::{self, IdentityReport};
use curious_core::Polynomial;

mod output;

use output::{Envelope, ExpandReport, Format};

const EXIT_OK: u8 = 0;
const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "curious", version, about = "Exact verification of a generalized binomial-sum identity")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Report every elapsed time as 0, for byte-reproducible output
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the main identity symbolically for one m
    Verify {
        #[arg(long)]
        m: u32,
        /// Test fixture: add this constant to the right-hand side
        #[arg(long, hide = true, default_value_t = 0, allow_negative_numbers = true)]
        perturb: i64,
    },
    /// Check one lemma of the proof symbolically
    Lemma {
        #[arg(long, value_enum)]
        name: LemmaName,
        #[arg(long = "m", visible_alias = "n", value_name = "N")]
        m: u32,
    },
    /// Print the canonical expansion of an expression
    Expand {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long = "m", visible_alias = "n", value_name = "N")]
        m: u32,
    },
    /// Verify the main identity for every m up to m-max, plus all lemma suites
    Sweep {
        #[arg(long)]
        m_max: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: u32,
    },
    /// Evaluate both sides of an identity at seeded random rational points
    Check {
        #[arg(long, value_enum, default_value_t = IdentityName::Main)]
        identity: IdentityName,
        #[arg(long = "m", visible_alias = "n", value_name = "N")]
        m: u32,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Test fixture: add this constant to the right-hand side
        #[arg(long, hide = true, default_value_t = 0, allow_negative_numbers = true)]
        perturb: i64,
    },
    /// Compare definitional sums against closed forms at seeded points
    Bench {
        #[arg(long)]
        m: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        points: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    F,
    G,
    Lhs,
    Rhs,
    Chebyshev,
    JensenLhs,
    JensenRhs,
}

impl Target {
    fn build(self, n: u32) -> Polynomial {
        match self {
            Target::F => id::f_def(n),
            Target::G => id::g_def(n),
            Target::Lhs => id::lhs_identity(n),
            Target::Rhs => id::rhs_identity(n),
            Target::Chebyshev => id::chebyshev_closed(n).into_poly(),
            Target::JensenLhs => id::jensen_lhs(n),
            Target::JensenRhs => id::jensen_rhs(n),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LemmaName {
    F,
    G,
    Jensen,
    Chebyshev,
    Telescope,
    Collapse,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IdentityName {
    Main,
    F,
    G,
    Jensen,
    Chebyshev,
    Telescope,
    Collapse,
}

fn value_name<V: ValueEnum>(v: &V) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn perturbed(rhs: Polynomial, delta: i64) -> Polynomial {
    if delta == 0 {
        return rhs;
    }
    let shift = Polynomial::from_integer(rhs.ring(), delta);
    &rhs + &shift
}

fn run(cli: Cli) -> Result<u8, String> {
    let fmt = cli.format;
    let no_timing = cli.no_timing;
    let status = |ok: bool| if ok { EXIT_OK } else { EXIT_FAILED };

    match cli.command {
        Command::Verify { m, perturb } => {
            let report = if perturb == 0 {
                verifier::verify_identity(m)
            } else {
                IdentityReport::timed("main", i64::from(m), || {
                    let (lhs, rhs) = verifier::identity_sides("main", i64::from(m))?;
                    Ok((lhs, perturbed(rhs, perturb)))
                })
                .map_err(|e| e.to_string())?
            };
            let ok = report.equal;
            match fmt {
                Format::Json => Envelope::new("verify", json!({ "m": m }), vec![report]).print(no_timing),
                Format::Text => output::print_identity(&report, no_timing),
            }
            Ok(status(ok))
        }
        Command::Lemma { name, m } => {
            let report = verifier::verify_lemma(&value_name(&name), i64::from(m)).map_err(|e| e.to_string())?;
            let ok = report.equal;
            match fmt {
                Format::Json => {
                    Envelope::new("lemma", json!({ "name": value_name(&name), "m": m }), vec![report]).print(no_timing)
                }
                Format::Text => output::print_identity(&report, no_timing),
            }
            Ok(status(ok))
        }
        Command::Expand { target, m } => {
            let poly = target.build(m);
            let report = ExpandReport {
                target: value_name(&target),
                parameter: m,
                rendered: poly.render(),
                term_count: poly.term_count(),
            };
            match fmt {
                Format::Json => {
                    Envelope::new("expand", json!({ "target": value_name(&target), "m": m }), vec![report]).print(no_timing)
                }
                Format::Text => println!("{}", report.rendered),
            }
            Ok(EXIT_OK)
        }
        Command::Sweep { m_max, jobs } => {
            let report = verifier::sweep_with_jobs(m_max, jobs as usize).map_err(|e| e.to_string())?;
            let ok = report.all_equal();
            match fmt {
                Format::Json => {
                    let mut env: Envelope<IdentityReport> =
                        Envelope::new("sweep", json!({ "m_max": m_max, "jobs": jobs }), report.main.clone());
                    env.lemma_reports = Some(report.lemmas.clone());
                    env.print(no_timing)
                }
                Format::Text => output::print_sweep(&report, no_timing),
            }
            Ok(status(ok))
        }
        Command::Check { identity, m, trials, seed, perturb } => {
            let name = value_name(&identity);
            let (lhs, rhs) = verifier::identity_sides(&name, i64::from(m)).map_err(|e| e.to_string())?;
            let rhs = perturbed(rhs, perturb);
            let report = verifier::random_point_check_sides(&name, i64::from(m), &lhs, &rhs, trials, seed)
                .map_err(|e| e.to_string())?;
            let ok = report.failures == 0;
            match fmt {
                Format::Json => Envelope::new(
                    "check",
                    json!({ "identity": name, "m": m, "trials": trials, "seed": seed }),
                    vec![report],
                )
                .print(no_timing),
                Format::Text => output::print_check(&report),
            }
            Ok(status(ok))
        }
        Command::Bench { m, points, seed } => {
            let report = verifier::bench(m, points, seed).map_err(|e| e.to_string())?;
            let ok = report.agreed;
            match fmt {
                Format::Json => Envelope::new("bench", json!({ "m": m, "points": points, "seed": seed }), vec![report])
                    .print(no_timing),
                Format::Text => output::print_bench(&report, no_timing),
            }
            Ok(status(ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
