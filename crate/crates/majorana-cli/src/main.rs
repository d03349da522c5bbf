//! Command-line driver: verification suites, table reproduction, bispinor
//! generation, and braid evaluation, with JSON output for machines and
//! aligned text for humans.
//!
//! Exit codes: 0 when every requested check passes, 1 when any check fails,
//! 2 on usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use majorana::bispinor::{self, Direction};
use majorana::qubit;
use majorana::report::Report;
use majorana::scalar::Complex64;
use majorana::tqc::{self, BraidWord, FusionState};
use majorana::FLOAT_TOL;

mod render;

#[derive(Parser)]
#[command(
    name = "majorana",
    version,
    about = "Massless bispinors, entangling gates, and Majorana zero mode braiding, verified exactly"
)]
struct Cli {
    /// Seed for randomized direction sampling (reports are byte-stable per seed)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Number of sampled directions for float-backend checks
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,

    /// Emit JSON instead of aligned text (verify always emits JSON on stdout)
    #[arg(long, global = true)]
    json: bool,

    /// Run on the exact backend (bispinor: requires theta = phi = 0)
    #[arg(long, global = true)]
    exact: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    All,
    Gamma,
    Bispinor,
    Qubit,
    Tqc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolutionType {
    Weyl,
    Majorana,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites; JSON report to stdout, summary to stderr
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteName::All)]
        suite: SuiteName,
    },
    /// Reproduce the eigenvalue table and both gate-action tables
    Tables {
        /// Emit CSV instead of text or JSON
        #[arg(long)]
        csv: bool,
    },
    /// Print one solution's components and measured quantum numbers as JSON
    Bispinor {
        #[arg(long = "type", value_enum)]
        solution_type: SolutionType,
        /// Solution index 1..=4
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        index: u8,
        /// Polar angle in radians, [0, pi]
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        /// Azimuthal angle in radians, [0, 2*pi)
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
    },
    /// Apply a braid word to an occupation-basis state and print the result
    Braid {
        /// Comma-separated generators, e.g. "B23,B12"; empty for the identity
        #[arg(long)]
        word: String,
        /// Initial occupation state: 00, 10, 01, or 11
        #[arg(long, value_parser = parse_init)]
        init: usize,
        /// 1-based letter position to invert (repeatable)
        #[arg(long = "inverse", value_name = "K")]
        inverse: Vec<usize>,
    },
}

fn parse_init(s: &str) -> Result<usize, String> {
    match s {
        "00" => Ok(0),
        "10" => Ok(1),
        "01" => Ok(2),
        "11" => Ok(3),
        other => Err(format!(
            "initial state must be one of 00, 10, 01, 11 (got `{other}`)"
        )),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Verify { suite } => cmd_verify(&cli, *suite),
        Command::Tables { csv } => cmd_tables(&cli, *csv),
        Command::Bispinor {
            solution_type,
            index,
            theta,
            phi,
        } => cmd_bispinor(&cli, *solution_type, *index as usize, *theta, *phi),
        Command::Braid {
            word,
            init,
            inverse,
        } => cmd_braid(word, *init, inverse),
    }
}

/// Uniform directions on the sphere, poles excluded so every check applies.
fn sample_directions(rng: &mut ChaCha8Rng, n: usize) -> Vec<Direction> {
    (0..n)
        .map(|_| loop {
            let theta = (1.0 - 2.0 * rng.gen::<f64>()).acos();
            let phi = rng.gen::<f64>() * std::f64::consts::TAU;
            if let Ok(d) = Direction::new(theta, phi) {
                if !d.is_pole() {
                    break d;
                }
            }
        })
        .collect()
}

fn sample_scalars(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0))
        .collect()
}

/// Length bound for the brute-forced charge-conservation word search.
const BRUTE_FORCE_WORD_LEN: usize = 6;

fn cmd_verify(cli: &Cli, suite: SuiteName) -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let dirs = sample_directions(&mut rng, cli.samples.max(1));
    let scalars = sample_scalars(&mut rng, cli.samples.max(1));

    let mut reports: Vec<Report> = Vec::new();
    if matches!(suite, SuiteName::All | SuiteName::Gamma) {
        reports.push(majorana::gamma::suite());
    }
    if matches!(suite, SuiteName::All | SuiteName::Bispinor) {
        reports.push(bispinor::suite(&dirs, &scalars));
    }
    if matches!(suite, SuiteName::All | SuiteName::Qubit) {
        reports.push(qubit::suite(&dirs));
    }
    if matches!(suite, SuiteName::All | SuiteName::Tqc) {
        reports.push(tqc::suite(BRUTE_FORCE_WORD_LEN));
    }
    if suite == SuiteName::All {
        reports.push(majorana::consistency::float_consistency_check());
    }

    let total: usize = reports.iter().map(|r| r.summary.total).sum();
    let passed: usize = reports.iter().map(|r| r.summary.passed).sum();
    let all_passed = total == passed;

    for report in &reports {
        eprintln!(
            "suite {:<12} {:>4} checks, {:>4} passed, {:>3} failed",
            report.suite, report.summary.total, report.summary.passed, report.summary.failed
        );
    }
    eprintln!(
        "overall: {}/{} checks passed ({})",
        passed,
        total,
        if all_passed { "ok" } else { "FAILED" }
    );

    let payload = json!({
        "seed": cli.seed,
        "samples": cli.samples,
        "reports": reports,
        "summary": {
            "total": total,
            "passed": passed,
            "failed": total - passed,
        },
    });
    println!("{}", serde_json::to_string_pretty(&payload).unwrap());

    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_tables(cli: &Cli, csv: bool) -> ExitCode {
    let tables = render::Tables::compute();
    if csv {
        print!("{}", tables.to_csv());
    } else if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&tables.to_json()).unwrap()
        );
    } else {
        print!("{}", tables.to_text());
    }
    ExitCode::SUCCESS
}

fn cmd_bispinor(
    cli: &Cli,
    solution_type: SolutionType,
    index: usize,
    theta: f64,
    phi: f64,
) -> ExitCode {
    let direction = match Direction::new(theta, phi) {
        Ok(d) => d,
        Err(e) => return usage_error(&e.to_string()),
    };
    if cli.exact && !(direction.is_canonical() && phi == 0.0) {
        return usage_error("--exact requires the canonical frame (theta = 0, phi = 0)");
    }

    let payload = if cli.exact {
        let solution = match solution_type {
            SolutionType::Weyl => bispinor::canonical_weyl(index),
            SolutionType::Majorana => bispinor::majorana_canonical(index),
        };
        let measured = match solution_type {
            SolutionType::Weyl => {
                let (energy, helicity, chirality) =
                    bispinor::measure_weyl_canonical(&solution.components)
                        .expect("canonical solutions are eigenvectors");
                json!({
                    "energy": energy,
                    "helicity": helicity,
                    "chirality": chirality,
                    "c_parity": bispinor::measure_c_parity_exact(&solution.components),
                })
            }
            SolutionType::Majorana => json!({
                "energy": bispinor::eigen_sign_exact(
                    &majorana::gamma::alpha(3), &solution.components),
                "helicity": serde_json::Value::Null,
                "chirality": serde_json::Value::Null,
                "c_parity": bispinor::measure_c_parity_exact(&solution.components),
            }),
        };
        json!({
            "type": type_name(solution_type),
            "index": index,
            "theta": theta,
            "phi": phi,
            "backend": "exact",
            "components": solution.components.components(),
            "metadata": solution.meta,
            "measured": measured,
        })
    } else {
        let solution = match solution_type {
            SolutionType::Weyl => bispinor::general_weyl(index, &direction),
            SolutionType::Majorana => bispinor::majorana(index, &direction),
        };
        let measured = match solution_type {
            SolutionType::Weyl => {
                let triple = bispinor::measure_weyl(&solution.components, &direction, FLOAT_TOL);
                json!({
                    "energy": triple.map(|t| t.0),
                    "helicity": triple.map(|t| t.1),
                    "chirality": triple.map(|t| t.2),
                    "c_parity": bispinor::measure_c_parity(&solution.components, FLOAT_TOL),
                })
            }
            SolutionType::Majorana => json!({
                "energy": bispinor::eigen_sign(
                    &bispinor::alpha_dot(&direction), &solution.components, FLOAT_TOL),
                "helicity": serde_json::Value::Null,
                "chirality": serde_json::Value::Null,
                "c_parity": bispinor::measure_c_parity(&solution.components, FLOAT_TOL),
            }),
        };
        json!({
            "type": type_name(solution_type),
            "index": index,
            "theta": theta,
            "phi": phi,
            "backend": "float",
            "components": render::complex_vector_json(&solution.components),
            "metadata": solution.meta,
            "measured": measured,
        })
    };
    println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    ExitCode::SUCCESS
}

fn type_name(t: SolutionType) -> &'static str {
    match t {
        SolutionType::Weyl => "weyl",
        SolutionType::Majorana => "majorana",
    }
}

fn cmd_braid(word: &str, init: usize, inverse: &[usize]) -> ExitCode {
    let mut word: BraidWord = match word.parse() {
        Ok(w) => w,
        Err(e) => return usage_error(&e),
    };
    for &position in inverse {
        if let Err(e) = word.invert_letter(position) {
            return usage_error(&e);
        }
    }

    let initial = FusionState::basis(init);
    let final_state = tqc::evaluate_braid(&word, &initial);
    let computational = final_state.to_computational();

    let charge = final_state.charge_expectation();
    let concurrence_squared =
        qubit::concurrence_squared_exact(&computational).expect("braiding preserves the norm");
    let concurrence = qubit::concurrence(&computational.to_complex())
        .expect("braiding preserves the norm");
    let eigenphase = tqc::majorana_condition_check(&computational);

    let payload = json!({
        "word": word.to_string(),
        "init": FusionState::basis_label(init),
        "occupation_basis_order": ["00", "10", "01", "11"],
        "amplitudes": final_state
            .amplitudes()
            .components()
            .iter()
            .map(render::exact_json)
            .collect::<Vec<_>>(),
        "computational_amplitudes": computational
            .components()
            .iter()
            .map(render::exact_json)
            .collect::<Vec<_>>(),
        "parity": match final_state.parity() {
            tqc::ParityTag::Even => "even",
            tqc::ParityTag::Odd => "odd",
            tqc::ParityTag::Mixed => "mixed",
        },
        "charge_expectation": render::exact_json(&charge),
        "concurrence": concurrence,
        "concurrence_squared": render::exact_json(&concurrence_squared),
        "majorana_eigenphase": eigenphase.as_ref().map(render::exact_json),
    });
    println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    ExitCode::SUCCESS
}
