//! `p3dt`: exact Donaldson-Thomas invariants of the projective three-space.
//!
//! Exit codes: 0 success, 1 usage error, 2 method inapplicable
//! (non-isolated fixed locus), 3 verification failure.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;

use p3dt_core::algebra::ParamChoice;
use p3dt_core::error::Error;
use p3dt_core::euler::EulerTable;
use p3dt_core::invariants::{classical_report, quadratic_report, ClassicalReport, QuadraticReport};
use p3dt_core::suite::{run_suite, SuiteOptions};

const EXIT_USAGE: u8 = 1;
const EXIT_INAPPLICABLE: u8 = 2;
const EXIT_VERIFY_FAILED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "p3dt",
    about = "Exact Donaldson-Thomas invariants of P^3: the quadratic (Witt-ring-valued) \
             degrees via localization at the normalizer of the SL_2 torus, the classical \
             degrees via the full torus, and the MacMahon series cross-checks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Numeric,
    Symbolic,
    Both,
}

impl Mode {
    fn as_str(self) -> &'static str {
        match self {
            Mode::Numeric => "numeric",
            Mode::Symbolic => "symbolic",
            Mode::Both => "both",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Quadratic degree of the length-n Hilbert scheme of P^3
    Quadratic {
        /// Subscheme length n
        #[arg(long)]
        n: u64,
        /// Parameter choice "a,b" with a, b odd and a > 5b > 0 (repeatable)
        #[arg(long = "ab", value_parser = parse_ab)]
        ab: Vec<ParamChoice>,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Classical degree of the length-n Hilbert scheme of P^3
    Classical {
        /// Subscheme length n
        #[arg(long)]
        n: u64,
        /// Torus parameters "l0,l1,l2,l3" (pairwise distinct rationals)
        #[arg(long, value_parser = parse_lambdas)]
        lambdas: Option<Lambdas>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run the verification suite
    Verify {
        /// Run only checks whose name contains this substring
        #[arg(long)]
        only: Option<String>,
        /// Negative control: run against a deliberately wrong sign table
        #[arg(long, hide = true)]
        corrupt_sign_table: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone)]
struct Lambdas([BigRational; 4]);

fn parse_ab(s: &str) -> Result<ParamChoice, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected \"a,b\", got \"{s}\""));
    }
    let a: i64 = parts[0].trim().parse().map_err(|e| format!("bad a: {e}"))?;
    let b: i64 = parts[1].trim().parse().map_err(|e| format!("bad b: {e}"))?;
    ParamChoice::new(a, b).map_err(|e| e.to_string())
}

fn parse_lambdas(s: &str) -> Result<Lambdas, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected \"l0,l1,l2,l3\", got \"{s}\""));
    }
    let mut values = Vec::new();
    for part in parts {
        let v: BigRational = part
            .trim()
            .parse()
            .map_err(|e| format!("bad rational \"{part}\": {e}"))?;
        values.push(v);
    }
    Ok(Lambdas(values.try_into().expect("four values")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help and version requests are not usage errors
            let _ = err.print();
            return match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };

    match cli.command {
        Command::Quadratic { n, ab, mode, format } => {
            let params = if ab.is_empty() {
                vec![ParamChoice::new(7, 1).expect("default parameters are valid")]
            } else {
                ab
            };
            match quadratic_report(n, &params, mode.as_str()) {
                Ok(report) => {
                    print_quadratic(&report, format);
                    ExitCode::SUCCESS
                }
                Err(Error::NonIsolatedFixedPoint { point }) => {
                    eprintln!("method inapplicable: non-isolated fixed point at {point}");
                    ExitCode::from(EXIT_INAPPLICABLE)
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    ExitCode::from(EXIT_USAGE)
                }
            }
        }
        Command::Classical { n, lambdas, format } => {
            let lambdas = lambdas.unwrap_or_else(|| {
                Lambdas([0, 1, 17, 65].map(|v| BigRational::from_integer(v.into())))
            });
            match classical_report(n, &lambdas.0) {
                Ok(report) => {
                    print_classical(&report, format);
                    ExitCode::SUCCESS
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    ExitCode::from(EXIT_USAGE)
                }
            }
        }
        Command::Verify { only, corrupt_sign_table, format } => {
            let table = if corrupt_sign_table {
                EulerTable::corrupted_for_negative_control()
            } else {
                EulerTable::standard()
            };
            let reports = run_suite(&SuiteOptions { table, only });
            let all_passed = reports.iter().all(|r| r.passed);
            match format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = reports
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "id": r.id,
                                "description": r.description,
                                "passed": r.passed,
                                "details": r.details,
                            })
                        })
                        .collect();
                    let doc = serde_json::json!({ "checks": rows, "all_passed": all_passed });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
                }
                Format::Table => {
                    for r in &reports {
                        let status = if r.passed { "PASS" } else { "FAIL" };
                        println!("{status}  {:<24} {}", r.id, r.description);
                        if !r.details.is_empty() {
                            println!("      {}", r.details);
                        }
                    }
                    println!(
                        "{} of {} checks passed",
                        reports.iter().filter(|r| r.passed).count(),
                        reports.len()
                    );
                }
            }
            if all_passed && !reports.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY_FAILED)
            }
        }
    }
}

fn print_quadratic(report: &QuadraticReport, format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(report).expect("serializable"));
        }
        Format::Table => {
            println!("quadratic degree, n = {} (mode: {})", report.n, report.mode);
            let params: Vec<String> = report
                .params
                .iter()
                .map(|p| format!("({}, {})", p.a, p.b))
                .collect();
            println!("parameters: {}", params.join(", "));
            if report.fixed_points.is_empty() {
                println!("fixed points: none (odd length)");
            } else {
                println!("fixed points ({}):", report.fixed_points.len());
                for fp in &report.fixed_points {
                    let value = match &fp.zero_reason {
                        Some(reason) => format!("0  [{reason}]"),
                        None => format!("{} = {}", fp.euler_factored, fp.euler_numeric),
                    };
                    println!(
                        "  A {:?}  B {:?}: {}",
                        boxes_summary(&fp.point_a),
                        boxes_summary(&fp.point_b),
                        value
                    );
                }
            }
            println!("total: {}", report.total);
        }
    }
}

fn boxes_summary(p: &p3dt_core::partitions::Partition3D) -> Vec<(u32, u32, u32)> {
    p.boxes().to_vec()
}

fn print_classical(report: &ClassicalReport, format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(report).expect("serializable"));
        }
        Format::Table => {
            println!("classical degree, n = {}", report.n);
            println!("lambdas: ({})", report.lambdas.join(", "));
            println!("fixed points: {}", report.fixed_points.len());
            println!(
                "total: {}   series coefficient of q^{} in M(-q)^-20: {}   {}",
                report.total,
                report.n,
                report.series_coefficient,
                if report.matches_series { "match" } else { "MISMATCH" }
            );
        }
    }
}
