//! Command-line front end: solve and verify coverage instances, run the
//! brute-force oracle, generate seeded instances, benchmark scaling, and
//! demonstrate sorting by coverage.
//!
//! Exit codes: 0 success, 1 usage/parse errors, 2 infeasible instance.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use linecover_cli::bench;
use linecover_cli::gen::{GenCase, GenSpec};
use linecover_cli::io::{self, SolutionJson};
use linecover_cli::sort_demo;
use linecover_core::model::CaseKind;
use linecover_core::one_sided;
use linecover_core::oracle;
use linecover_core::solve::solve;

#[derive(Parser)]
#[command(name = "linecover", version, about = "Min-sum barrier coverage solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file and print the solution JSON.
    Solve {
        #[arg(long)]
        input: PathBuf,
        /// Write the solution here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Re-check coverage and cost before printing.
        #[arg(long)]
        verify: bool,
        /// For one-sided instances, write the D(j) series as CSV.
        #[arg(long)]
        dump_d_series: Option<PathBuf>,
    },
    /// Check a solution file against its instance.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        solution: PathBuf,
    },
    /// Solve with the exhaustive small-instance oracle.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Generate a seeded instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// containing | one_sided | general | all_outside | mixed
        #[arg(long, default_value = "mixed")]
        case: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time solves over a doubling size series and emit CSV.
    Bench {
        #[arg(long, default_value_t = 16)]
        min_exp: u32,
        #[arg(long, default_value_t = 20)]
        max_exp: u32,
        #[arg(long, default_value_t = 5)]
        runs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sort numbers by solving the coverage instance they induce.
    SortDemo {
        /// Comma-separated values; omit to use random ones.
        #[arg(long, value_delimiter = ',')]
        values: Option<Vec<f64>>,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn emit(text: String, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve {
            input,
            output,
            verify,
            dump_d_series,
        } => {
            let inst = io::read_instance(&input)?;
            if inst.classify() == CaseKind::InfeasibleCase {
                eprintln!("infeasible: 2*z*n < beta");
                return Ok(ExitCode::from(2));
            }
            let report = solve(&inst).map_err(|e| anyhow::anyhow!("{e}"))?;
            if verify {
                io::verify_solution(&inst, &SolutionJson::from_report(&report))?;
            }
            if let Some(path) = dump_d_series {
                let (m, series) = match inst.classify() {
                    CaseKind::OneSidedRight => {
                        let run = one_sided::solve_prepared(inst.x(), inst.z(), inst.beta())
                            .map_err(|e| anyhow::anyhow!("{e}"))?;
                        (run.m, run.d_series)
                    }
                    CaseKind::OneSidedLeft => {
                        let mirrored = linecover_core::model::mirror(&inst);
                        let run =
                            one_sided::solve_prepared(mirrored.x(), mirrored.z(), mirrored.beta())
                                .map_err(|e| anyhow::anyhow!("{e}"))?;
                        (run.m, run.d_series)
                    }
                    other => anyhow::bail!("--dump-d-series needs a one-sided instance, got {other}"),
                };
                std::fs::write(&path, io::d_series_csv(m, &series))
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            let json = serde_json::to_string_pretty(&SolutionJson::from_report(&report))?;
            emit(json, output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { input, solution } => {
            let inst = io::read_instance(&input)?;
            let data = std::fs::read_to_string(&solution)
                .with_context(|| format!("cannot read {}", solution.display()))?;
            let solution: SolutionJson = serde_json::from_str(&data)?;
            io::verify_solution(&inst, &solution)?;
            println!("ok");
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { input, output } => {
            let inst = io::read_instance(&input)?;
            if !inst.is_feasible() {
                eprintln!("infeasible: 2*z*n < beta");
                return Ok(ExitCode::from(2));
            }
            let (cost, y) = oracle::oracle_optimal(&inst).map_err(|e| anyhow::anyhow!("{e}"))?;
            let json = serde_json::json!({
                "cost": cost.to_string(),
                "y": y.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "case": inst.classify().as_str(),
            });
            emit(serde_json::to_string_pretty(&json)?, output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            n,
            seed,
            case,
            output,
        } => {
            let case: GenCase = case.parse()?;
            let inst = linecover_cli::gen::generate(&GenSpec { n, seed, case })?;
            let json = serde_json::to_string_pretty(&io::InstanceJson::from_instance(&inst))?;
            emit(json, output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            min_exp,
            max_exp,
            runs,
            seed,
            output,
        } => {
            anyhow::ensure!(min_exp <= max_exp && max_exp < 26, "bad exponent range");
            let sizes: Vec<usize> = (min_exp..=max_exp).map(|e| 1usize << e).collect();
            let records = bench::run_bench(&sizes, runs, seed)?;
            emit(bench::to_csv(&records), output.as_ref())?;
            for (n, median) in bench::medians(&records) {
                eprintln!("n={n}: median {:.3} ms", median as f64 / 1e6);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SortDemo {
            values,
            count,
            seed,
        } => {
            let values = values.unwrap_or_else(|| {
                use rand::prelude::*;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                (0..count).map(|_| rng.gen_range(-1e9..1e9)).collect()
            });
            let sorted = sort_demo::sort_via_coverage(&values)?;
            let rendered: Vec<String> = sorted.iter().map(|v| v.to_string()).collect();
            println!("{}", rendered.join(","));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
