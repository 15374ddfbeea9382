// Copyright 2026 The spinsq developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! spinsq: spin squeezing analysis from the command line.
//!
//! Exit codes: 0 success (or entanglement certified), 1 inconclusive
//! witness / invariance deviation above threshold, 2 input error,
//! 3 state invariant violation.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use spinsq_core::entangle::verdict_from_report;
use spinsq_core::error::{Error, Result};
use spinsq_core::io::digest;
use spinsq_core::{
    build_family, invariance_check, read_state_file, sweep, sweep_to_csv, sweep_to_json,
    write_state_file, xi_tilde, FamilySpec, MinimizerConfig, ReportDocument,
};

#[derive(Parser)]
#[command(
    name = "spinsq",
    version,
    about = "Spin squeezing parameters and entanglement witnessing for N-qubit states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Root random seed (fixed default keeps runs reproducible).
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Minimizer restarts (default 16, or 64 above 8 qubits).
    #[arg(long, global = true)]
    restarts: Option<usize>,
    /// Output format; analyze/witness default to json, sweep to csv.
    #[arg(long, global = true, value_enum)]
    report: Option<ReportFormat>,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include wall-clock timing in report documents. Off by default so
    /// identical runs stay byte-identical.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the squeezing report for a state file.
    Analyze { state_path: PathBuf },
    /// Entanglement witness: exit 0 with ENTANGLED, exit 1 with INCONCLUSIVE.
    Witness { state_path: PathBuf },
    /// Probe invariance under random local unitary layers.
    Invariance {
        state_path: PathBuf,
        /// Number of random layers to try.
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
    /// Tabulate squeezing parameters over a family parameter range.
    Sweep {
        #[arg(long)]
        family: String,
        /// Parameter to sweep (e.g. phi, lambda1, lambda1_sq).
        #[arg(long)]
        param: String,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        /// Number of rows, endpoints inclusive.
        #[arg(long)]
        steps: usize,
    },
    /// Write a state file for a named family.
    Build {
        #[arg(long)]
        family: String,
        /// Family parameters as name=value (repeatable).
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    });
}

fn config_for(cli: &Cli, n_qubits: usize) -> MinimizerConfig {
    let mut cfg = MinimizerConfig::for_qubits(n_qubits).with_seed(cli.seed);
    if let Some(r) = cli.restarts {
        cfg.n_restarts = r.max(1);
    }
    cfg
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Analyze { state_path } => cmd_analyze(cli, state_path),
        Command::Witness { state_path } => cmd_witness(cli, state_path),
        Command::Invariance { state_path, trials } => cmd_invariance(cli, state_path, *trials),
        Command::Sweep {
            family,
            param,
            from,
            to,
            steps,
        } => cmd_sweep(cli, family, param, *from, *to, *steps),
        Command::Build { family, params } => cmd_build(cli, family, params),
    }
}

fn cmd_analyze(cli: &Cli, state_path: &Path) -> Result<i32> {
    let (state, input_digest, _) = read_state_file(state_path)?;
    let config = config_for(cli, state.n_qubits());
    let started = Instant::now();
    let report = xi_tilde(&state, &config)?;
    let timing = cli
        .timing
        .then(|| started.elapsed().as_secs_f64() * 1e3);
    let doc = ReportDocument::new(input_digest, report, None, timing, config);
    let text = match cli.report.unwrap_or(ReportFormat::Json) {
        ReportFormat::Json => {
            let mut t = spinsq_core::to_json_string(&doc);
            t.push('\n');
            t
        }
        ReportFormat::Csv => doc.to_csv(),
    };
    emit(cli, &text)?;
    Ok(0)
}

fn cmd_witness(cli: &Cli, state_path: &Path) -> Result<i32> {
    let (state, input_digest, _) = read_state_file(state_path)?;
    let config = config_for(cli, state.n_qubits());
    let started = Instant::now();
    let report = xi_tilde(&state, &config)?;
    let verdict = verdict_from_report(&report);
    let timing = cli
        .timing
        .then(|| started.elapsed().as_secs_f64() * 1e3);
    let certified = verdict.entangled_certified;
    println!(
        "{} ({})",
        if certified { "ENTANGLED" } else { "INCONCLUSIVE" },
        verdict.note
    );
    if cli.out.is_some() {
        let doc = ReportDocument::new(input_digest, report, Some(verdict), timing, config);
        let mut text = spinsq_core::to_json_string(&doc);
        text.push('\n');
        emit(cli, &text)?;
    }
    Ok(if certified { 0 } else { 1 })
}

fn cmd_invariance(cli: &Cli, state_path: &Path, trials: usize) -> Result<i32> {
    let (state, _, _) = read_state_file(state_path)?;
    let config = config_for(cli, state.n_qubits());
    let rep = invariance_check(&state, trials.max(1), cli.seed, &config)?;
    let text = format!(
        "max deviation: {:.3e} (xi: {:.3e}, j0: {:.3e}) over {} trials\n",
        rep.max_deviation(),
        rep.max_xi_deviation,
        rep.max_j0_deviation,
        trials.max(1)
    );
    emit(cli, &text)?;
    Ok(if rep.max_deviation() <= 1e-6 { 0 } else { 1 })
}

fn cmd_sweep(
    cli: &Cli,
    family: &str,
    param: &str,
    from: f64,
    to: f64,
    steps: usize,
) -> Result<i32> {
    // The seed is shared across rows; each row's minimizer draws its own
    // restart streams from it.
    let mut config = MinimizerConfig::default().with_seed(cli.seed);
    if let Some(r) = cli.restarts {
        config.n_restarts = r.max(1);
    }
    let rows = sweep(family, param, from, to, steps, &config)?;
    let text = match cli.report.unwrap_or(ReportFormat::Csv) {
        ReportFormat::Csv => sweep_to_csv(&rows),
        ReportFormat::Json => {
            let mut t = sweep_to_json(&rows);
            t.push('\n');
            t
        }
    };
    emit(cli, &text)?;
    Ok(0)
}

fn parse_params(params: &[String]) -> Result<std::collections::BTreeMap<String, String>> {
    let mut map = std::collections::BTreeMap::new();
    for p in params {
        let (name, value) = p
            .split_once('=')
            .ok_or_else(|| Error::FamilyParam(format!("expected NAME=VALUE, got '{p}'")))?;
        map.insert(name.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn need_f64(map: &std::collections::BTreeMap<String, String>, name: &str) -> Result<f64> {
    map.get(name)
        .ok_or_else(|| Error::FamilyParam(format!("missing parameter '{name}'")))?
        .parse::<f64>()
        .map_err(|e| Error::FamilyParam(format!("parameter '{name}': {e}")))
}

fn need_usize(map: &std::collections::BTreeMap<String, String>, name: &str) -> Result<usize> {
    map.get(name)
        .ok_or_else(|| Error::FamilyParam(format!("missing parameter '{name}'")))?
        .parse::<usize>()
        .map_err(|e| Error::FamilyParam(format!("parameter '{name}': {e}")))
}

fn family_spec(family: &str, params: &[String], seed: u64) -> Result<FamilySpec> {
    let map = parse_params(params)?;
    match family {
        "psi" => Ok(FamilySpec::Psi {
            phi: need_f64(&map, "phi")?,
        }),
        "psi_prime" => Ok(FamilySpec::PsiPrime {
            phi: need_f64(&map, "phi")?,
        }),
        "two_qubit_general" => {
            let comp = |re: &str, im: &str| -> Result<Complex64> {
                Ok(Complex64::new(
                    need_f64(&map, re)?,
                    map.get(im).map_or(Ok(0.0), |v| {
                        v.parse::<f64>()
                            .map_err(|e| Error::FamilyParam(format!("parameter '{im}': {e}")))
                    })?,
                ))
            };
            Ok(FamilySpec::TwoQubitGeneral {
                amplitudes: [
                    comp("alpha_re", "alpha_im")?,
                    comp("beta_re", "beta_im")?,
                    comp("gamma_re", "gamma_im")?,
                    comp("delta_re", "delta_im")?,
                ],
            })
        }
        "schmidt_pair" => {
            if let Some(v) = map.get("lambda1_sq") {
                let sq = v
                    .parse::<f64>()
                    .map_err(|e| Error::FamilyParam(format!("parameter 'lambda1_sq': {e}")))?;
                if !(0.0..=1.0).contains(&sq) {
                    return Err(Error::FamilyParam(format!(
                        "lambda1_sq = {sq} outside [0, 1]"
                    )));
                }
                Ok(FamilySpec::SchmidtPair { lambda1: sq.sqrt() })
            } else {
                Ok(FamilySpec::SchmidtPair {
                    lambda1: need_f64(&map, "lambda1")?,
                })
            }
        }
        "product_zero" => Ok(FamilySpec::ProductZero {
            n: need_usize(&map, "n")?,
        }),
        "spin_coherent" => {
            let dir = map
                .get("direction")
                .ok_or_else(|| Error::FamilyParam("missing parameter 'direction'".to_string()))?;
            let parts: Vec<f64> = dir
                .split(',')
                .map(|v| {
                    v.trim()
                        .parse::<f64>()
                        .map_err(|e| Error::FamilyParam(format!("direction: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if parts.len() != 3 {
                return Err(Error::FamilyParam(
                    "direction must be three comma-separated components".to_string(),
                ));
            }
            Ok(FamilySpec::SpinCoherent {
                n: need_usize(&map, "n")?,
                direction: [parts[0], parts[1], parts[2]],
            })
        }
        "ghz" => Ok(FamilySpec::Ghz {
            n: need_usize(&map, "n")?,
        }),
        "separable_random" => Ok(FamilySpec::SeparableRandom {
            n: need_usize(&map, "n")?,
            terms: need_usize(&map, "terms")?,
            seed,
        }),
        "pure_random" => Ok(FamilySpec::PureRandom {
            n: need_usize(&map, "n")?,
            seed,
        }),
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

fn cmd_build(cli: &Cli, family: &str, params: &[String]) -> Result<i32> {
    let spec = family_spec(family, params, cli.seed)?;
    let state = build_family(&spec)?;
    match &cli.out {
        Some(path) => write_state_file(path, &state, Some(&spec.label()))?,
        None => {
            let mut text = spinsq_core::state_to_json(&state, Some(&spec.label()));
            text.push('\n');
            print!("{text}");
            // Digest printed to stderr so stdout stays a clean state file.
            eprintln!("digest: {}", digest(text.as_bytes()));
        }
    }
    Ok(0)
}
