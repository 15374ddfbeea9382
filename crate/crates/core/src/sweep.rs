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

//! One-parameter family sweeps: squeezing parameters as a function of a
//! family parameter, for tables and plots.

use serde::{Deserialize, Serialize};

use crate::entangle::concurrence_pure;
use crate::error::{Error, Result};
use crate::factory::{build, FamilySpec};
use crate::report::{csv_value, fmt_f64, to_json_string};
use crate::squeeze::{xi_tilde, MinimizerConfig, ReportValue};

/// One sweep point. `concurrence` is filled for two-qubit pure states.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub param: f64,
    pub xi_1: ReportValue,
    pub xi_2: ReportValue,
    pub xi_tilde_1: f64,
    pub xi_tilde_2: ReportValue,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub concurrence: Option<f64>,
    pub j0: f64,
}

fn spec_for(family: &str, param: &str, value: f64) -> Result<FamilySpec> {
    match family {
        "psi" => match param {
            "phi" => Ok(FamilySpec::Psi { phi: value }),
            _ => Err(Error::SweepParam {
                family: family.to_string(),
                param: param.to_string(),
            }),
        },
        "psi_prime" => match param {
            "phi" => Ok(FamilySpec::PsiPrime { phi: value }),
            _ => Err(Error::SweepParam {
                family: family.to_string(),
                param: param.to_string(),
            }),
        },
        "schmidt_pair" => match param {
            "lambda1" => Ok(FamilySpec::SchmidtPair { lambda1: value }),
            "lambda1_sq" => {
                if !(0.0..=1.0).contains(&value) {
                    return Err(Error::FamilyParam(format!(
                        "lambda1_sq = {value} outside [0, 1]"
                    )));
                }
                Ok(FamilySpec::SchmidtPair {
                    lambda1: value.sqrt(),
                })
            }
            _ => Err(Error::SweepParam {
                family: family.to_string(),
                param: param.to_string(),
            }),
        },
        "two_qubit_general" | "product_zero" | "spin_coherent" | "ghz" | "separable_random"
        | "pure_random" => Err(Error::SweepParam {
            family: family.to_string(),
            param: param.to_string(),
        }),
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

/// Analyzes `steps` evenly spaced points of the family parameter, endpoints
/// inclusive.
pub fn sweep(
    family: &str,
    param: &str,
    from: f64,
    to: f64,
    steps: usize,
    config: &MinimizerConfig,
) -> Result<Vec<SweepRow>> {
    if steps == 0 {
        return Err(Error::FamilyParam("steps must be at least 1".to_string()));
    }
    // Validate the (family, param) pair up front so an empty-range error
    // does not mask an unknown name.
    spec_for(family, param, from)?;
    let mut rows = Vec::with_capacity(steps);
    for k in 0..steps {
        let value = if steps == 1 {
            from
        } else {
            from + (to - from) * k as f64 / (steps - 1) as f64
        };
        let state = build(&spec_for(family, param, value)?)?;
        let report = xi_tilde(&state, config)?;
        let concurrence = if state.n_qubits() == 2 && state.is_pure() {
            Some(concurrence_pure(&state)?)
        } else {
            None
        };
        rows.push(SweepRow {
            param: value,
            xi_1: report.xi_1,
            xi_2: report.xi_2,
            xi_tilde_1: report.xi_tilde_1,
            xi_tilde_2: report.xi_tilde_2,
            concurrence,
            j0: report.j0,
        });
    }
    Ok(rows)
}

/// CSV table of a sweep; the concurrence column appears when defined.
pub fn sweep_to_csv(rows: &[SweepRow]) -> String {
    let with_concurrence = rows.iter().any(|r| r.concurrence.is_some());
    let mut out = String::new();
    if with_concurrence {
        out.push_str("param,xi_1,xi_2,xi_tilde_1,xi_tilde_2,concurrence,j0\n");
    } else {
        out.push_str("param,xi_1,xi_2,xi_tilde_1,xi_tilde_2,j0\n");
    }
    for r in rows {
        out.push_str(&fmt_f64(r.param));
        out.push(',');
        out.push_str(&csv_value(&r.xi_1));
        out.push(',');
        out.push_str(&csv_value(&r.xi_2));
        out.push(',');
        out.push_str(&fmt_f64(r.xi_tilde_1));
        out.push(',');
        out.push_str(&csv_value(&r.xi_tilde_2));
        out.push(',');
        if with_concurrence {
            match r.concurrence {
                Some(c) => out.push_str(&fmt_f64(c)),
                None => out.push_str("undefined"),
            }
            out.push(',');
        }
        out.push_str(&fmt_f64(r.j0));
        out.push('\n');
    }
    out
}

/// JSON array of sweep rows.
pub fn sweep_to_json(rows: &[SweepRow]) -> String {
    to_json_string(&rows)
}
