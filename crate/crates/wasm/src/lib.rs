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

//! Browser bindings for the spin-squeezing analyzer.
//!
//! Three operations back the demo page in `www/`: analyze a pasted state
//! file, sweep a one-parameter family for plotting, and run the
//! entanglement witness. Every function returns a JSON string; failures
//! come back as `{"error": "..."}` so the page needs no exception
//! plumbing, and the same functions are callable natively for tests.

use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

use spinsq_core::entangle::verdict_from_report;
use spinsq_core::io::digest;
use spinsq_core::{
    state_from_json, sweep, sweep_to_json, to_json_string, xi_tilde, MinimizerConfig,
    ReportDocument,
};

#[derive(Serialize)]
struct ErrorOut {
    error: String,
}

fn error_json(message: impl std::fmt::Display) -> String {
    to_json_string(&ErrorOut {
        error: message.to_string(),
    })
}

fn config(seed: u32, n_qubits: usize, restarts: u32) -> MinimizerConfig {
    let mut cfg = MinimizerConfig::for_qubits(n_qubits).with_seed(seed as u64);
    if restarts > 0 {
        cfg.n_restarts = restarts as usize;
    }
    cfg
}

/// Full squeezing report for a state file's JSON text.
/// `restarts = 0` keeps the size-dependent default budget.
#[wasm_bindgen]
pub fn analyze_state(state_json: &str, seed: u32, restarts: u32) -> String {
    let (state, _) = match state_from_json(state_json) {
        Ok(parsed) => parsed,
        Err(err) => return error_json(err),
    };
    let cfg = config(seed, state.n_qubits(), restarts);
    match xi_tilde(&state, &cfg) {
        Ok(report) => to_json_string(&ReportDocument::new(
            digest(state_json.as_bytes()),
            report,
            None,
            None,
            cfg,
        )),
        Err(err) => error_json(err),
    }
}

/// Witness verdict document for a state file's JSON text.
#[wasm_bindgen]
pub fn witness_state(state_json: &str, seed: u32) -> String {
    let (state, _) = match state_from_json(state_json) {
        Ok(parsed) => parsed,
        Err(err) => return error_json(err),
    };
    let cfg = config(seed, state.n_qubits(), 0);
    match xi_tilde(&state, &cfg) {
        Ok(report) => {
            let verdict = verdict_from_report(&report);
            to_json_string(&ReportDocument::new(
                digest(state_json.as_bytes()),
                report,
                Some(verdict),
                None,
                cfg,
            ))
        }
        Err(err) => error_json(err),
    }
}

/// Sweep rows (JSON array) for plotting parameter curves.
#[wasm_bindgen]
pub fn sweep_family(
    family: &str,
    param: &str,
    from: f64,
    to: f64,
    steps: u32,
    seed: u32,
) -> String {
    let cfg = MinimizerConfig::default().with_seed(seed as u64);
    match sweep(family, param, from, to, steps as usize, &cfg) {
        Ok(rows) => sweep_to_json(&rows),
        Err(err) => error_json(err),
    }
}
