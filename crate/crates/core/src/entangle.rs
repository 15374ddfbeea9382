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

//! Two-qubit Schmidt coefficients, concurrence, and the entanglement
//! witness xi_tilde_2 < 1.
//!
//! For a two-qubit pure state with amplitude matrix [[a, b], [g, d]] the
//! Schmidt coefficients are its singular values, computed here from the
//! eigenvalues of the 2x2 Gram matrix. The concurrence is C = 2 l1 l2 =
//! 2 |b g - a d|, and the invariant squeezing parameters have the closed
//! forms xi_tilde_1 = sqrt(1 - C), xi_tilde_2 = 1/sqrt(1 + C).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::squeeze::{xi_tilde, MinimizerConfig, ReportValue, SqueezingReport};
use crate::state::QuantumState;

/// Margin below 1 that xi_tilde_2 must clear before entanglement is
/// certified; guards against optimizer noise producing a false positive.
pub const WITNESS_MARGIN: f64 = 1e-9;

/// Schmidt coefficients of a two-qubit pure state, sorted l1 >= l2 >= 0
/// with l1^2 + l2^2 = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchmidtPair {
    pub lambda1: f64,
    pub lambda2: f64,
}

/// Witness outcome. `entangled_certified` is true only when xi_tilde_2 is
/// defined and clears the margin; anything else is inconclusive because the
/// criterion is sufficient, not necessary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessVerdict {
    pub xi_tilde_2: ReportValue,
    pub entangled_certified: bool,
    pub note: String,
}

fn two_qubit_amplitudes(state: &QuantumState) -> Result<[num_complex::Complex64; 4]> {
    if state.n_qubits() != 2 {
        return Err(Error::NotTwoQubitPure);
    }
    let amps = state.amplitudes().ok_or(Error::NotTwoQubitPure)?;
    Ok([amps[0], amps[1], amps[2], amps[3]])
}

/// Schmidt coefficients via the singular values of the amplitude matrix.
pub fn schmidt(state: &QuantumState) -> Result<SchmidtPair> {
    let [a, b, g, d] = two_qubit_amplitudes(state)?;
    // Gram matrix M^dagger M of [[a, b], [g, d]] has trace 1 (normalized
    // state) and determinant |det M|^2.
    let trace = a.norm_sqr() + b.norm_sqr() + g.norm_sqr() + d.norm_sqr();
    let det = (a * d - b * g).norm_sqr();
    let disc = (trace * trace - 4.0 * det).max(0.0).sqrt();
    let e1 = 0.5 * (trace + disc);
    let e2 = (0.5 * (trace - disc)).max(0.0);
    Ok(SchmidtPair {
        lambda1: e1.sqrt(),
        lambda2: e2.sqrt(),
    })
}

/// Concurrence of a two-qubit pure state, in [0, 1].
///
/// Both routes, 2 l1 l2 from the Schmidt pair and 2 |b g - a d| from the
/// amplitudes, are computed and must agree to rounding.
pub fn concurrence_pure(state: &QuantumState) -> Result<f64> {
    let [a, b, g, d] = two_qubit_amplitudes(state)?;
    let pair = schmidt(state)?;
    let from_schmidt = 2.0 * pair.lambda1 * pair.lambda2;
    let from_amps = 2.0 * (b * g - a * d).norm();
    debug_assert!(
        (from_schmidt - from_amps).abs() < 1e-12,
        "concurrence routes disagree: {from_schmidt} vs {from_amps}"
    );
    Ok(from_amps.clamp(0.0, 1.0))
}

/// Closed forms (xi_tilde_1, xi_tilde_2) = (sqrt(1-C), 1/sqrt(1+C)) for a
/// two-qubit pure state of concurrence `c`.
///
/// This is also the only path that reports the maximally entangled limit
/// xi_tilde_2 = 1/sqrt(2): the generic estimator leaves it undefined there
/// because the mean spin vanishes.
pub fn xi_tilde_from_concurrence(c: f64) -> Result<(f64, f64)> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::ConcurrenceRange(c));
    }
    Ok(((1.0 - c).sqrt(), 1.0 / (1.0 + c).sqrt()))
}

/// Runs the generic analysis and certifies entanglement iff xi_tilde_2 is
/// defined and below 1 by more than the margin.
pub fn witness(state: &QuantumState, config: &MinimizerConfig) -> Result<WitnessVerdict> {
    let report = xi_tilde(state, config)?;
    Ok(verdict_from_report(&report))
}

/// Verdict from an existing report (avoids re-running the minimizer).
pub fn verdict_from_report(report: &SqueezingReport) -> WitnessVerdict {
    match report.xi_tilde_2.value() {
        Some(v) if v < 1.0 - WITNESS_MARGIN => WitnessVerdict {
            xi_tilde_2: report.xi_tilde_2.clone(),
            entangled_certified: true,
            note: format!("xi_tilde_2 = {v:.6} < 1 certifies entanglement"),
        },
        Some(v) => WitnessVerdict {
            xi_tilde_2: report.xi_tilde_2.clone(),
            entangled_certified: false,
            note: format!(
                "xi_tilde_2 = {v:.6} >= 1; the criterion is sufficient, not necessary"
            ),
        },
        None => WitnessVerdict {
            xi_tilde_2: report.xi_tilde_2.clone(),
            entangled_certified: false,
            note: "xi_tilde_2 undefined (zero mean spin); for two-qubit pure states \
                   use xi_tilde_from_concurrence, which reports the 1/sqrt(2) limit"
                .to_string(),
        },
    }
}
