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

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("qubit count {0} outside the supported range 1..=14")]
    QubitCount(usize),
    #[error("amplitude vector of length {got} does not match 2^{n_qubits}")]
    AmplitudeLength { n_qubits: usize, got: usize },
    #[error("state vector has zero norm")]
    ZeroNorm,
    #[error("qubit index {index} out of range 1..={n_qubits}")]
    QubitIndex { index: usize, n_qubits: usize },
    #[error("pair correlation requires two distinct qubits (got i = j = {0})")]
    EqualPair(usize),
    #[error("pair indices must satisfy i < j (got i = {i}, j = {j})")]
    PairOrder { i: usize, j: usize },
    #[error("mixture is empty")]
    EmptyMixture,
    #[error("mixture weight {0} is negative")]
    NegativeWeight(f64),
    #[error("mixture weights sum to {0}, expected 1")]
    WeightSum(f64),
    #[error("mixture components disagree on qubit count")]
    MixedDimensions,
    #[error("angle vector of length {got} does not match qubit count {expected}")]
    AngleCount { expected: usize, got: usize },
    #[error("unitary layer has {got} factors for {expected} qubits")]
    LayerArity { expected: usize, got: usize },
    #[error("matrix is not unitary (deviation {0:.3e})")]
    NotUnitary(f64),
    #[error("operation requires a two-qubit pure state")]
    NotTwoQubitPure,
    #[error("concurrence {0} outside [0, 1]")]
    ConcurrenceRange(f64),
    #[error("unknown state family '{0}'")]
    UnknownFamily(String),
    #[error("invalid family parameter: {0}")]
    FamilyParam(String),
    #[error("unknown sweep parameter '{param}' for family '{family}'")]
    SweepParam { family: String, param: String },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed state file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed state file: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code contract: 2 for input errors, 3 for violated
    /// state invariants.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_)
            | Error::Json(_)
            | Error::Schema(_)
            | Error::UnknownFamily(_)
            | Error::FamilyParam(_)
            | Error::SweepParam { .. } => 2,
            _ => 3,
        }
    }
}
