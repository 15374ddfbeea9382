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

//! Local-unitary-invariant spin squeezing analysis for N-qubit states.
//!
//! The crate computes two pairs of squeezing parameters for arbitrary pure
//! or mixed qubit states:
//!
//! * the invariant pair (xi_tilde_1, xi_tilde_2), built from per-qubit
//!   mean-spin frames and minimized over one transverse angle per qubit,
//!   unchanged under any U_1 ⊗ ... ⊗ U_N;
//! * the classic collective pair (xi_1, xi_2), built from the total mean
//!   spin, which is basis-dependent and undefined at zero mean spin.
//!
//! xi_tilde_2 < 1 certifies entanglement: separable states always satisfy
//! xi_tilde_2 >= 1, and for two-qubit pure states the parameters reduce to
//! closed forms in the concurrence. All states are immutable after
//! construction and every operation is a pure function; randomness is fully
//! determined by explicit seeds.

pub mod entangle;
pub mod error;
pub mod factory;
pub mod frames;
pub mod io;
pub mod lu;
pub mod report;
pub mod rng;
pub mod squeeze;
pub mod state;
pub mod sweep;

pub use entangle::{
    concurrence_pure, schmidt, witness, xi_tilde_from_concurrence, SchmidtPair, WitnessVerdict,
};
pub use error::{Error, Result};
pub use factory::{build as build_family, sample_product_state, FamilySpec};
pub use frames::{
    bloch_vector, build_frame, correlation_matrix, frames_for, j0_expectation, BlochFrame,
    CorrelationMatrix, CorrelationTable,
};
pub use io::{read_state_file, state_from_json, state_to_json, write_state_file};
pub use lu::{
    apply_local, invariance_check, random_local_layer, su2_to_so3, InvarianceReport,
    LocalUnitaryLayer,
};
pub use report::{to_json_string, ReportDocument};
pub use squeeze::{
    minimize_variance, variance_at_angles, xi_collective, xi_tilde, MinimizerConfig, ReportValue,
    SqueezingReport,
};
pub use state::{Axis, QuantumState};
pub use sweep::{sweep, sweep_to_csv, sweep_to_json, SweepRow};
