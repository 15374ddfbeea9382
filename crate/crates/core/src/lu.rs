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

//! Local unitary layers: tensor products of single-qubit unitaries, their
//! SO(3) images on the Bloch sphere, Haar sampling, and the empirical
//! invariance check for the squeezing parameters.
//!
//! Convention: a layer acts on states as U (so rho -> U rho U^dagger) and
//! on observables as U^dagger σ U; the rotation O attached to each factor
//! satisfies U^dagger σ_alpha U = Σ_beta O_{alpha beta} σ_beta, which makes
//! ⟨σ'⟩ = O ⟨σ⟩ for the transformed state.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::frames::Mat3;
use crate::rng::{child_seed, standard_normal, stream_rng, tag};
use crate::squeeze::{xi_tilde, MinimizerConfig};
use crate::state::{Axis, QuantumState};

pub type Mat2 = [[Complex64; 2]; 2];

/// How far from exact unitarity a 2x2 factor may be.
pub const UNITARITY_TOL: f64 = 1e-12;

fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    out
}

fn mat2_adjoint(a: &Mat2) -> Mat2 {
    [
        [a[0][0].conj(), a[1][0].conj()],
        [a[0][1].conj(), a[1][1].conj()],
    ]
}

fn unitarity_deviation(u: &Mat2) -> f64 {
    let p = mat2_mul(&mat2_adjoint(u), u);
    let mut dev: f64 = 0.0;
    for r in 0..2 {
        for c in 0..2 {
            let expected = if r == c { 1.0 } else { 0.0 };
            dev = dev.max((p[r][c] - Complex64::new(expected, 0.0)).norm());
        }
    }
    dev
}

/// The Bloch-sphere rotation of a single-qubit unitary.
///
/// O_{alpha beta} = (1/2) Re Tr(U^dagger σ_alpha U σ_beta); orthogonal with
/// determinant +1, and insensitive to the global phase of U.
pub fn su2_to_so3(u: &Mat2) -> Result<Mat3> {
    let dev = unitarity_deviation(u);
    if dev > UNITARITY_TOL {
        return Err(Error::NotUnitary(dev));
    }
    let udag = mat2_adjoint(u);
    let mut o = [[0.0_f64; 3]; 3];
    for (a, alpha) in Axis::ALL.iter().enumerate() {
        let conj = mat2_mul(&udag, &mat2_mul(&alpha.matrix(), u));
        for (b, beta) in Axis::ALL.iter().enumerate() {
            let sb = beta.matrix();
            // (1/2) Tr(conj * sigma_beta)
            let tr = conj[0][0] * sb[0][0]
                + conj[0][1] * sb[1][0]
                + conj[1][0] * sb[0][1]
                + conj[1][1] * sb[1][1];
            debug_assert!(tr.im.abs() < 1e-10);
            o[a][b] = 0.5 * tr.re;
        }
    }
    for row in &o {
        debug_assert!((crate::frames::dot(row, row) - 1.0).abs() < 1e-9);
    }
    Ok(o)
}

/// N single-qubit unitaries together with their Bloch rotations.
#[derive(Debug, Clone)]
pub struct LocalUnitaryLayer {
    unitaries: Vec<Mat2>,
    rotations: Vec<Mat3>,
}

impl LocalUnitaryLayer {
    /// Validates unitarity of every factor and derives the rotations.
    pub fn new(unitaries: Vec<Mat2>) -> Result<Self> {
        let rotations = unitaries
            .iter()
            .map(su2_to_so3)
            .collect::<Result<Vec<_>>>()?;
        Ok(LocalUnitaryLayer {
            unitaries,
            rotations,
        })
    }

    pub fn identity(n_qubits: usize) -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let id = [[one, zero], [zero, one]];
        LocalUnitaryLayer::new(vec![id; n_qubits]).expect("identity is unitary")
    }

    pub fn len(&self) -> usize {
        self.unitaries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.unitaries.is_empty()
    }

    pub fn unitaries(&self) -> &[Mat2] {
        &self.unitaries
    }

    pub fn rotations(&self) -> &[Mat3] {
        &self.rotations
    }
}

/// Applies U_1 ⊗ ... ⊗ U_N to a state; norm and trace are preserved.
pub fn apply_local(state: &QuantumState, layer: &LocalUnitaryLayer) -> Result<QuantumState> {
    let n = state.n_qubits();
    if layer.len() != n {
        return Err(Error::LayerArity {
            expected: n,
            got: layer.len(),
        });
    }
    let transform = |amps: &[Complex64]| -> Vec<Complex64> {
        let mut v = amps.to_vec();
        for (q, u) in layer.unitaries.iter().enumerate() {
            apply_gate(&mut v, n, q + 1, u);
        }
        v
    };
    let rebuilt = match state.amplitudes() {
        Some(amps) => QuantumState::make_pure(n, transform(amps)),
        None => {
            let ensemble = state.ensemble();
            let weights: Vec<f64> = ensemble.iter().map(|(w, _)| *w).collect();
            let terms = ensemble
                .iter()
                .map(|(_, t)| QuantumState::make_pure(n, transform(t)))
                .collect::<Result<Vec<_>>>()?;
            QuantumState::make_mixture(&weights, &terms)
        }
    };
    rebuilt
}

/// In-place single-qubit gate on a state vector (qubit is 1-based, big
/// endian).
fn apply_gate(amps: &mut [Complex64], n: usize, qubit: usize, u: &Mat2) {
    let stride = 1usize << (n - qubit);
    let dim = amps.len();
    let mut base = 0;
    while base < dim {
        for k in base..base + stride {
            let a0 = amps[k];
            let a1 = amps[k + stride];
            amps[k] = u[0][0] * a0 + u[0][1] * a1;
            amps[k + stride] = u[1][0] * a0 + u[1][1] * a1;
        }
        base += 2 * stride;
    }
}

/// One Haar-distributed SU(2) element: a uniform point on the unit
/// 3-sphere read as a quaternion.
fn haar_su2(rng: &mut rand_chacha::ChaCha8Rng) -> Mat2 {
    loop {
        let x: [f64; 4] = [
            standard_normal(rng),
            standard_normal(rng),
            standard_normal(rng),
            standard_normal(rng),
        ];
        let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]).sqrt();
        if r < 1e-12 {
            continue;
        }
        let (w, x1, x2, x3) = (x[0] / r, x[1] / r, x[2] / r, x[3] / r);
        // w I + i (x1 sx + x2 sy + x3 sz)
        return [
            [Complex64::new(w, x3), Complex64::new(x2, x1)],
            [Complex64::new(-x2, x1), Complex64::new(w, -x3)],
        ];
    }
}

/// A layer of N independent Haar-random unitaries, deterministic from the
/// seed. Each qubit draws from its own stream keyed by (seed, qubit), so
/// the factors can be generated in any order.
pub fn random_local_layer(n_qubits: usize, seed: u64) -> LocalUnitaryLayer {
    let unitaries: Vec<Mat2> = (0..n_qubits)
        .map(|q| {
            let mut rng = stream_rng(seed, tag::LAYER_QUBIT, q as u64);
            haar_su2(&mut rng)
        })
        .collect();
    LocalUnitaryLayer::new(unitaries).expect("Haar factors are unitary")
}

/// Deviations observed while probing invariance under random local
/// unitary layers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvarianceReport {
    /// max |xi_tilde_k(U rho U^dagger) - xi_tilde_k(rho)| over trials, k in
    /// {1, 2}, with k = 2 skipped where undefined.
    pub max_xi_deviation: f64,
    /// max |⟨J_0⟩' - ⟨J_0⟩| over trials.
    pub max_j0_deviation: f64,
}

impl InvarianceReport {
    pub fn max_deviation(&self) -> f64 {
        self.max_xi_deviation.max(self.max_j0_deviation)
    }
}

/// Analyzes `state` and `trials` random local-unitary images of it and
/// reports the worst observed parameter drift.
pub fn invariance_check(
    state: &QuantumState,
    trials: usize,
    seed: u64,
    config: &MinimizerConfig,
) -> Result<InvarianceReport> {
    let base = xi_tilde(state, config)?;
    let mut report = InvarianceReport {
        max_xi_deviation: 0.0,
        max_j0_deviation: 0.0,
    };
    for t in 0..trials {
        let layer = random_local_layer(state.n_qubits(), child_seed(seed, tag::TRIAL, t as u64));
        let rotated = apply_local(state, &layer)?;
        let image = xi_tilde(&rotated, config)?;
        report.max_xi_deviation = report
            .max_xi_deviation
            .max((image.xi_tilde_1 - base.xi_tilde_1).abs());
        if let (Some(a), Some(b)) = (base.xi_tilde_2.value(), image.xi_tilde_2.value()) {
            report.max_xi_deviation = report.max_xi_deviation.max((a - b).abs());
        }
        report.max_j0_deviation = report.max_j0_deviation.max((image.j0 - base.j0).abs());
    }
    Ok(report)
}
