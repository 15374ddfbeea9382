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

//! N-qubit quantum states and Pauli expectation values.
//!
//! Basis convention: computational basis with qubit 1 as the most significant
//! bit, so for two qubits |01⟩ sits at amplitude index 1. Pure states are
//! stored as amplitude vectors of length 2^N and are never promoted to
//! matrices; mixed states are stored as weighted ensembles of pure states
//! (the only way they can be built or read from disk), which keeps every
//! expectation value an O(terms · 2^N) contraction and makes Hermiticity and
//! positivity structural.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Hard cap on the qubit count: 2^14 amplitudes is the desk-scale target.
pub const MAX_QUBITS: usize = 14;

/// Normalization tolerance for construction checks.
pub const NORM_TOL: f64 = 1e-12;

/// A Pauli axis label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    /// Action of the Pauli on a basis bit: whether the bit flips, and the
    /// phase picked up as a function of the incoming bit value.
    #[inline]
    fn action(self, bit: u8) -> (bool, Complex64) {
        match self {
            Axis::X => (true, Complex64::new(1.0, 0.0)),
            Axis::Y => {
                if bit == 0 {
                    (true, Complex64::new(0.0, 1.0))
                } else {
                    (true, Complex64::new(0.0, -1.0))
                }
            }
            Axis::Z => {
                if bit == 0 {
                    (false, Complex64::new(1.0, 0.0))
                } else {
                    (false, Complex64::new(-1.0, 0.0))
                }
            }
        }
    }

    /// The 2x2 matrix of this Pauli.
    pub fn matrix(self) -> [[Complex64; 2]; 2] {
        let z = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        match self {
            Axis::X => [[z, one], [one, z]],
            Axis::Y => [[z, -i], [i, z]],
            Axis::Z => [[one, z], [z, -one]],
        }
    }
}

/// A pure or mixed state of `n_qubits` qubits.
#[derive(Debug, Clone)]
pub struct QuantumState {
    n_qubits: usize,
    kind: StateKind,
    renormalized: bool,
}

#[derive(Debug, Clone)]
enum StateKind {
    Pure(Vec<Complex64>),
    /// Convex mixture of normalized pure states. Weights are non-negative
    /// and sum to 1 within `NORM_TOL`.
    Mixed {
        weights: Vec<f64>,
        terms: Vec<Vec<Complex64>>,
    },
}

impl QuantumState {
    /// Builds a normalized pure state from raw amplitudes.
    ///
    /// The vector is renormalized if its norm differs from 1; whether that
    /// happened is recorded and queryable via [`QuantumState::renormalized`].
    pub fn make_pure(n_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_qubit_count(n_qubits)?;
        let dim = 1usize << n_qubits;
        if amplitudes.len() != dim {
            return Err(Error::AmplitudeLength {
                n_qubits,
                got: amplitudes.len(),
            });
        }
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if norm_sq <= 0.0 || !norm_sq.is_finite() {
            return Err(Error::ZeroNorm);
        }
        let norm = norm_sq.sqrt();
        let renormalized = (norm - 1.0).abs() > NORM_TOL;
        let amplitudes = if renormalized {
            amplitudes.into_iter().map(|a| a / norm).collect()
        } else {
            amplitudes
        };
        Ok(QuantumState {
            n_qubits,
            kind: StateKind::Pure(amplitudes),
            renormalized,
        })
    }

    /// Builds the convex mixture of the given states under the given
    /// weights.
    ///
    /// Mixtures of mixtures are flattened, so the result is always an
    /// ensemble of pure states. Weights must be non-negative and sum to 1
    /// within `NORM_TOL`; all component states must share the qubit count.
    pub fn make_mixture(weights: &[f64], states: &[QuantumState]) -> Result<Self> {
        if weights.is_empty() || states.is_empty() {
            return Err(Error::EmptyMixture);
        }
        if weights.len() != states.len() {
            return Err(Error::MixedDimensions);
        }
        let n_qubits = states[0].n_qubits;
        if states.iter().any(|s| s.n_qubits != n_qubits) {
            return Err(Error::MixedDimensions);
        }
        let mut sum = 0.0;
        for &w in weights {
            if w < 0.0 || !w.is_finite() {
                return Err(Error::NegativeWeight(w));
            }
            sum += w;
        }
        if (sum - 1.0).abs() > NORM_TOL {
            return Err(Error::WeightSum(sum));
        }
        let mut out_w = Vec::new();
        let mut out_t = Vec::new();
        for (&w, state) in weights.iter().zip(states) {
            match &state.kind {
                StateKind::Pure(amps) => {
                    out_w.push(w);
                    out_t.push(amps.clone());
                }
                StateKind::Mixed { weights, terms } => {
                    for (&wk, term) in weights.iter().zip(terms) {
                        out_w.push(w * wk);
                        out_t.push(term.clone());
                    }
                }
            }
        }
        Ok(QuantumState {
            n_qubits,
            kind: StateKind::Mixed {
                weights: out_w,
                terms: out_t,
            },
            renormalized: false,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    pub fn is_pure(&self) -> bool {
        matches!(self.kind, StateKind::Pure(_))
    }

    /// True when `make_pure` had to rescale the input vector.
    pub fn renormalized(&self) -> bool {
        self.renormalized
    }

    /// Amplitudes of a pure state, None for mixtures.
    pub fn amplitudes(&self) -> Option<&[Complex64]> {
        match &self.kind {
            StateKind::Pure(a) => Some(a),
            StateKind::Mixed { .. } => None,
        }
    }

    /// The pure-state ensemble: a single unit-weight term for pure states.
    pub fn ensemble(&self) -> Vec<(f64, &[Complex64])> {
        match &self.kind {
            StateKind::Pure(a) => vec![(1.0, a.as_slice())],
            StateKind::Mixed { weights, terms } => weights
                .iter()
                .copied()
                .zip(terms.iter().map(|t| t.as_slice()))
                .collect(),
        }
    }

    /// Materializes the density matrix (row-major, dim x dim). Intended for
    /// small systems; everything in the analysis path works on the ensemble.
    pub fn density_matrix(&self) -> Vec<Complex64> {
        let dim = self.dim();
        let mut rho = vec![Complex64::new(0.0, 0.0); dim * dim];
        for (w, amps) in self.ensemble() {
            for r in 0..dim {
                for c in 0..dim {
                    rho[r * dim + c] += w * amps[r] * amps[c].conj();
                }
            }
        }
        rho
    }

    /// ⟨σ_axis⟩ on qubit `qubit` (1-based).
    pub fn pauli_expectation(&self, qubit: usize, axis: Axis) -> Result<f64> {
        self.check_qubit(qubit)?;
        Ok(self.expect_pauli_product(&[(qubit, axis)]))
    }

    /// ⟨σ_{i,alpha} σ_{j,beta}⟩ for two distinct qubits.
    pub fn pair_pauli_expectation(
        &self,
        i: usize,
        j: usize,
        alpha: Axis,
        beta: Axis,
    ) -> Result<f64> {
        self.check_qubit(i)?;
        self.check_qubit(j)?;
        if i == j {
            return Err(Error::EqualPair(i));
        }
        Ok(self.expect_pauli_product(&[(i, alpha), (j, beta)]))
    }

    /// Expectation of a product of Pauli operators on distinct qubits.
    ///
    /// Each factor contributes a possible bit flip plus a phase; the product
    /// is Hermitian for distinct qubits, so the imaginary part is rounding
    /// noise and is discarded.
    pub(crate) fn expect_pauli_product(&self, ops: &[(usize, Axis)]) -> f64 {
        let n = self.n_qubits;
        let mut total = Complex64::new(0.0, 0.0);
        for (w, amps) in self.ensemble() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, &amp) in amps.iter().enumerate() {
                if amp == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let mut phase = Complex64::new(1.0, 0.0);
                let mut mask = 0usize;
                for &(qubit, axis) in ops {
                    let stride = 1usize << (n - qubit);
                    let bit = ((k >> (n - qubit)) & 1) as u8;
                    let (flips, p) = axis.action(bit);
                    phase *= p;
                    if flips {
                        mask |= stride;
                    }
                }
                acc += amps[k ^ mask].conj() * phase * amp;
            }
            total += w * acc;
        }
        debug_assert!(
            total.im.abs() < 1e-10,
            "pauli product expectation not real: {total}"
        );
        total.re
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit == 0 || qubit > self.n_qubits {
            Err(Error::QubitIndex {
                index: qubit,
                n_qubits: self.n_qubits,
            })
        } else {
            Ok(())
        }
    }
}

fn check_qubit_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        Err(Error::QubitCount(n))
    } else {
        Ok(())
    }
}

/// Convenience: the basis state |b_1 b_2 ... b_N⟩ from bits.
pub fn basis_state(n_qubits: usize, index: usize) -> Result<QuantumState> {
    let dim = 1usize << n_qubits;
    let mut amps = vec![Complex64::new(0.0, 0.0); dim];
    amps[index] = Complex64::new(1.0, 0.0);
    QuantumState::make_pure(n_qubits, amps)
}
