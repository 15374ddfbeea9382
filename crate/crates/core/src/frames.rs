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

//! Per-qubit mean-spin frames and pairwise Pauli correlation matrices.
//!
//! Each qubit gets a right-handed orthonormal triad (n_perp, n_vdash, n_0)
//! with n_0 along its Bloch vector. The transverse directions
//! n_theta = n_perp cos(theta) + n_vdash sin(theta) span the plane orthogonal
//! to the mean spin, which is where squeezed fluctuations are measured.

use crate::error::{Error, Result};
use crate::state::{Axis, QuantumState};

/// Below this Bloch-vector length a qubit has no usable mean-spin direction
/// and receives the canonical (x, y, z) frame instead.
pub const DEGENERACY_THRESHOLD: f64 = 1e-9;

pub type Vec3 = [f64; 3];
pub type Mat3 = [[f64; 3]; 3];

pub fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm(a: &Vec3) -> f64 {
    dot(a, a).sqrt()
}

pub fn mat_vec(m: &Mat3, v: &Vec3) -> Vec3 {
    [dot(&m[0], v), dot(&m[1], v), dot(&m[2], v)]
}

/// Right-handed orthonormal triad attached to one qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochFrame {
    pub n_perp: Vec3,
    pub n_vdash: Vec3,
    pub n_0: Vec3,
    /// Length of the qubit's Bloch vector, in [0, 1].
    pub bloch_len: f64,
    /// True when the Bloch vector was too short to define a direction.
    pub degenerate: bool,
}

impl BlochFrame {
    /// The transverse unit vector at angle `theta`.
    pub fn transverse(&self, theta: f64) -> Vec3 {
        let (s, c) = theta.sin_cos();
        [
            self.n_perp[0] * c + self.n_vdash[0] * s,
            self.n_perp[1] * c + self.n_vdash[1] * s,
            self.n_perp[2] * c + self.n_vdash[2] * s,
        ]
    }
}

/// The Bloch vector (⟨σx⟩, ⟨σy⟩, ⟨σz⟩) of qubit `i` (1-based).
pub fn bloch_vector(state: &QuantumState, i: usize) -> Result<Vec3> {
    Ok([
        state.pauli_expectation(i, Axis::X)?,
        state.pauli_expectation(i, Axis::Y)?,
        state.pauli_expectation(i, Axis::Z)?,
    ])
}

/// Builds the frame for a Bloch vector.
///
/// Non-degenerate case: n_0 points along the input; the transverse pair is
/// fixed by Gram-Schmidt on the coordinate axis least aligned with n_0,
/// which stays numerically stable near the poles. Degenerate case: the
/// canonical (x, y, z) triad. Any transverse gauge would do; this one is
/// deterministic.
pub fn build_frame(bloch: Vec3) -> BlochFrame {
    let len = norm(&bloch);
    if len < DEGENERACY_THRESHOLD {
        return BlochFrame {
            n_perp: [1.0, 0.0, 0.0],
            n_vdash: [0.0, 1.0, 0.0],
            n_0: [0.0, 0.0, 1.0],
            bloch_len: len,
            degenerate: true,
        };
    }
    let n_0 = [bloch[0] / len, bloch[1] / len, bloch[2] / len];
    let mut least = 0;
    for k in 1..3 {
        if n_0[k].abs() < n_0[least].abs() {
            least = k;
        }
    }
    let mut axis = [0.0; 3];
    axis[least] = 1.0;
    let proj = dot(&axis, &n_0);
    let mut n_perp = [
        axis[0] - proj * n_0[0],
        axis[1] - proj * n_0[1],
        axis[2] - proj * n_0[2],
    ];
    let p = norm(&n_perp);
    for v in n_perp.iter_mut() {
        *v /= p;
    }
    let n_vdash = cross(&n_0, &n_perp);
    BlochFrame {
        n_perp,
        n_vdash,
        n_0,
        bloch_len: len,
        degenerate: false,
    }
}

/// Frames for every qubit of a state.
pub fn frames_for(state: &QuantumState) -> Result<Vec<BlochFrame>> {
    (1..=state.n_qubits())
        .map(|i| Ok(build_frame(bloch_vector(state, i)?)))
        .collect()
}

/// ⟨J_0⟩ = (1/2) Σ_i |⟨σ_i⟩| for the per-qubit frame set. Lies in [0, N/2].
pub fn j0_expectation(frames: &[BlochFrame]) -> f64 {
    0.5 * frames.iter().map(|f| f.bloch_len).sum::<f64>()
}

/// 3x3 matrix of pair correlations ⟨σ_{i,alpha} σ_{j,beta}⟩ for i < j.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationMatrix {
    pub i: usize,
    pub j: usize,
    pub t: Mat3,
}

/// The correlation matrix for an ordered pair i < j.
pub fn correlation_matrix(state: &QuantumState, i: usize, j: usize) -> Result<CorrelationMatrix> {
    if i >= j {
        return Err(Error::PairOrder { i, j });
    }
    let mut t = [[0.0; 3]; 3];
    for (a, &alpha) in Axis::ALL.iter().enumerate() {
        for (b, &beta) in Axis::ALL.iter().enumerate() {
            t[a][b] = state.pair_pauli_expectation(i, j, alpha, beta)?;
        }
    }
    Ok(CorrelationMatrix { i, j, t })
}

/// Upper-triangular cache of all pair correlation matrices, built in one
/// pass and read-only afterwards.
#[derive(Debug, Clone)]
pub struct CorrelationTable {
    n: usize,
    pairs: Vec<Mat3>,
}

impl CorrelationTable {
    pub fn build(state: &QuantumState) -> Result<Self> {
        let n = state.n_qubits();
        let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for i in 1..=n {
            for j in (i + 1)..=n {
                pairs.push(correlation_matrix(state, i, j)?.t);
            }
        }
        Ok(CorrelationTable { n, pairs })
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    /// The matrix for i < j (1-based).
    pub fn get(&self, i: usize, j: usize) -> &Mat3 {
        debug_assert!(i < j && j <= self.n);
        // Row i occupies (n - i) .. entries after the first i-1 rows.
        let row_start: usize = (1..i).map(|r| self.n - r).sum();
        &self.pairs[row_start + (j - i - 1)]
    }

    /// T^(ij) w for any ordered pair of distinct qubits, using the
    /// transpose-swap symmetry T^(ji) = (T^(ij))^T when i > j.
    pub fn apply(&self, i: usize, j: usize, w: &Vec3) -> Vec3 {
        if i < j {
            mat_vec(self.get(i, j), w)
        } else {
            let t = self.get(j, i);
            [
                t[0][0] * w[0] + t[1][0] * w[1] + t[2][0] * w[2],
                t[0][1] * w[0] + t[1][1] * w[1] + t[2][1] * w[2],
                t[0][2] * w[0] + t[1][2] * w[1] + t[2][2] * w[2],
            ]
        }
    }

    /// v^T T^(ij) w valid for any ordered pair.
    pub fn bilinear(&self, i: usize, j: usize, v: &Vec3, w: &Vec3) -> f64 {
        dot(v, &self.apply(i, j, w))
    }
}
