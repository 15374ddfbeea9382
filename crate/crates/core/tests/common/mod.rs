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

//! Shared test oracles, deliberately independent of the library's
//! computation paths: expectations here go through explicitly assembled
//! 2^N x 2^N matrices, eigenvalues through a real Jacobi sweep, and the
//! optimizer cross-check through grid search plus pattern refinement.

#![allow(dead_code)]

use num_complex::Complex64;
use spinsq_core::frames::{BlochFrame, CorrelationTable, Vec3};
use spinsq_core::{variance_at_angles, QuantumState};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

// ---------------------------------------------------------------------------
// Dense complex matrices (row-major Vec<Complex64>)
// ---------------------------------------------------------------------------

pub fn mat_identity(dim: usize) -> Vec<Complex64> {
    let mut m = vec![c(0.0, 0.0); dim * dim];
    for k in 0..dim {
        m[k * dim + k] = c(1.0, 0.0);
    }
    m
}

pub fn mat_mul(a: &[Complex64], b: &[Complex64], dim: usize) -> Vec<Complex64> {
    let mut out = vec![c(0.0, 0.0); dim * dim];
    for i in 0..dim {
        for k in 0..dim {
            let aik = a[i * dim + k];
            if aik.norm_sqr() == 0.0 {
                continue;
            }
            for j in 0..dim {
                out[i * dim + j] += aik * b[k * dim + j];
            }
        }
    }
    out
}

pub fn mat_add_scaled(a: &mut [Complex64], b: &[Complex64], s: Complex64) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += s * y;
    }
}

pub fn kron(a: &[Complex64], ad: usize, b: &[Complex64], bd: usize) -> Vec<Complex64> {
    let dim = ad * bd;
    let mut out = vec![c(0.0, 0.0); dim * dim];
    for i in 0..ad {
        for j in 0..ad {
            let aij = a[i * ad + j];
            for k in 0..bd {
                for l in 0..bd {
                    out[(i * bd + k) * dim + (j * bd + l)] = aij * b[k * bd + l];
                }
            }
        }
    }
    out
}

pub fn pauli_dense(axis: usize) -> Vec<Complex64> {
    match axis {
        0 => vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        1 => vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)],
        2 => vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)],
        _ => panic!("axis out of range"),
    }
}

/// sigma . v as a dense 2x2.
pub fn pauli_dot(v: &Vec3) -> Vec<Complex64> {
    let mut m = vec![c(0.0, 0.0); 4];
    for (axis, &comp) in v.iter().enumerate() {
        mat_add_scaled(&mut m, &pauli_dense(axis), c(comp, 0.0));
    }
    m
}

/// Embeds a single-qubit operator at position `qubit` (1-based) in an
/// n-qubit register via Kronecker products.
pub fn embed(op: &[Complex64], n: usize, qubit: usize) -> Vec<Complex64> {
    let mut out = vec![c(1.0, 0.0); 1];
    let mut dim = 1;
    for q in 1..=n {
        if q == qubit {
            out = kron(&out, dim, op, 2);
        } else {
            out = kron(&out, dim, &mat_identity(2), 2);
        }
        dim *= 2;
    }
    out
}

/// J along per-qubit directions: (1/2) sum_i embed(sigma . v_i, i).
pub fn collective_op(dirs: &[Vec3]) -> Vec<Complex64> {
    let n = dirs.len();
    let dim = 1usize << n;
    let mut m = vec![c(0.0, 0.0); dim * dim];
    for (i, v) in dirs.iter().enumerate() {
        let term = embed(&pauli_dot(v), n, i + 1);
        mat_add_scaled(&mut m, &term, c(0.5, 0.0));
    }
    m
}

/// Tr(rho M) for dense rho and M.
pub fn trace_product(rho: &[Complex64], m: &[Complex64], dim: usize) -> Complex64 {
    let mut t = c(0.0, 0.0);
    for i in 0..dim {
        for k in 0..dim {
            t += rho[i * dim + k] * m[k * dim + i];
        }
    }
    t
}

/// <M> on a state through dense algebra.
pub fn dense_expectation(state: &QuantumState, m: &[Complex64]) -> f64 {
    let dim = state.dim();
    match state.amplitudes() {
        Some(psi) => {
            let mut acc = c(0.0, 0.0);
            for i in 0..dim {
                let mut row = c(0.0, 0.0);
                for j in 0..dim {
                    row += m[i * dim + j] * psi[j];
                }
                acc += psi[i].conj() * row;
            }
            acc.re
        }
        None => trace_product(&state.density_matrix(), m, dim).re,
    }
}

/// Variance of the collective operator along `dirs`, entirely through
/// explicit matrices.
pub fn dense_variance(state: &QuantumState, dirs: &[Vec3]) -> f64 {
    let dim = state.dim();
    let j = collective_op(dirs);
    let j2 = mat_mul(&j, &j, dim);
    let mean = dense_expectation(state, &j);
    dense_expectation(state, &j2) - mean * mean
}

/// Transverse directions of a frame set at given angles.
pub fn transverse_dirs(frames: &[BlochFrame], thetas: &[f64]) -> Vec<Vec3> {
    frames
        .iter()
        .zip(thetas)
        .map(|(f, &t)| f.transverse(t))
        .collect()
}

// ---------------------------------------------------------------------------
// Hermitian eigenvalues via the real symmetric embedding + Jacobi sweeps
// ---------------------------------------------------------------------------

/// Eigenvalues of a Hermitian matrix (each appears twice in the 2n x 2n
/// real symmetric embedding [[Re, -Im], [Im, Re]]; duplicates collapsed).
pub fn hermitian_eigenvalues(h: &[Complex64], dim: usize) -> Vec<f64> {
    let n = 2 * dim;
    let mut a = vec![0.0_f64; n * n];
    for i in 0..dim {
        for j in 0..dim {
            let z = h[i * dim + j];
            a[i * n + j] = z.re;
            a[i * n + (dim + j)] = -z.im;
            a[(dim + i) * n + j] = z.im;
            a[(dim + i) * n + (dim + j)] = z.re;
        }
    }
    let mut eig = jacobi_symmetric(&mut a, n);
    eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
    // Paired eigenvalues: take every second one.
    (0..dim).map(|k| eig[2 * k]).collect()
}

fn jacobi_symmetric(a: &mut [f64], n: usize) -> Vec<f64> {
    for _ in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if off < 1e-24 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let cth = 1.0 / (1.0 + t * t).sqrt();
                let sth = t * cth;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = cth * akp - sth * akq;
                    a[k * n + q] = sth * akp + cth * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = cth * apk - sth * aqk;
                    a[q * n + k] = sth * apk + cth * aqk;
                }
            }
        }
    }
    (0..n).map(|k| a[k * n + k]).collect()
}

// ---------------------------------------------------------------------------
// Grid + pattern-refinement minimization oracle
// ---------------------------------------------------------------------------

/// Brute-force minimum of the transverse variance: coarse grid over all
/// angle combinations, then full-stencil pattern refinement around the best
/// cells. Never touches the analytic coordinate update.
pub fn grid_refine_min(
    table: &CorrelationTable,
    frames: &[BlochFrame],
    coarse_per_axis: usize,
    refine_starts: usize,
) -> f64 {
    let n = frames.len();
    let step = std::f64::consts::TAU / coarse_per_axis as f64;
    let total = coarse_per_axis.pow(n as u32);
    let mut starts: Vec<(f64, Vec<f64>)> = Vec::new();
    let mut idx = vec![0usize; n];
    for flat in 0..total {
        let mut rem = flat;
        for slot in idx.iter_mut() {
            *slot = rem % coarse_per_axis;
            rem /= coarse_per_axis;
        }
        let thetas: Vec<f64> = idx.iter().map(|&k| k as f64 * step).collect();
        let v = variance_at_angles(table, frames, &thetas).unwrap();
        if starts.len() < refine_starts {
            starts.push((v, thetas));
            starts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        } else if v < starts.last().unwrap().0 {
            starts.pop();
            starts.push((v, thetas));
            starts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        }
    }
    let mut best = f64::INFINITY;
    for (_, start) in starts {
        best = best.min(pattern_refine(table, frames, start, step));
    }
    best
}

fn pattern_refine(
    table: &CorrelationTable,
    frames: &[BlochFrame],
    mut center: Vec<f64>,
    mut radius: f64,
) -> f64 {
    let n = center.len();
    let offsets = [-1.0, -0.5, 0.0, 0.5, 1.0];
    let mut best = variance_at_angles(table, frames, &center).unwrap();
    while radius > 1e-9 {
        let mut improved_center = center.clone();
        let combos = offsets.len().pow(n as u32);
        for flat in 0..combos {
            let mut rem = flat;
            let mut point = center.clone();
            for slot in point.iter_mut() {
                *slot += offsets[rem % offsets.len()] * radius;
                rem /= offsets.len();
            }
            let v = variance_at_angles(table, frames, &point).unwrap();
            if v < best {
                best = v;
                improved_center = point;
            }
        }
        center = improved_center;
        radius *= 0.5;
    }
    best
}

// ---------------------------------------------------------------------------
// Random test states
// ---------------------------------------------------------------------------

pub fn random_pure(n: usize, seed: u64) -> QuantumState {
    spinsq_core::build_family(&spinsq_core::FamilySpec::PureRandom { n, seed }).unwrap()
}

pub fn random_rank2_mixed(n: usize, seed: u64) -> QuantumState {
    let a = random_pure(n, seed.wrapping_mul(2).wrapping_add(1));
    let b = random_pure(n, seed.wrapping_mul(2).wrapping_add(2));
    // Weight derived from the seed, kept away from 0 and 1.
    let w = 0.2 + 0.6 * ((seed % 1000) as f64 / 1000.0);
    QuantumState::make_mixture(&[w, 1.0 - w], &[a, b]).unwrap()
}

pub fn random_separable(n: usize, terms: usize, seed: u64) -> QuantumState {
    spinsq_core::build_family(&spinsq_core::FamilySpec::SeparableRandom { n, terms, seed })
        .unwrap()
}
