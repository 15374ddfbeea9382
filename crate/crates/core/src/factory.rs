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

//! Named state families and the samplers used by the property suites.

use num_complex::Complex64;
use rand::RngExt;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rng::{child_seed, standard_normal, stream_rng, tag};
use crate::state::QuantumState;

/// A buildable state family.
///
/// `Psi` is cos(phi)|01⟩ + sin(phi)|10⟩, which has zero mean spin for every
/// phi; `PsiPrime` is its one-bit-flip image cos(phi)|00⟩ + sin(phi)|11⟩.
/// `SchmidtPair` is lambda1|00⟩ + lambda2|11⟩ with lambda2 fixed by
/// normalization. Random families are deterministic in their seed.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Psi { phi: f64 },
    PsiPrime { phi: f64 },
    TwoQubitGeneral { amplitudes: [Complex64; 4] },
    SchmidtPair { lambda1: f64 },
    ProductZero { n: usize },
    SpinCoherent { n: usize, direction: [f64; 3] },
    Ghz { n: usize },
    SeparableRandom { n: usize, terms: usize, seed: u64 },
    PureRandom { n: usize, seed: u64 },
}

impl FamilySpec {
    /// Short provenance label, e.g. `psi_prime(phi=0.5)`.
    pub fn label(&self) -> String {
        match self {
            FamilySpec::Psi { phi } => format!("psi(phi={phi})"),
            FamilySpec::PsiPrime { phi } => format!("psi_prime(phi={phi})"),
            FamilySpec::TwoQubitGeneral { .. } => "two_qubit_general".to_string(),
            FamilySpec::SchmidtPair { lambda1 } => format!("schmidt_pair(lambda1={lambda1})"),
            FamilySpec::ProductZero { n } => format!("product_zero(n={n})"),
            FamilySpec::SpinCoherent { n, direction } => format!(
                "spin_coherent(n={n},direction={},{},{})",
                direction[0], direction[1], direction[2]
            ),
            FamilySpec::Ghz { n } => format!("ghz(n={n})"),
            FamilySpec::SeparableRandom { n, terms, seed } => {
                format!("separable_random(n={n},terms={terms},seed={seed})")
            }
            FamilySpec::PureRandom { n, seed } => format!("pure_random(n={n},seed={seed})"),
        }
    }
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Builds the requested family member as a normalized state.
pub fn build(spec: &FamilySpec) -> Result<QuantumState> {
    match spec {
        FamilySpec::Psi { phi } => {
            if !phi.is_finite() {
                return Err(Error::FamilyParam(format!("phi = {phi} is not finite")));
            }
            QuantumState::make_pure(2, vec![c(0.0), c(phi.cos()), c(phi.sin()), c(0.0)])
        }
        FamilySpec::PsiPrime { phi } => {
            if !phi.is_finite() {
                return Err(Error::FamilyParam(format!("phi = {phi} is not finite")));
            }
            QuantumState::make_pure(2, vec![c(phi.cos()), c(0.0), c(0.0), c(phi.sin())])
        }
        FamilySpec::TwoQubitGeneral { amplitudes } => {
            QuantumState::make_pure(2, amplitudes.to_vec())
        }
        FamilySpec::SchmidtPair { lambda1 } => {
            if !(0.0..=1.0).contains(lambda1) {
                return Err(Error::FamilyParam(format!(
                    "lambda1 = {lambda1} outside [0, 1]"
                )));
            }
            let lambda2 = (1.0 - lambda1 * lambda1).max(0.0).sqrt();
            QuantumState::make_pure(2, vec![c(*lambda1), c(0.0), c(0.0), c(lambda2)])
        }
        FamilySpec::ProductZero { n } => {
            let dim = 1usize << n;
            let mut amps = vec![c(0.0); dim];
            amps[0] = c(1.0);
            QuantumState::make_pure(*n, amps)
        }
        FamilySpec::SpinCoherent { n, direction } => {
            let len = crate::frames::norm(direction);
            if (len - 1.0).abs() > 1e-9 {
                return Err(Error::FamilyParam(format!(
                    "direction must be a unit vector (length {len})"
                )));
            }
            let qubit = qubit_along(direction);
            QuantumState::make_pure(*n, kron_power(&qubit, *n))
        }
        FamilySpec::Ghz { n } => {
            let dim = 1usize << n;
            let mut amps = vec![c(0.0); dim];
            let r = std::f64::consts::FRAC_1_SQRT_2;
            amps[0] = c(r);
            amps[dim - 1] = c(r);
            QuantumState::make_pure(*n, amps)
        }
        FamilySpec::SeparableRandom { n, terms, seed } => {
            if *terms == 0 {
                return Err(Error::FamilyParam("terms must be at least 1".to_string()));
            }
            let mut weights = Vec::with_capacity(*terms);
            let mut states = Vec::with_capacity(*terms);
            let mut wrng = stream_rng(*seed, tag::FAMILY, 0);
            // Flat simplex weights: normalized exponential deviates.
            let mut total = 0.0;
            for _ in 0..*terms {
                let u: f64 = 1.0 - wrng.random::<f64>();
                let e = -u.ln();
                weights.push(e);
                total += e;
            }
            for w in weights.iter_mut() {
                *w /= total;
            }
            for k in 0..*terms {
                states.push(sample_product_state(
                    *n,
                    child_seed(*seed, tag::FAMILY, 1 + k as u64),
                )?);
            }
            QuantumState::make_mixture(&weights, &states)
        }
        FamilySpec::PureRandom { n, seed } => {
            let dim = 1usize
                .checked_shl(*n as u32)
                .ok_or(Error::QubitCount(*n))?;
            let mut rng = stream_rng(*seed, tag::FAMILY, 0);
            let amps: Vec<Complex64> = (0..dim)
                .map(|_| Complex64::new(standard_normal(&mut rng), standard_normal(&mut rng)))
                .collect();
            QuantumState::make_pure(*n, amps)
        }
    }
}

/// Tensor product of `n` independent Haar-random single-qubit pure states.
pub fn sample_product_state(n_qubits: usize, seed: u64) -> Result<QuantumState> {
    let mut amps = vec![c(1.0)];
    for q in 0..n_qubits {
        let mut rng = stream_rng(seed, tag::LAYER_QUBIT, q as u64);
        let qubit = haar_qubit(&mut rng);
        amps = kron(&amps, &qubit);
    }
    QuantumState::make_pure(n_qubits, amps)
}

fn haar_qubit(rng: &mut ChaCha8Rng) -> [Complex64; 2] {
    loop {
        let v = [
            Complex64::new(standard_normal(rng), standard_normal(rng)),
            Complex64::new(standard_normal(rng), standard_normal(rng)),
        ];
        let norm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        if norm > 1e-12 {
            return [v[0] / norm, v[1] / norm];
        }
    }
}

/// |n̂⟩ for a unit Bloch vector: cos(t/2)|0⟩ + e^{i p} sin(t/2)|1⟩.
fn qubit_along(direction: &[f64; 3]) -> [Complex64; 2] {
    let theta = direction[2].clamp(-1.0, 1.0).acos();
    let phi = direction[1].atan2(direction[0]);
    [
        c((theta / 2.0).cos()),
        Complex64::from_polar((theta / 2.0).sin(), phi),
    ]
}

fn kron(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(x * y);
        }
    }
    out
}

fn kron_power(qubit: &[Complex64; 2], n: usize) -> Vec<Complex64> {
    let mut amps = vec![c(1.0)];
    for _ in 0..n {
        amps = kron(&amps, qubit);
    }
    amps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entangle::concurrence_pure;
    use crate::frames::bloch_vector;
    use crate::squeeze::{xi_tilde, MinimizerConfig};

    #[test]
    fn psi_at_quarter_pi_is_the_symmetric_flip_state() {
        let s = build(&FamilySpec::Psi {
            phi: std::f64::consts::FRAC_PI_4,
        })
        .unwrap();
        let a = s.amplitudes().unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!(a[0].norm() < 1e-15 && a[3].norm() < 1e-15);
        assert!((a[1].re - r).abs() < 1e-15 && (a[2].re - r).abs() < 1e-15);
    }

    #[test]
    fn degenerate_schmidt_pair_is_a_basis_state() {
        let s = build(&FamilySpec::SchmidtPair { lambda1: 1.0 }).unwrap();
        let a = s.amplitudes().unwrap();
        assert!((a[0].re - 1.0).abs() < 1e-15);
        assert!(a[1].norm() + a[2].norm() + a[3].norm() < 1e-15);
    }

    #[test]
    fn schmidt_pair_rejects_out_of_range() {
        assert!(build(&FamilySpec::SchmidtPair { lambda1: 1.5 }).is_err());
    }

    #[test]
    fn separable_random_is_a_valid_mixture() {
        let s = build(&FamilySpec::SeparableRandom {
            n: 4,
            terms: 3,
            seed: 5,
        })
        .unwrap();
        assert!(!s.is_pure());
        assert_eq!(s.n_qubits(), 4);
        let ens = s.ensemble();
        assert_eq!(ens.len(), 3);
        let total: f64 = ens.iter().map(|(w, _)| w).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ghz_has_degenerate_qubits() {
        let s = build(&FamilySpec::Ghz { n: 3 }).unwrap();
        for q in 1..=3 {
            let b = bloch_vector(&s, q).unwrap();
            assert!(crate::frames::norm(&b) < 1e-12);
        }
    }

    #[test]
    fn spin_coherent_states_sit_at_the_quantum_limit() {
        for dir in [[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.6, 0.0, 0.8]] {
            let s = build(&FamilySpec::SpinCoherent { n: 3, direction: dir }).unwrap();
            let r = xi_tilde(&s, &MinimizerConfig::default()).unwrap();
            assert!((r.xi_tilde_1 - 1.0).abs() < 1e-9, "dir {dir:?}");
            assert!((r.xi_tilde_2.value().unwrap() - 1.0).abs() < 1e-9);
            assert!((r.xi_1.value().unwrap() - 1.0).abs() < 1e-9);
            assert!((r.xi_2.value().unwrap() - 1.0).abs() < 1e-9);
        }
        let bad = build(&FamilySpec::SpinCoherent {
            n: 2,
            direction: [1.0, 1.0, 0.0],
        });
        assert!(bad.is_err());
    }

    #[test]
    fn random_product_states_are_uncorrelated() {
        let s = sample_product_state(2, 11).unwrap();
        assert!(concurrence_pure(&s).unwrap() < 1e-12);
        let s3 = sample_product_state(3, 12).unwrap();
        let r = xi_tilde(&s3, &MinimizerConfig::default()).unwrap();
        assert!((r.xi_tilde_1 - 1.0).abs() < 1e-9);
        assert!((r.xi_tilde_2.value().unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn random_families_are_seed_deterministic() {
        let a = build(&FamilySpec::PureRandom { n: 3, seed: 9 }).unwrap();
        let b = build(&FamilySpec::PureRandom { n: 3, seed: 9 }).unwrap();
        assert_eq!(a.amplitudes().unwrap(), b.amplitudes().unwrap());
        let c1 = sample_product_state(1, 4).unwrap();
        let c2 = sample_product_state(1, 4).unwrap();
        assert_eq!(c1.amplitudes().unwrap(), c2.amplitudes().unwrap());
    }
}
