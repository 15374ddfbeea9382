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

//! State file format.
//!
//! Pure states: `{"kind": "pure", "n_qubits": N, "amplitudes": [[re, im], ...]}`.
//! Mixed states are mixtures of pure terms:
//! `{"kind": "mixed", "n_qubits": N, "terms": [{"weight": p, "amplitudes": [...]}, ...]}`.
//! Amplitude order follows the big-endian basis convention (qubit 1 is the
//! most significant bit). An optional `"family"` field records provenance.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::to_json_string;
use crate::state::QuantumState;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum StateFile {
    Pure {
        n_qubits: usize,
        amplitudes: Vec<[f64; 2]>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        family: Option<String>,
    },
    Mixed {
        n_qubits: usize,
        terms: Vec<MixtureTerm>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        family: Option<String>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MixtureTerm {
    weight: f64,
    amplitudes: Vec<[f64; 2]>,
}

fn to_complex(pairs: &[[f64; 2]]) -> Vec<Complex64> {
    pairs.iter().map(|p| Complex64::new(p[0], p[1])).collect()
}

fn from_complex(amps: &[Complex64]) -> Vec<[f64; 2]> {
    amps.iter().map(|a| [a.re, a.im]).collect()
}

/// Parses a state from its JSON text. Returns the state and the optional
/// provenance label.
pub fn state_from_json(text: &str) -> Result<(QuantumState, Option<String>)> {
    let file: StateFile = serde_json::from_str(text)?;
    match file {
        StateFile::Pure {
            n_qubits,
            amplitudes,
            family,
        } => Ok((
            QuantumState::make_pure(n_qubits, to_complex(&amplitudes))?,
            family,
        )),
        StateFile::Mixed {
            n_qubits,
            terms,
            family,
        } => {
            if terms.is_empty() {
                return Err(Error::EmptyMixture);
            }
            let weights: Vec<f64> = terms.iter().map(|t| t.weight).collect();
            let states = terms
                .iter()
                .map(|t| QuantumState::make_pure(n_qubits, to_complex(&t.amplitudes)))
                .collect::<Result<Vec<_>>>()?;
            Ok((QuantumState::make_mixture(&weights, &states)?, family))
        }
    }
}

/// Serializes a state to JSON text (17 significant digits per number).
pub fn state_to_json(state: &QuantumState, family: Option<&str>) -> String {
    let file = match state.amplitudes() {
        Some(amps) => StateFile::Pure {
            n_qubits: state.n_qubits(),
            amplitudes: from_complex(amps),
            family: family.map(str::to_string),
        },
        None => StateFile::Mixed {
            n_qubits: state.n_qubits(),
            terms: state
                .ensemble()
                .iter()
                .map(|(w, t)| MixtureTerm {
                    weight: *w,
                    amplitudes: from_complex(t),
                })
                .collect(),
            family: family.map(str::to_string),
        },
    };
    to_json_string(&file)
}

/// Reads a state file; also returns the raw bytes' digest and provenance.
pub fn read_state_file(path: &Path) -> Result<(QuantumState, String, Option<String>)> {
    let bytes = std::fs::read(path)?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::Schema("state file is not valid UTF-8".to_string()))?;
    let (state, family) = state_from_json(&text)?;
    Ok((state, digest(&bytes), family))
}

/// Writes a state file.
pub fn write_state_file(path: &Path, state: &QuantumState, family: Option<&str>) -> Result<()> {
    let mut text = state_to_json(state, family);
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

/// FNV-1a content digest, hex encoded with an algorithm prefix.
pub fn digest(bytes: &[u8]) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("fnv1a64:{hash:016x}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::basis_state;

    #[test]
    fn pure_round_trip_is_exact() {
        let s = QuantumState::make_pure(
            2,
            vec![
                Complex64::new(0.31, -0.4),
                Complex64::new(0.0, 0.55),
                Complex64::new(0.2, 0.0),
                Complex64::new(-0.1, 0.62),
            ],
        )
        .unwrap();
        let text = state_to_json(&s, Some("test"));
        let (back, family) = state_from_json(&text).unwrap();
        assert_eq!(family.as_deref(), Some("test"));
        for (a, b) in s.amplitudes().unwrap().iter().zip(back.amplitudes().unwrap()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn mixed_round_trip_preserves_terms() {
        let z = basis_state(2, 0).unwrap();
        let o = basis_state(2, 3).unwrap();
        let m = QuantumState::make_mixture(&[0.25, 0.75], &[z, o]).unwrap();
        let text = state_to_json(&m, None);
        let (back, _) = state_from_json(&text).unwrap();
        assert!(!back.is_pure());
        let ens = back.ensemble();
        assert_eq!(ens.len(), 2);
        assert!((ens[0].0 - 0.25).abs() < 1e-15);
    }

    #[test]
    fn malformed_documents_are_json_errors() {
        assert!(matches!(
            state_from_json("{not json"),
            Err(Error::Json(_))
        ));
        assert!(matches!(
            state_from_json(r#"{"kind": "banana", "n_qubits": 1}"#),
            Err(Error::Json(_))
        ));
        // Schema-valid JSON with an invariant violation maps to a state error.
        assert!(matches!(
            state_from_json(r#"{"kind": "pure", "n_qubits": 1, "amplitudes": [[0,0],[0,0]]}"#),
            Err(Error::ZeroNorm)
        ));
    }

    #[test]
    fn digest_is_stable_and_content_sensitive() {
        let a = digest(b"abc");
        assert_eq!(a, digest(b"abc"));
        assert_ne!(a, digest(b"abd"));
        assert!(a.starts_with("fnv1a64:"));
    }
}
