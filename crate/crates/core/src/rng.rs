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

//! Deterministic seed derivation.
//!
//! Every source of randomness in the crate is a ChaCha stream keyed by a
//! `(root seed, tag, index)` triple, so independent units of work (minimizer
//! restarts, invariance trials, per-qubit unitaries) draw from independent
//! streams and results do not depend on evaluation order.

use rand::RngExt;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Namespace tags for derived streams.
pub(crate) mod tag {
    pub const RESTART: u64 = 1;
    pub const TRIAL: u64 = 2;
    pub const LAYER_QUBIT: u64 = 3;
    pub const FAMILY: u64 = 4;
}

/// 64-bit finalizer (splitmix64 style avalanche).
fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives a child seed from a root seed, a namespace tag and a counter.
pub fn child_seed(root: u64, tag: u64, index: u64) -> u64 {
    mix64(mix64(mix64(root) ^ tag) ^ index)
}

/// RNG for the stream identified by `(root, tag, index)`.
pub fn stream_rng(root: u64, tag: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(child_seed(root, tag, index))
}

/// One standard normal deviate via Box-Muller.
pub fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    // u1 in (0, 1] keeps the log finite.
    let u1: f64 = 1.0 - rng.random::<f64>();
    let u2: f64 = rng.random::<f64>();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}
