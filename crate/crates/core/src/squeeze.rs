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

//! Transverse spin variance and the squeezing parameters.
//!
//! Two families are computed. The local-unitary-invariant pair
//! (xi_tilde_1, xi_tilde_2) measures fluctuations of
//! J_{theta} = (1/2) Σ_i σ_i · n_{theta_i}, one transverse angle per qubit,
//! minimized over all angles. With ⟨J_{theta}⟩ = 0 by transversality the
//! variance reduces to a pairwise correlation sum,
//!
//!   (ΔJ)^2 = (1/4) [ N + 2 Σ_{i<j} n_{theta_i}^T T^(ij) n_{theta_j} ],
//!
//! which the minimizer exploits: with all other angles fixed, the objective
//! restricted to theta_i is a pure sinusoid a cos(theta_i) + b sin(theta_i)
//! plus a constant, so each coordinate update is exact. The classic
//! collective pair (xi_1, xi_2) uses a single frame built from the total
//! mean spin and a single angle, minimized in closed form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frames::{dot, frames_for, j0_expectation, BlochFrame, CorrelationTable, Vec3};
use crate::rng::{stream_rng, tag};
use crate::state::QuantumState;
use rand::RngExt;

/// Mean-spin lengths below this leave the corresponding ratio undefined.
pub const MEAN_SPIN_THRESHOLD: f64 = 1e-9;

/// Machine-readable reason attached to undefined squeezing ratios.
pub const REASON_ZERO_MEAN_SPIN: &str = "zero mean spin";

/// A reported quantity that may be undefined, with the reason attached.
/// Serializes as a plain number or as `{"undefined": "<reason>"}`, never as
/// NaN or null.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportValue {
    Value(f64),
    Undefined { undefined: String },
}

impl ReportValue {
    pub fn undefined(reason: &str) -> Self {
        ReportValue::Undefined {
            undefined: reason.to_string(),
        }
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            ReportValue::Value(v) => Some(*v),
            ReportValue::Undefined { .. } => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        self.value().is_some()
    }
}

/// Knobs for the multistart coordinate-descent minimizer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinimizerConfig {
    /// Independent random initializations; the best result wins.
    pub n_restarts: usize,
    /// Upper bound on full coordinate sweeps per restart.
    pub max_sweeps: usize,
    /// A restart stops once a sweep lowers the variance by less than this.
    pub convergence_tol: f64,
    /// Root seed; all randomness derives from it deterministically.
    pub seed: u64,
}

impl Default for MinimizerConfig {
    fn default() -> Self {
        MinimizerConfig {
            n_restarts: 16,
            max_sweeps: 200,
            convergence_tol: 1e-12,
            seed: 42,
        }
    }
}

impl MinimizerConfig {
    /// Default budget for a given system size. The objective is a
    /// multilinear form in 2N trigonometric variables with possibly many
    /// local minima, so larger systems get more restarts.
    pub fn for_qubits(n_qubits: usize) -> Self {
        let mut cfg = MinimizerConfig::default();
        if n_qubits > 8 {
            cfg.n_restarts = 64;
        }
        cfg
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Everything the analysis produces for one state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SqueezingReport {
    pub n_qubits: usize,
    /// 2 (ΔJ)_min / sqrt(N), local-unitary invariant.
    pub xi_tilde_1: f64,
    /// sqrt(N) (ΔJ)_min / ⟨J_0⟩; undefined when ⟨J_0⟩ is below threshold.
    pub xi_tilde_2: ReportValue,
    /// Optimal transverse angles in [0, 2pi). Gauge-dependent, informative
    /// only.
    pub theta_opt: Vec<f64>,
    /// Minimal transverse variance, in [0, N^2/4].
    pub var_min: f64,
    /// ⟨J_0⟩ = (1/2) Σ_i |⟨σ_i⟩|.
    pub j0: f64,
    /// Collective-frame squeezing ratio, undefined at zero total mean spin.
    pub xi_1: ReportValue,
    pub xi_2: ReportValue,
    /// |⟨J⟩| of the collective mean spin.
    pub collective_mean_spin_len: f64,
    /// False when some restart hit the sweep limit before converging; the
    /// best value found so far is still reported.
    pub converged: bool,
}

/// Collective-frame results on their own.
#[derive(Debug, Clone, PartialEq)]
pub struct CollectiveSqueezing {
    pub xi_1: ReportValue,
    pub xi_2: ReportValue,
    pub mean_spin_len: f64,
}

/// Variance of J_{theta} from the pairwise correlation form.
pub fn variance_at_angles(
    table: &CorrelationTable,
    frames: &[BlochFrame],
    thetas: &[f64],
) -> Result<f64> {
    let n = frames.len();
    if thetas.len() != n {
        return Err(Error::AngleCount {
            expected: n,
            got: thetas.len(),
        });
    }
    let dirs: Vec<Vec3> = frames
        .iter()
        .zip(thetas)
        .map(|(f, &t)| f.transverse(t))
        .collect();
    Ok(variance_of_dirs(table, &dirs))
}

fn variance_of_dirs(table: &CorrelationTable, dirs: &[Vec3]) -> f64 {
    let n = dirs.len();
    let mut pair_sum = 0.0;
    for i in 1..=n {
        for j in (i + 1)..=n {
            pair_sum += table.bilinear(i, j, &dirs[i - 1], &dirs[j - 1]);
        }
    }
    0.25 * (n as f64 + 2.0 * pair_sum)
}

/// Result of one multistart minimization.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimizeOutcome {
    pub theta_opt: Vec<f64>,
    pub var_min: f64,
    pub converged: bool,
}

/// Minimizes the transverse variance over all per-qubit angles.
///
/// Coordinate descent with exact sinusoid updates, restarted from
/// `config.n_restarts` seeded random angle vectors. Restarts draw from
/// independent streams and the winner is picked by (variance, restart
/// index), so the outcome does not depend on evaluation order.
pub fn minimize_variance(
    table: &CorrelationTable,
    frames: &[BlochFrame],
    config: &MinimizerConfig,
) -> MinimizeOutcome {
    let n = frames.len();
    let mut best: Option<MinimizeOutcome> = None;
    for restart in 0..config.n_restarts.max(1) {
        let mut rng = stream_rng(config.seed, tag::RESTART, restart as u64);
        let thetas: Vec<f64> = (0..n)
            .map(|_| rng.random::<f64>() * std::f64::consts::TAU)
            .collect();
        let outcome = descend(table, frames, thetas, config);
        let better = match &best {
            None => true,
            Some(b) => outcome.var_min < b.var_min,
        };
        if better {
            best = Some(outcome);
        }
    }
    let mut out = best.expect("at least one restart");
    out.var_min = out.var_min.max(0.0);
    for t in out.theta_opt.iter_mut() {
        *t = canonical_angle(*t);
    }
    out
}

fn descend(
    table: &CorrelationTable,
    frames: &[BlochFrame],
    mut thetas: Vec<f64>,
    config: &MinimizerConfig,
) -> MinimizeOutcome {
    let n = frames.len();
    let mut dirs: Vec<Vec3> = frames
        .iter()
        .zip(&thetas)
        .map(|(f, &t)| f.transverse(t))
        .collect();
    let mut prev = variance_of_dirs(table, &dirs);
    let mut converged = n < 2;
    let mut before_sweep = thetas.clone();
    let mut last_step: Option<Vec<f64>> = None;
    for _ in 0..config.max_sweeps {
        if n < 2 {
            break;
        }
        before_sweep.copy_from_slice(&thetas);
        for i in 1..=n {
            // Field seen by qubit i from all other transverse directions.
            let mut g = [0.0_f64; 3];
            for j in 1..=n {
                if j == i {
                    continue;
                }
                let tw = table.apply(i, j, &dirs[j - 1]);
                g[0] += tw[0];
                g[1] += tw[1];
                g[2] += tw[2];
            }
            let a = dot(&frames[i - 1].n_perp, &g);
            let b = dot(&frames[i - 1].n_vdash, &g);
            // Restricted objective a cos(t) + b sin(t): exact minimum.
            let t = (-b).atan2(-a);
            thetas[i - 1] = t;
            dirs[i - 1] = frames[i - 1].transverse(t);
        }
        let mut cur = variance_of_dirs(table, &dirs);
        debug_assert!(
            cur <= prev + 1e-12,
            "coordinate descent increased the objective: {prev} -> {cur}"
        );
        // Aitken extrapolation of the sweep map kills the slow geometric
        // tail near shallow valleys; accepted only when it improves, so
        // descent stays monotone.
        let step: Vec<f64> = thetas
            .iter()
            .zip(&before_sweep)
            .map(|(&a, &b)| wrap_pi(a - b))
            .collect();
        if let Some(prev_step) = &last_step {
            let num = step.iter().map(|s| s * s).sum::<f64>().sqrt();
            let den = prev_step.iter().map(|s| s * s).sum::<f64>().sqrt();
            if den > 0.0 && num > 0.0 {
                let rate = num / den;
                if rate < 1.0 {
                    let omega = rate / (1.0 - rate);
                    let candidate: Vec<f64> = thetas
                        .iter()
                        .zip(&step)
                        .map(|(&t, &s)| t + omega * s)
                        .collect();
                    let cand_dirs: Vec<Vec3> = frames
                        .iter()
                        .zip(&candidate)
                        .map(|(f, &t)| f.transverse(t))
                        .collect();
                    let cand_var = variance_of_dirs(table, &cand_dirs);
                    if cand_var < cur {
                        thetas = candidate;
                        dirs = cand_dirs;
                        cur = cand_var;
                    }
                }
            }
        }
        last_step = Some(step);
        if prev - cur < config.convergence_tol {
            converged = true;
            prev = cur.min(prev);
            break;
        }
        prev = cur;
    }
    MinimizeOutcome {
        theta_opt: thetas,
        var_min: prev,
        converged,
    }
}

/// Wraps an angle difference into [-pi, pi).
fn wrap_pi(d: f64) -> f64 {
    let mut w = (d + std::f64::consts::PI).rem_euclid(std::f64::consts::TAU);
    if w < 0.0 {
        w += std::f64::consts::TAU;
    }
    w - std::f64::consts::PI
}

fn canonical_angle(t: f64) -> f64 {
    let a = t.rem_euclid(std::f64::consts::TAU);
    if a >= std::f64::consts::TAU {
        0.0
    } else {
        a
    }
}

/// Full analysis of a state: invariant parameters, optimal angles and the
/// collective-frame parameters, in one report.
pub fn xi_tilde(state: &QuantumState, config: &MinimizerConfig) -> Result<SqueezingReport> {
    let frames = frames_for(state)?;
    let table = CorrelationTable::build(state)?;
    let n = state.n_qubits();
    let outcome = minimize_variance(&table, &frames, config);
    let j0 = j0_expectation(&frames);
    let sqrt_n = (n as f64).sqrt();
    let std_min = outcome.var_min.sqrt();
    let xi_tilde_1 = 2.0 * std_min / sqrt_n;
    let xi_tilde_2 = if j0 > MEAN_SPIN_THRESHOLD {
        ReportValue::Value(sqrt_n * std_min / j0)
    } else {
        ReportValue::undefined(REASON_ZERO_MEAN_SPIN)
    };
    let collective = xi_collective_with(&table, &frames, n);
    debug_assert!(outcome.var_min <= (n * n) as f64 / 4.0 + 1e-9);
    Ok(SqueezingReport {
        n_qubits: n,
        xi_tilde_1,
        xi_tilde_2,
        theta_opt: outcome.theta_opt,
        var_min: outcome.var_min,
        j0,
        xi_1: collective.xi_1,
        xi_2: collective.xi_2,
        collective_mean_spin_len: collective.mean_spin_len,
        converged: outcome.converged,
    })
}

/// Classic collective-frame squeezing parameters.
///
/// A single frame is built from the total mean spin ⟨J⟩ = (1/2) Σ_i ⟨σ_i⟩
/// and the variance of J_theta is minimized over the one angle in closed
/// form through the smallest eigenvalue of the 2x2 transverse covariance.
/// Undefined (with reason) when |⟨J⟩| is below threshold.
pub fn xi_collective(state: &QuantumState) -> Result<CollectiveSqueezing> {
    let frames = frames_for(state)?;
    let table = CorrelationTable::build(state)?;
    Ok(xi_collective_with(&table, &frames, state.n_qubits()))
}

fn xi_collective_with(
    table: &CorrelationTable,
    frames: &[BlochFrame],
    n: usize,
) -> CollectiveSqueezing {
    let mut total = [0.0_f64; 3];
    for f in frames {
        for k in 0..3 {
            total[k] += 0.5 * f.bloch_len * f.n_0[k];
        }
    }
    let mean_spin_len = crate::frames::norm(&total);
    if mean_spin_len < MEAN_SPIN_THRESHOLD {
        return CollectiveSqueezing {
            xi_1: ReportValue::undefined(REASON_ZERO_MEAN_SPIN),
            xi_2: ReportValue::undefined(REASON_ZERO_MEAN_SPIN),
            mean_spin_len,
        };
    }
    let frame = crate::frames::build_frame(total);
    let perp = frame.n_perp;
    let vdash = frame.n_vdash;
    // 2x2 covariance of (J_perp, J_vdash). Same-qubit terms contribute
    // (1/4) N (σ·a)(σ·b) = (a·b) I on the diagonal and nothing off it.
    let mut sum_pp = 0.0;
    let mut sum_vv = 0.0;
    let mut sum_pv = 0.0;
    for i in 1..=n {
        for j in (i + 1)..=n {
            sum_pp += table.bilinear(i, j, &perp, &perp);
            sum_vv += table.bilinear(i, j, &vdash, &vdash);
            sum_pv += table.bilinear(i, j, &perp, &vdash) + table.bilinear(i, j, &vdash, &perp);
        }
    }
    let a = 0.25 * (n as f64 + 2.0 * sum_pp);
    let c = 0.25 * (n as f64 + 2.0 * sum_vv);
    let b = 0.25 * sum_pv;
    let var_min = (0.5 * (a + c) - (0.25 * (a - c) * (a - c) + b * b).sqrt()).max(0.0);
    let sqrt_n = (n as f64).sqrt();
    let std_min = var_min.sqrt();
    CollectiveSqueezing {
        xi_1: ReportValue::Value(2.0 * std_min / sqrt_n),
        xi_2: ReportValue::Value(sqrt_n * std_min / mean_spin_len),
        mean_spin_len,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{basis_state, QuantumState};
    use num_complex::Complex64;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn schmidt_state(l1: f64) -> QuantumState {
        let l2 = (1.0 - l1 * l1).sqrt();
        QuantumState::make_pure(2, vec![c(l1), c(0.0), c(0.0), c(l2)]).unwrap()
    }

    fn psi_prime(phi: f64) -> QuantumState {
        QuantumState::make_pure(2, vec![c(phi.cos()), c(0.0), c(0.0), c(phi.sin())]).unwrap()
    }

    #[test]
    fn product_state_variance_is_quarter_n() {
        for n in [1usize, 2, 3, 4] {
            let s = basis_state(n, 0).unwrap();
            let frames = frames_for(&s).unwrap();
            let table = CorrelationTable::build(&s).unwrap();
            for k in 0..5 {
                let thetas: Vec<f64> = (0..n).map(|q| 0.7 * (q + k) as f64).collect();
                let v = variance_at_angles(&table, &frames, &thetas).unwrap();
                assert!((v - n as f64 / 4.0).abs() < 1e-12, "n={n} v={v}");
            }
        }
    }

    #[test]
    fn schmidt_state_variance_at_opposed_angles() {
        // lambda_1 = sqrt(0.8): variance (1 - 2 sqrt(0.16)) / 2 = 0.1 at
        // theta_1 + theta_2 = pi.
        let s = schmidt_state(0.8_f64.sqrt());
        let frames = frames_for(&s).unwrap();
        let table = CorrelationTable::build(&s).unwrap();
        let v = variance_at_angles(&table, &frames, &[0.4, std::f64::consts::PI - 0.4]).unwrap();
        assert!((v - 0.1).abs() < 1e-12, "v={v}");
    }

    #[test]
    fn angle_count_mismatch_is_an_error() {
        let s = basis_state(2, 0).unwrap();
        let frames = frames_for(&s).unwrap();
        let table = CorrelationTable::build(&s).unwrap();
        assert!(matches!(
            variance_at_angles(&table, &frames, &[0.0]),
            Err(Error::AngleCount { .. })
        ));
    }

    #[test]
    fn single_qubit_minimum_is_quarter() {
        let s = basis_state(1, 0).unwrap();
        let frames = frames_for(&s).unwrap();
        let table = CorrelationTable::build(&s).unwrap();
        let out = minimize_variance(&table, &frames, &MinimizerConfig::default());
        assert!((out.var_min - 0.25).abs() < 1e-15);
        assert!(out.converged);
    }

    #[test]
    fn schmidt_state_minimum_matches_closed_form() {
        for l1sq in [0.5, 0.65, 0.8, 0.95, 1.0] {
            let l1 = f64::sqrt(l1sq);
            let l2 = (1.0 - l1sq).sqrt();
            let s = schmidt_state(l1);
            let frames = frames_for(&s).unwrap();
            let table = CorrelationTable::build(&s).unwrap();
            let out = minimize_variance(&table, &frames, &MinimizerConfig::default());
            let expected = (1.0 - 2.0 * l1 * l2) / 2.0;
            assert!(
                (out.var_min - expected).abs() < 1e-12,
                "l1^2={l1sq}: {} vs {expected}",
                out.var_min
            );
        }
    }

    #[test]
    fn product_state_report_is_unsqueezed() {
        let s = basis_state(3, 0).unwrap();
        let r = xi_tilde(&s, &MinimizerConfig::default()).unwrap();
        assert!((r.xi_tilde_1 - 1.0).abs() < 1e-12);
        assert!((r.xi_tilde_2.value().unwrap() - 1.0).abs() < 1e-12);
        assert!((r.xi_1.value().unwrap() - 1.0).abs() < 1e-12);
        assert!((r.xi_2.value().unwrap() - 1.0).abs() < 1e-12);
        assert!((r.j0 - 1.5).abs() < 1e-12);
        assert!(r.converged);
    }

    #[test]
    fn concurrence_0p8_state_report() {
        // lambda_1^2 = 0.8 gives concurrence 0.8; xi_tilde_1 = sqrt(0.2),
        // xi_tilde_2 = 1/sqrt(1.8).
        let r = xi_tilde(&schmidt_state(0.8_f64.sqrt()), &MinimizerConfig::default()).unwrap();
        assert!((r.xi_tilde_1 - 0.2_f64.sqrt()).abs() < 1e-9);
        assert!((r.xi_tilde_2.value().unwrap() - 1.0 / 1.8_f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn bell_state_has_undefined_ratio() {
        let bell = schmidt_state(std::f64::consts::FRAC_1_SQRT_2);
        let r = xi_tilde(&bell, &MinimizerConfig::default()).unwrap();
        assert!(r.xi_tilde_1.abs() < 1e-7);
        assert_eq!(
            r.xi_tilde_2,
            ReportValue::undefined(REASON_ZERO_MEAN_SPIN)
        );
        assert_eq!(r.xi_1, ReportValue::undefined(REASON_ZERO_MEAN_SPIN));
    }

    #[test]
    fn report_identities_hold() {
        let r = xi_tilde(&schmidt_state(0.9), &MinimizerConfig::default()).unwrap();
        let n = r.n_qubits as f64;
        assert!((r.xi_tilde_1 - 2.0 * r.var_min.sqrt() / n.sqrt()).abs() < 1e-12);
        let xt2 = r.xi_tilde_2.value().unwrap();
        assert!((xt2 - n.sqrt() * r.var_min.sqrt() / r.j0).abs() < 1e-12);
        assert!(r.var_min >= 0.0 && r.var_min <= n * n / 4.0);
        for t in &r.theta_opt {
            assert!(*t >= 0.0 && *t < std::f64::consts::TAU);
        }
    }

    #[test]
    fn collective_parameters_on_flip_symmetric_pair() {
        // cos phi |00> + sin phi |11>: xi_1 = sqrt(1 - |sin 2phi|) and
        // xi_2 = 1/sqrt(1 + |sin 2phi|). At phi = pi/12 these are
        // sqrt(1/2) and sqrt(2/3).
        let phi = std::f64::consts::PI / 12.0;
        let col = xi_collective(&psi_prime(phi)).unwrap();
        assert!((col.xi_1.value().unwrap() - 0.5_f64.sqrt()).abs() < 1e-12);
        assert!((col.xi_2.value().unwrap() - (2.0_f64 / 3.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn collective_parameters_undefined_for_zero_mean_spin() {
        // cos phi |01> + sin phi |10> has zero total mean spin.
        let phi = 0.6_f64;
        let s =
            QuantumState::make_pure(2, vec![c(0.0), c(phi.cos()), c(phi.sin()), c(0.0)]).unwrap();
        let col = xi_collective(&s).unwrap();
        assert_eq!(col.xi_1, ReportValue::undefined(REASON_ZERO_MEAN_SPIN));
        assert_eq!(col.xi_2, ReportValue::undefined(REASON_ZERO_MEAN_SPIN));
        assert!(col.mean_spin_len < 1e-12);
    }

    #[test]
    fn collective_parameters_on_coherent_state() {
        let s = basis_state(4, 0).unwrap();
        let col = xi_collective(&s).unwrap();
        assert!((col.xi_1.value().unwrap() - 1.0).abs() < 1e-12);
        assert!((col.xi_2.value().unwrap() - 1.0).abs() < 1e-12);
        assert!((col.mean_spin_len - 2.0).abs() < 1e-12);
    }

    #[test]
    fn identical_seeds_give_identical_reports() {
        let s = schmidt_state(0.77);
        let cfg = MinimizerConfig::default().with_seed(123);
        let r1 = xi_tilde(&s, &cfg).unwrap();
        let r2 = xi_tilde(&s, &cfg).unwrap();
        assert_eq!(r1, r2);
        assert_eq!(r1.theta_opt, r2.theta_opt);
        assert!(r1.var_min.to_bits() == r2.var_min.to_bits());
    }
}
