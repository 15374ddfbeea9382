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

//! Report documents and their serialized forms.
//!
//! Every float is written with 17 significant digits so documents round-trip
//! losslessly and identical runs produce byte-identical output. Undefined
//! quantities appear as `{"undefined": "<reason>"}` objects, never NaN or
//! null. Wall-clock timing is opt-in because it is the one field that would
//! break reproducibility.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::entangle::WitnessVerdict;
use crate::squeeze::{MinimizerConfig, ReportValue, SqueezingReport};

pub const SCHEMA_VERSION: &str = "1";

/// The envelope written by `analyze` and `witness`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    /// Content hash of the state file the report was computed from.
    pub input_digest: String,
    pub report: SqueezingReport,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdict: Option<WitnessVerdict>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing_ms: Option<f64>,
    pub config_echo: MinimizerConfig,
}

impl ReportDocument {
    pub fn new(
        input_digest: String,
        report: SqueezingReport,
        verdict: Option<WitnessVerdict>,
        timing_ms: Option<f64>,
        config: MinimizerConfig,
    ) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            input_digest,
            report,
            verdict,
            timing_ms,
            config_echo: config,
        }
    }

    /// One CSV row (with header) carrying the scalar report fields, using
    /// the same float formatting as the JSON form.
    pub fn to_csv(&self) -> String {
        let r = &self.report;
        let header = "schema_version,input_digest,n_qubits,xi_tilde_1,xi_tilde_2,var_min,j0,\
                      xi_1,xi_2,collective_mean_spin_len,converged,seed,n_restarts";
        let row = format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.schema_version,
            self.input_digest,
            r.n_qubits,
            fmt_f64(r.xi_tilde_1),
            csv_value(&r.xi_tilde_2),
            fmt_f64(r.var_min),
            fmt_f64(r.j0),
            csv_value(&r.xi_1),
            csv_value(&r.xi_2),
            fmt_f64(r.collective_mean_spin_len),
            r.converged,
            self.config_echo.seed,
            self.config_echo.n_restarts,
        );
        format!("{header}\n{row}\n")
    }
}

/// CSV cell for a possibly undefined quantity.
pub fn csv_value(v: &ReportValue) -> String {
    match v.value() {
        Some(x) => fmt_f64(x),
        None => "undefined".to_string(),
    }
}

/// 17 significant digits: enough to reconstruct any f64 exactly.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

struct Digits17;

impl serde_json::ser::Formatter for Digits17 {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// JSON with every float at 17 significant digits.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Digits17);
    value
        .serialize(&mut ser)
        .expect("report serialization cannot fail");
    String::from_utf8(out).expect("serializer emits UTF-8")
}
