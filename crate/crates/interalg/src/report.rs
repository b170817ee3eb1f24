//! JSON form of an invariant report. Rationals are `p/q` strings, each with
//! a 15-digit decimal companion.

use std::fmt::Write as _;

use interalg_core::invariants::{InvariantReport, Method};
use interalg_core::rational::{format_fraction, to_decimal};
use interalg_core::Rational;
use num_traits::One;
use serde::{Deserialize, Serialize};

const DECIMAL_DIGITS: u32 = 15;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FanOrder {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    /// 1-based input index of each fan-ordered entry.
    pub permutation: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassGroupJson {
    pub rank: usize,
    /// Smith invariants greater than 1.
    pub torsion: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MonteCarloJson {
    pub estimate: f64,
    pub standard_error: f64,
    pub samples: u64,
    pub seed: u64,
    /// `|estimate - exact| / standardError`; absent when the error is zero.
    pub sigmas: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LatticeJson {
    pub scale: i64,
    pub value: String,
    pub decimal: String,
    /// `|value - exact|` in decimal.
    pub deviation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleJson {
    /// Report key the region's volume belongs to.
    pub invariant: String,
    pub region: String,
    pub exact: String,
    pub monte_carlo: MonteCarloJson,
    pub lattice: LatticeJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MeshJson {
    pub region: String,
    pub file: String,
    pub vertices: usize,
    pub faces: usize,
    /// Volume enclosed by the triangulated boundary.
    pub volume: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportJson {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fan_order: Option<FanOrder>,
    pub adjoined_variables: Vec<usize>,
    pub polynomial_ring: bool,
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_set: Option<Vec<[i64; 2]>>,
    pub hilbert_number: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding_dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_samuel: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_samuel_volume: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_samuel_volume_decimal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class_group: Option<ClassGroupJson>,
    pub q_gorenstein: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_signature: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_signature_decimal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_signature_method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_kunz: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_kunz_decimal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_kunz_method: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub oracles: Vec<OracleJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub meshes: Vec<MeshJson>,
}

pub fn fraction(r: &Rational) -> String {
    format_fraction(r)
}

pub fn decimal(r: &Rational) -> String {
    to_decimal(r, DECIMAL_DIGITS)
}

fn method(m: Option<Method>) -> Option<String> {
    m.map(|m| m.as_str().to_string())
}

impl ReportJson {
    pub fn from_report(r: &InvariantReport, embedding_dimension: bool) -> Self {
        let (fan_order, hilbert_set) = match &r.pair {
            Some(p) => {
                let set = interalg_core::fan_hilbert::hilbert_set(p)
                    .ok()
                    .map(|h| h.merged.iter().map(|v| [v.r, v.s]).collect());
                let order = FanOrder {
                    a: p.a().to_vec(),
                    b: p.b().to_vec(),
                    permutation: p.permutation().iter().map(|i| i + 1).collect(),
                };
                (Some(order), set)
            }
            None => (None, None),
        };
        ReportJson {
            a: r.a.clone(),
            b: r.b.clone(),
            fan_order,
            adjoined_variables: r.adjoined_variables.clone(),
            polynomial_ring: r.polynomial_ring_only,
            dimension: r.dimension,
            hilbert_set,
            hilbert_number: r.hilbert_number,
            embedding_dimension: embedding_dimension.then_some(r.embedding_dimension),
            hilbert_samuel: r.hilbert_samuel,
            hilbert_samuel_volume: r.hilbert_samuel_volume.as_ref().map(fraction),
            hilbert_samuel_volume_decimal: r.hilbert_samuel_volume.as_ref().map(decimal),
            class_group: r.class_group.as_ref().map(|c| ClassGroupJson {
                rank: c.rank,
                torsion: c
                    .smith_invariants
                    .iter()
                    .filter(|d| **d > num_bigint::BigInt::one())
                    .map(|d| d.to_string())
                    .collect(),
            }),
            q_gorenstein: r.q_gorenstein,
            f_signature: r.f_signature.as_ref().map(fraction),
            f_signature_decimal: r.f_signature.as_ref().map(decimal),
            f_signature_method: method(r.f_signature_method),
            hilbert_kunz: r.hilbert_kunz.as_ref().map(fraction),
            hilbert_kunz_decimal: r.hilbert_kunz.as_ref().map(decimal),
            hilbert_kunz_method: method(r.hilbert_kunz_method),
            oracles: Vec::new(),
            meshes: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Aligned `key  value` lines.
    pub fn to_table(&self) -> String {
        let mut rows: Vec<(String, String)> = Vec::new();
        let list = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        rows.push(("a".into(), list(&self.a)));
        rows.push(("b".into(), list(&self.b)));
        if let Some(f) = &self.fan_order {
            rows.push(("fan order a".into(), list(&f.a)));
            rows.push(("fan order b".into(), list(&f.b)));
        }
        if !self.adjoined_variables.is_empty() {
            let v: Vec<String> = self
                .adjoined_variables
                .iter()
                .map(usize::to_string)
                .collect();
            rows.push(("adjoined variables".into(), v.join(",")));
        }
        rows.push(("dimension".into(), self.dimension.to_string()));
        if let Some(h) = &self.hilbert_set {
            let pts: Vec<String> = h.iter().map(|p| format!("({},{})", p[0], p[1])).collect();
            rows.push(("hilbert set".into(), pts.join(" ")));
        }
        rows.push(("hilbert number".into(), self.hilbert_number.to_string()));
        if let Some(v) = self.embedding_dimension {
            rows.push(("embedding dimension".into(), v.to_string()));
        }
        if let Some(v) = self.hilbert_samuel {
            rows.push(("hilbert-samuel".into(), v.to_string()));
        }
        if let Some(v) = &self.hilbert_samuel_volume {
            rows.push(("hilbert-samuel volume".into(), v.clone()));
        }
        if let Some(c) = &self.class_group {
            let mut g = format!("Z^{}", c.rank);
            for t in &c.torsion {
                let _ = write!(g, " + Z/{t}");
            }
            rows.push(("class group".into(), g));
        }
        rows.push(("q-gorenstein".into(), self.q_gorenstein.to_string()));
        let valued = |v: &Option<String>, d: &Option<String>, m: &Option<String>| {
            v.as_ref().map(|v| {
                format!(
                    "{v} ({}) [{}]",
                    d.as_deref().unwrap_or(""),
                    m.as_deref().unwrap_or("")
                )
            })
        };
        if let Some(s) = valued(
            &self.f_signature,
            &self.f_signature_decimal,
            &self.f_signature_method,
        ) {
            rows.push(("f-signature".into(), s));
        }
        if let Some(s) = valued(
            &self.hilbert_kunz,
            &self.hilbert_kunz_decimal,
            &self.hilbert_kunz_method,
        ) {
            rows.push(("hilbert-kunz".into(), s));
        }
        for o in &self.oracles {
            rows.push((
                format!("{} monte carlo", o.region),
                format!(
                    "{:.6} ± {:.6} (exact {})",
                    o.monte_carlo.estimate, o.monte_carlo.standard_error, o.exact
                ),
            ));
            rows.push((
                format!("{} lattice m={}", o.region, o.lattice.scale),
                format!("{} ({})", o.lattice.value, o.lattice.decimal),
            ));
        }
        for m in &self.meshes {
            rows.push((
                format!("{} mesh", m.region),
                format!("{} volume {}", m.file, m.volume),
            ));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }
}
