use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exactpoly::{BiPoly, LaurentPoly};
use crate::motivic::MotivicExpression;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
}

impl Status {
    pub fn is_verified(self) -> bool {
        self == Status::Verified
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
        })
    }
}

mod decimal {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

/// One side of a checked identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum ReportSide {
    /// A polynomial in `x, y` (E-polynomials).
    Bivariate(BiPoly),
    /// A Laurent polynomial in one variable (`L` or `t`).
    Laurent(LaurentPoly),
    /// A formal sum `Σ P_i(L) [Sym^i C]`.
    Motivic(MotivicExpression),
    /// A plain integer, e.g. an object count or a number of checked cases.
    Count(#[serde(with = "decimal")] BigInt),
}

impl fmt::Display for ReportSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportSide::Bivariate(p) => write!(f, "{p}"),
            ReportSide::Laurent(p) => write!(f, "{p}"),
            ReportSide::Motivic(m) => write!(f, "{m}"),
            ReportSide::Count(c) => write!(f, "{c}"),
        }
    }
}

/// Effectivity of the `index`-th multiplicity polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffectivityCheck {
    pub index: i64,
    pub effective: bool,
}

/// Outcome of checking one identity instance.
///
/// `status` is derived: verified exactly when both sides are equal and every
/// effectivity check passes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    identity: String,
    params: BTreeMap<String, i64>,
    status: Status,
    lhs: ReportSide,
    rhs: ReportSide,
    effectivity: Vec<EffectivityCheck>,
    notes: Vec<String>,
    elapsed_ms: f64,
}

impl VerificationReport {
    pub fn new<'a>(
        identity: impl Into<String>,
        params: impl IntoIterator<Item = (&'a str, i64)>,
        lhs: ReportSide,
        rhs: ReportSide,
    ) -> Self {
        let mut report = Self {
            identity: identity.into(),
            params: params
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            status: Status::Failed,
            lhs,
            rhs,
            effectivity: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: 0.0,
        };
        report.refresh_status();
        report
    }

    pub fn with_effectivity(mut self, checks: Vec<EffectivityCheck>) -> Self {
        self.effectivity = checks;
        self.refresh_status();
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn with_elapsed(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        self
    }

    /// Zeroes the timing so that output is reproducible byte for byte.
    pub fn clear_timing(&mut self) {
        self.elapsed_ms = 0.0;
    }

    fn refresh_status(&mut self) {
        let ok = self.lhs == self.rhs && self.effectivity.iter().all(|c| c.effective);
        self.status = if ok { Status::Verified } else { Status::Failed };
    }

    pub fn identity(&self) -> &str {
        &self.identity
    }

    pub fn params(&self) -> &BTreeMap<String, i64> {
        &self.params
    }

    pub fn param(&self, key: &str) -> Option<i64> {
        self.params.get(key).copied()
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_verified(&self) -> bool {
        self.status.is_verified()
    }

    pub fn lhs(&self) -> &ReportSide {
        &self.lhs
    }

    pub fn rhs(&self) -> &ReportSide {
        &self.rhs
    }

    pub fn effectivity(&self) -> &[EffectivityCheck] {
        &self.effectivity
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn elapsed_ms(&self) -> f64 {
        self.elapsed_ms
    }

    /// Short label such as `conjecture-b g=4 k=1`.
    pub fn label(&self) -> String {
        let mut s = self.identity.clone();
        for (k, v) in &self.params {
            s.push_str(&format!(" {k}={v}"));
        }
        s
    }
}
