use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::check::CheckVerdict;
use crate::graded::Point;
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl NamedCheck {
    pub fn new(name: impl Into<String>, verdict: CheckVerdict) -> Self {
        Self { name: name.into(), pass: verdict.pass, witness: verdict.witness }
    }
}

/// SHA-256 (hex) of the compact JSON text of `v`. Object keys are sorted,
/// so equal instances hash equally.
pub fn json_digest(v: &Value) -> String {
    hex::encode(Sha256::digest(v.to_string().as_bytes()))
}

/// Result of verifying one instance. Serialises deterministically.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    /// Digest of the verified instance's JSON.
    pub instance: String,
    pub description: String,
    pub vdim: i64,
    pub checks: Vec<NamedCheck>,
    pub points: Vec<BTreeMap<String, String>>,
    /// Verdict on the Artin generators, kept apart from `checks` so that
    /// extending a model leaves the check list unchanged.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub artin_block: Option<NamedCheck>,
}

impl CheckReport {
    pub fn new<F: Field>(
        instance: &Value,
        description: impl Into<String>,
        vdim: i64,
        checks: Vec<NamedCheck>,
        points: &[Point<F>],
    ) -> Self {
        let points = points
            .iter()
            .map(|p| p.values().map(|(k, v)| (k.to_string(), v.to_string())).collect())
            .collect();
        Self {
            instance: json_digest(instance),
            description: description.into(),
            vdim,
            checks,
            points,
            artin_block: None,
        }
    }

    pub fn with_artin_block(mut self, check: NamedCheck) -> Self {
        self.artin_block = Some(check);
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.artin_block.as_ref().is_none_or(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&NamedCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &NamedCheck> {
        self.checks.iter().chain(&self.artin_block).filter(|c| !c.pass)
    }

    /// Canonical JSON value (object keys sorted).
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serialises")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "instance: {} ({})", self.description, self.instance)?;
        writeln!(f, "vdim: {}", self.vdim)?;
        for c in self.checks.iter().chain(&self.artin_block) {
            write!(f, "[{}] {}", if c.pass { "PASS" } else { "FAIL" }, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, ": {w}")?;
            }
            writeln!(f)?;
        }
        write!(f, "points: {}", self.points.len())
    }
}
