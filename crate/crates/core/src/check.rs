use serde::{Deserialize, Serialize};

/// Outcome of a single machine check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckVerdict {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckVerdict {
    pub fn pass() -> Self {
        Self { pass: true, witness: None }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        Self { pass: false, witness: Some(witness.into()) }
    }

    pub fn from_bool(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass()
        } else {
            Self::fail(witness())
        }
    }
}
