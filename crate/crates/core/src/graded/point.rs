use std::collections::BTreeMap;

use super::signature::{Gen, Signature, SignatureRef};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// A classical point: a value for every degree-0 generator.
#[derive(Debug, Clone, PartialEq)]
pub struct Point<F: Field> {
    values: BTreeMap<String, F>,
}

impl<F: Field> Point<F> {
    pub fn new<S: Into<String>>(
        sig: &SignatureRef,
        assignment: impl IntoIterator<Item = (S, F)>,
    ) -> Result<Self> {
        let values: BTreeMap<String, F> =
            assignment.into_iter().map(|(n, v)| (n.into(), v)).collect();
        for name in values.keys() {
            let g = sig.lookup(name)?;
            if sig.degree(g) != 0 {
                return Err(Error::ExtraAssignment(name.clone()));
            }
        }
        for g in sig.gens() {
            if sig.degree(g) != 0 {
                continue;
            }
            let name = sig.name(g);
            match values.get(name) {
                None => return Err(Error::MissingAssignment(name.to_string())),
                Some(v) if sig.is_invertible(g) && v.is_zero() => {
                    return Err(Error::ZeroForInvertible(name.to_string()))
                }
                Some(_) => {}
            }
        }
        Ok(Self { values })
    }

    /// The origin of the degree-0 coordinates, with invertible generators at 1.
    pub fn origin(sig: &SignatureRef) -> Self {
        let values = sig
            .gens()
            .filter(|&g| sig.degree(g) == 0)
            .map(|g| {
                let v = if sig.is_invertible(g) { F::one() } else { F::zero() };
                (sig.name(g).to_string(), v)
            })
            .collect();
        Self { values }
    }

    /// Adds or replaces a coordinate value.
    pub fn with(&self, name: &str, value: F) -> Self {
        let mut values = self.values.clone();
        values.insert(name.to_string(), value);
        Self { values }
    }

    pub fn get(&self, name: &str) -> Option<&F> {
        self.values.get(name)
    }

    pub fn values(&self) -> impl Iterator<Item = (&str, &F)> {
        self.values.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Multiplies every coordinate by `c`.
    pub fn rescaled(&self, c: &F) -> Self {
        let values = self.values.iter().map(|(n, v)| (n.clone(), v.clone() * c.clone())).collect();
        Self { values }
    }

    pub(crate) fn value_for(&self, sig: &Signature, g: Gen) -> Result<F> {
        let name = sig.name(g);
        let v = self
            .values
            .get(name)
            .cloned()
            .ok_or_else(|| Error::MissingAssignment(name.to_string()))?;
        if sig.is_invertible(g) && v.is_zero() {
            return Err(Error::ZeroForInvertible(name.to_string()));
        }
        Ok(v)
    }
}
