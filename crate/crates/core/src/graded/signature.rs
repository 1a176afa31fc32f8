use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a generator inside its [`Signature`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(pub u32);

impl Gen {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    #[serde(rename = "deg")]
    pub degree: i32,
    #[serde(rename = "inv", default, skip_serializing_if = "std::ops::Not::not")]
    pub invertible: bool,
}

impl GeneratorSpec {
    pub fn new(name: impl Into<String>, degree: i32) -> Self {
        Self { name: name.into(), degree, invertible: false }
    }

    pub fn invertible(name: impl Into<String>) -> Self {
        Self { name: name.into(), degree: 0, invertible: true }
    }
}

/// Ordered generator list of a free graded-commutative algebra over a field.
///
/// The declaration order is the global order used by every normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    gens: Vec<GeneratorSpec>,
    index: HashMap<String, Gen>,
}

pub type SignatureRef = Arc<Signature>;

pub fn make_algebra(gens: Vec<GeneratorSpec>) -> Result<SignatureRef> {
    Signature::new(gens).map(Arc::new)
}

impl Signature {
    pub fn new(gens: Vec<GeneratorSpec>) -> Result<Self> {
        let mut index = HashMap::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if g.degree > 0 {
                return Err(Error::PositiveDegree { name: g.name.clone(), degree: g.degree });
            }
            if g.invertible && g.degree != 0 {
                return Err(Error::InvertibleNonzeroDegree {
                    name: g.name.clone(),
                    degree: g.degree,
                });
            }
            if index.insert(g.name.clone(), Gen(i as u32)).is_some() {
                return Err(Error::DuplicateName(g.name.clone()));
            }
        }
        Ok(Self { gens, index })
    }

    /// A new signature with `more` appended after the existing generators.
    pub fn extended(&self, more: impl IntoIterator<Item = GeneratorSpec>) -> Result<SignatureRef> {
        let mut gens = self.gens.clone();
        gens.extend(more);
        make_algebra(gens)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.gens
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> + '_ {
        (0..self.gens.len() as u32).map(Gen)
    }

    pub fn spec(&self, g: Gen) -> &GeneratorSpec {
        &self.gens[g.index()]
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.gens[g.index()].name
    }

    pub fn degree(&self, g: Gen) -> i32 {
        self.gens[g.index()].degree
    }

    pub fn is_odd(&self, g: Gen) -> bool {
        self.gens[g.index()].degree.rem_euclid(2) == 1
    }

    pub fn is_invertible(&self, g: Gen) -> bool {
        self.gens[g.index()].invertible
    }

    pub fn lookup(&self, name: &str) -> Result<Gen> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn contains(&self, g: Gen) -> bool {
        g.index() < self.gens.len()
    }

    /// True when `self` lists exactly the first generators of `other`.
    pub fn is_prefix_of(&self, other: &Signature) -> bool {
        self.gens.len() <= other.gens.len() && self.gens[..] == other.gens[..self.gens.len()]
    }

    /// Every normal-form monomial of internal degree `degree` in which even
    /// generators carry exponents in `0..=max_exponent` (odd ones at most 1).
    /// Invertible generators are only taken to nonnegative powers.
    pub fn monomials_of_degree(&self, degree: i32, max_exponent: u32) -> Vec<Vec<(Gen, i32)>> {
        fn walk(
            sig: &Signature,
            g: usize,
            remaining: i32,
            max_exponent: u32,
            acc: &mut Vec<(Gen, i32)>,
            out: &mut Vec<Vec<(Gen, i32)>>,
        ) {
            if g == sig.gens.len() {
                if remaining == 0 {
                    out.push(acc.clone());
                }
                return;
            }
            let deg = sig.gens[g].degree;
            let cap = if deg.rem_euclid(2) == 1 { 1 } else { max_exponent as i32 };
            for e in 0..=cap {
                let used = e * deg;
                if deg < 0 && used < remaining {
                    break;
                }
                if e > 0 {
                    acc.push((Gen(g as u32), e));
                }
                walk(sig, g + 1, remaining - used, max_exponent, acc, out);
                if e > 0 {
                    acc.pop();
                }
            }
        }
        let mut out = Vec::new();
        walk(self, 0, degree, max_exponent, &mut Vec::new(), &mut out);
        out
    }

    /// Alternating count Σ (-1)^deg over the generator list.
    pub fn euler_characteristic(&self) -> i64 {
        self.gens.iter().map(|g| if g.degree.rem_euclid(2) == 0 { 1 } else { -1 }).sum()
    }
}

pub(crate) fn same_signature(a: &SignatureRef, b: &SignatureRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", g.name, g.degree)?;
            if g.invertible {
                write!(f, "*")?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_minus_one_signature() {
        let sig = make_algebra(vec![
            GeneratorSpec::new("x", 0),
            GeneratorSpec::new("y", -1),
            GeneratorSpec::new("z", -1),
        ])
        .unwrap();
        assert_eq!(sig.len(), 3);
        assert_eq!(sig.lookup("z").unwrap(), Gen(2));
        assert!(sig.is_odd(Gen(1)));
        assert_eq!(sig.euler_characteristic(), -1);
    }

    #[test]
    fn empty_signature_is_the_base_field() {
        let sig = make_algebra(vec![]).unwrap();
        assert!(sig.is_empty());
    }

    #[test]
    fn rejects_bad_generators() {
        let dup = make_algebra(vec![GeneratorSpec::new("x", 0), GeneratorSpec::new("x", -1)]);
        assert_eq!(dup.unwrap_err(), Error::DuplicateName("x".into()));
        let pos = make_algebra(vec![GeneratorSpec::new("x", 1)]);
        assert!(matches!(pos, Err(Error::PositiveDegree { .. })));
        let inv = make_algebra(vec![GeneratorSpec { name: "t".into(), degree: -2, invertible: true }]);
        assert!(matches!(inv, Err(Error::InvertibleNonzeroDegree { .. })));
    }
}
