//! Sorted power products with Koszul-signed multiplication.
//!
//! The same representation serves scalar monomials (letter `g` has parity
//! `deg g`) and de Rham words (letter `d_dR g` has parity `deg g + 1`); the
//! parity rule is passed in by the caller.

use std::fmt;

use super::signature::{Gen, Signature};
use crate::error::{Error, Result};

/// A product of generator powers in ascending generator order.
///
/// Odd letters appear with exponent 1; negative exponents are only produced
/// for letters the caller allows to be inverted.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Gen, i32)>);

/// Outcome of a signed product: `None` when the product vanishes.
pub type Signed<T> = Option<(bool, T)>;

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(g: Gen) -> Self {
        Self(vec![(g, 1)])
    }

    /// Builds a normal-form scalar monomial from factors given in the stated
    /// order, returning the Koszul sign needed to sort them.
    pub fn from_factors(sig: &Signature, factors: &[(Gen, i32)]) -> Result<(bool, Option<Self>)> {
        let mut neg = false;
        let mut acc = Some(Self::one());
        for &(g, e) in factors {
            if !sig.contains(g) {
                return Err(Error::UnknownGenerator(format!("#{}", g.0)));
            }
            if sig.is_odd(g) && e != 1 {
                return Err(Error::OddExponent { name: sig.name(g).to_string(), exponent: e });
            }
            if e < 0 && !sig.is_invertible(g) {
                return Err(Error::NegativeExponent { name: sig.name(g).to_string(), exponent: e });
            }
            if e == 0 {
                continue;
            }
            if let Some(m) = acc.take() {
                if let Some((s, p)) = m.mul(&Self(vec![(g, e)]), |h| sig.is_odd(h)) {
                    neg ^= s;
                    acc = Some(p);
                }
            }
        }
        Ok((neg, acc))
    }

    #[cfg(test)]
    pub(crate) fn from_sorted_unchecked(factors: Vec<(Gen, i32)>) -> Self {
        Self(factors)
    }

    pub fn factors(&self) -> &[(Gen, i32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of letters counted with multiplicity.
    pub fn len(&self) -> usize {
        self.0.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, g: Gen) -> i32 {
        self.0.iter().find(|&&(h, _)| h == g).map_or(0, |&(_, e)| e)
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.0.iter().any(|&(h, _)| h == g)
    }

    /// Σ exponent·weight(letter).
    pub fn weighted_degree(&self, weight: impl Fn(Gen) -> i32) -> i32 {
        self.0.iter().map(|&(g, e)| e * weight(g)).sum()
    }

    /// Parity of the product under the given letter parity.
    pub fn parity(&self, odd: impl Fn(Gen) -> bool) -> bool {
        self.0.iter().filter(|&&(g, e)| odd(g) && e.rem_euclid(2) == 1).count() % 2 == 1
    }

    /// Product `self · other`, sorted with Koszul signs. Returns `None` when an
    /// odd letter would be squared.
    pub fn mul(&self, other: &Self, odd: impl Fn(Gen) -> bool) -> Signed<Self> {
        let a = &self.0;
        let b = &other.0;
        // odd letters of `a` still to the right of the merge cursor
        let mut odd_left_in_a = a.iter().filter(|&&(g, _)| odd(g)).count();
        let mut neg = false;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                if odd(a[i].0) {
                    odd_left_in_a -= 1;
                }
                out.push(a[i]);
                i += 1;
            } else if take_b {
                if odd(b[j].0) && odd_left_in_a % 2 == 1 {
                    neg = !neg;
                }
                out.push(b[j]);
                j += 1;
            } else {
                let g = a[i].0;
                if odd(g) {
                    return None;
                }
                let e = a[i].1 + b[j].1;
                if e != 0 {
                    out.push((g, e));
                }
                i += 1;
                j += 1;
            }
        }
        Some((neg, Self(out)))
    }

    /// Left derivative with respect to `g`: move one copy of `g` to the front
    /// (Koszul sign) and strike it. Returns the multiplicity factor, the
    /// sign, and the remaining monomial.
    pub fn left_derivative(&self, g: Gen, odd: impl Fn(Gen) -> bool) -> Option<(i32, bool, Self)> {
        let pos = self.0.iter().position(|&(h, _)| h == g)?;
        let e = self.0[pos].1;
        let mut rest = self.0.clone();
        if odd(g) {
            let before = self.0[..pos].iter().filter(|&&(h, _)| odd(h)).count();
            rest.remove(pos);
            Some((1, before % 2 == 1, Self(rest)))
        } else {
            if e == 1 {
                rest.remove(pos);
            } else {
                rest[pos].1 = e - 1;
            }
            Some((e, false, Self(rest)))
        }
    }

    pub fn display<'a>(&'a self, sig: &'a Signature, prefix: &'a str) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, sig, prefix }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    sig: &'a Signature,
    prefix: &'a str,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, &(g, e)) in self.mono.0.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", self.prefix, self.sig.name(g))?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
