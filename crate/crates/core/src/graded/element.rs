use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::monomial::Monomial;
use super::point::Point;
use super::signature::{same_signature, Gen, SignatureRef};
use crate::error::{Error, Result};
use crate::scalar::Field;

pub(crate) fn apply_sign<F: Field>(neg: bool, c: F) -> F {
    if neg {
        -c
    } else {
        c
    }
}

/// Sparse element of a free graded-commutative algebra: a finite sum of
/// normal-form monomials with nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct Element<F: Field> {
    sig: SignatureRef,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Element<F> {
    pub fn zero(sig: &SignatureRef) -> Self {
        Self { sig: sig.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(sig: &SignatureRef, c: F) -> Self {
        let mut e = Self::zero(sig);
        e.add_term(Monomial::one(), c);
        e
    }

    pub fn one(sig: &SignatureRef) -> Self {
        Self::constant(sig, F::one())
    }

    pub fn var(sig: &SignatureRef, g: Gen) -> Self {
        let mut e = Self::zero(sig);
        e.add_term(Monomial::var(g), F::one());
        e
    }

    pub fn named(sig: &SignatureRef, name: &str) -> Result<Self> {
        Ok(Self::var(sig, sig.lookup(name)?))
    }

    /// `coef · Π factors` with factors given by name, in the stated order.
    pub fn monomial(sig: &SignatureRef, coef: F, factors: &[(&str, i32)]) -> Result<Self> {
        let gens = factors
            .iter()
            .map(|&(n, e)| sig.lookup(n).map(|g| (g, e)))
            .collect::<Result<Vec<_>>>()?;
        let (neg, mono) = Monomial::from_factors(sig, &gens)?;
        let mut out = Self::zero(sig);
        if let Some(m) = mono {
            out.add_term(m, apply_sign(neg, coef));
        }
        Ok(out)
    }

    pub fn from_terms(sig: &SignatureRef, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut out = Self::zero(sig);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn signature(&self) -> &SignatureRef {
        &self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn monomial_degree(&self, m: &Monomial) -> i32 {
        m.weighted_degree(|g| self.sig.degree(g))
    }

    /// Degree of a homogeneous nonzero element.
    pub fn degree(&self) -> Option<i32> {
        let mut it = self.terms.keys().map(|m| self.monomial_degree(m));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// True for zero and for elements whose every term has degree `d`.
    pub fn is_homogeneous_of(&self, d: i32) -> bool {
        self.terms.keys().all(|m| self.monomial_degree(m) == d)
    }

    pub fn homogeneous_component(&self, d: i32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.monomial_degree(m) == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Self { sig: self.sig.clone(), terms }
    }

    pub fn involves(&self, g: Gen) -> bool {
        self.terms.keys().any(|m| m.contains(g))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.sig);
        }
        Self {
            sig: self.sig.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c.clone())).collect(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if same_signature(&self.sig, &other.sig) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    /// Koszul-normalised product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let sig = &self.sig;
        let mut out = Self::zero(sig);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((neg, m)) = ma.mul(mb, |g| sig.is_odd(g)) {
                    out.add_term(m, apply_sign(neg, ca.clone() * cb.clone()));
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Graded left partial derivative ∂/∂g, of degree `-deg g`.
    pub fn partial_derivative(&self, g: Gen) -> Result<Self> {
        if !self.sig.contains(g) {
            return Err(Error::UnknownGenerator(format!("#{}", g.0)));
        }
        let sig = &self.sig;
        let mut out = Self::zero(sig);
        for (m, c) in &self.terms {
            if let Some((mult, neg, rest)) = m.left_derivative(g, |h| sig.is_odd(h)) {
                out.add_term(rest, apply_sign(neg, c.clone() * F::from_i64(mult as i64)));
            }
        }
        Ok(out)
    }

    pub fn partial_named(&self, name: &str) -> Result<Self> {
        self.partial_derivative(self.sig.lookup(name)?)
    }

    /// Restrict to the degree-0 generators (every monomial containing a
    /// negative-degree generator maps to 0) and substitute the point.
    pub fn evaluate(&self, p: &Point<F>) -> Result<F> {
        let mut acc = F::zero();
        'terms: for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(g, _) in m.factors() {
                if self.sig.degree(g) != 0 {
                    continue 'terms;
                }
            }
            for &(g, e) in m.factors() {
                let x = p.value_for(&self.sig, g)?;
                let xe = pow(&x, e);
                v = v * xe;
            }
            acc = acc + v;
        }
        Ok(acc)
    }

    /// Same element over another signature, matching generators by name.
    pub fn transport(&self, sig: &SignatureRef) -> Result<Self> {
        if self.sig.is_prefix_of(sig) {
            return self.rebase(sig);
        }
        let mut out = Self::zero(sig);
        for (m, c) in &self.terms {
            let factors = m
                .factors()
                .iter()
                .map(|&(g, e)| Ok((sig.lookup(self.sig.name(g))?, e)))
                .collect::<Result<Vec<_>>>()?;
            if let (neg, Some(m)) = Monomial::from_factors(sig, &factors)? {
                out.add_term(m, if neg { -c.clone() } else { c.clone() });
            }
        }
        Ok(out)
    }

    /// Same element over a signature that extends this one.
    pub fn rebase(&self, sig: &SignatureRef) -> Result<Self> {
        if !self.sig.is_prefix_of(sig) {
            return Err(Error::SignatureMismatch);
        }
        Ok(Self { sig: sig.clone(), terms: self.terms.clone() })
    }
}

fn pow<F: Field>(x: &F, e: i32) -> F {
    let mut out = F::one();
    for _ in 0..e.unsigned_abs() {
        out = out * x.clone();
    }
    if e < 0 {
        F::one() / out
    } else {
        out
    }
}

impl<F: Field> fmt::Display for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", m.display(&self.sig, ""))?;
            } else {
                write!(f, "({c}) {}", m.display(&self.sig, ""))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl<F: Field> Add for &Element<F> {
    type Output = Element<F>;
    fn add(self, rhs: Self) -> Element<F> {
        self.try_add(rhs).expect("adding elements over different signatures")
    }
}

impl<F: Field> Sub for &Element<F> {
    type Output = Element<F>;
    fn sub(self, rhs: Self) -> Element<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Mul for &Element<F> {
    type Output = Element<F>;
    fn mul(self, rhs: Self) -> Element<F> {
        self.multiply(rhs).expect("multiplying elements over different signatures")
    }
}

impl<F: Field> Neg for &Element<F> {
    type Output = Element<F>;
    fn neg(self) -> Element<F> {
        self.scale(&-F::one())
    }
}

impl<F: Field> AddAssign<&Element<F>> for Element<F> {
    fn add_assign(&mut self, rhs: &Element<F>) {
        self.check_same(rhs).expect("adding elements over different signatures");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<F: Field> SubAssign<&Element<F>> for Element<F> {
    fn sub_assign(&mut self, rhs: &Element<F>) {
        *self += &(-rhs);
    }
}
