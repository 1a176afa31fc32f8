use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::graded::{apply_sign, same_signature, Element, Gen, Monomial, SignatureRef};
use crate::scalar::Field;

/// Key of a form term: scalar monomial followed by a word in the `d_dR g`.
pub type FormKey = (Monomial, Monomial);

/// A weight-homogeneous element of the de Rham algebra.
///
/// Terms are stored as `coefficient · monomial · d_dR g₁ ⋯ d_dR g_p` with the
/// word sorted by generator order. The letter `d_dR g` has internal degree
/// `deg g` and Koszul parity `deg g + 1`, so `(d_dR g)²` survives exactly when
/// `deg g` is odd.
#[derive(Clone, PartialEq)]
pub struct Form<F: Field> {
    sig: SignatureRef,
    weight: usize,
    terms: BTreeMap<FormKey, F>,
}

impl<F: Field> Form<F> {
    pub fn zero(sig: &SignatureRef, weight: usize) -> Self {
        Self { sig: sig.clone(), weight, terms: BTreeMap::new() }
    }

    pub fn from_scalar(e: &Element<F>) -> Self {
        let mut f = Self::zero(e.signature(), 0);
        for (m, c) in e.terms() {
            f.add_term((m.clone(), Monomial::one()), c.clone());
        }
        f
    }

    /// The basis 1-form `d_dR g`.
    pub fn d_gen(sig: &SignatureRef, g: Gen) -> Self {
        let mut f = Self::zero(sig, 1);
        f.add_term((Monomial::one(), Monomial::var(g)), F::one());
        f
    }

    pub fn d_named(sig: &SignatureRef, name: &str) -> Result<Self> {
        Ok(Self::d_gen(sig, sig.lookup(name)?))
    }

    pub fn from_terms(
        sig: &SignatureRef,
        weight: usize,
        terms: impl IntoIterator<Item = (FormKey, F)>,
    ) -> Self {
        let mut f = Self::zero(sig, weight);
        for (k, c) in terms {
            f.add_term(k, c);
        }
        f
    }

    pub fn signature(&self) -> &SignatureRef {
        &self.sig
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FormKey, &F)> {
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

    pub(crate) fn add_term(&mut self, key: FormKey, c: F) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(key.1.len(), self.weight);
        match self.terms.entry(key) {
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

    pub(crate) fn scalar_parity(&self, m: &Monomial) -> bool {
        m.parity(|g| self.sig.is_odd(g))
    }

    pub(crate) fn word_parity(&self, w: &Monomial) -> bool {
        w.parity(|g| !self.sig.is_odd(g))
    }

    /// Internal degree of a term.
    pub fn term_degree(&self, key: &FormKey) -> i32 {
        let deg = |g| self.sig.degree(g);
        key.0.weighted_degree(deg) + key.1.weighted_degree(deg)
    }

    /// Internal degree when homogeneous and nonzero.
    pub fn degree(&self) -> Option<i32> {
        let mut it = self.terms.keys().map(|k| self.term_degree(k));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, d: i32) -> bool {
        self.terms.keys().all(|k| self.term_degree(k) == d)
    }

    /// The weight-0 part as a scalar element.
    pub fn to_scalar(&self) -> Result<Element<F>> {
        if self.weight != 0 {
            return Err(Error::WeightMismatch { expected: 0, found: self.weight });
        }
        Ok(Element::from_terms(
            &self.sig,
            self.terms.iter().map(|((m, _), c)| (m.clone(), c.clone())),
        ))
    }

    /// For a 1-form `Σ a_g d_dR g`, the coefficient `a_g`.
    pub fn component(&self, g: Gen) -> Element<F> {
        let w = Monomial::var(g);
        Element::from_terms(
            &self.sig,
            self.terms
                .iter()
                .filter(|((_, word), _)| *word == w)
                .map(|((m, _), c)| (m.clone(), c.clone())),
        )
    }

    pub fn involves(&self, g: Gen) -> bool {
        self.terms.keys().any(|(m, w)| m.contains(g) || w.contains(g))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(&self.sig, self.weight);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !same_signature(&self.sig, &other.sig) {
            return Err(Error::SignatureMismatch);
        }
        if self.is_zero() && self.weight != other.weight {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.weight != other.weight {
            return Err(Error::WeightMismatch { expected: self.weight, found: other.weight });
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    /// Product in the de Rham algebra: weights and degrees add.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if !same_signature(&self.sig, &other.sig) {
            return Err(Error::SignatureMismatch);
        }
        let sig = &self.sig;
        let mut out = Self::zero(sig, self.weight + other.weight);
        for ((m1, w1), c1) in &self.terms {
            let w1_odd = self.word_parity(w1);
            for ((m2, w2), c2) in &other.terms {
                // bring m2 in front of w1
                let mut neg = w1_odd && self.scalar_parity(m2);
                let Some((s, m)) = m1.mul(m2, |g| sig.is_odd(g)) else { continue };
                neg ^= s;
                let Some((s, w)) = w1.mul(w2, |g| !sig.is_odd(g)) else { continue };
                neg ^= s;
                out.add_term((m, w), apply_sign(neg, c1.clone() * c2.clone()));
            }
        }
        Ok(out)
    }

    /// Scalar multiple `a · self`.
    pub fn times_scalar(&self, a: &Element<F>) -> Result<Self> {
        Form::from_scalar(a).wedge(self)
    }

    /// The de Rham differential: weight +1, degree preserved.
    pub fn de_rham(&self) -> Self {
        let sig = &self.sig;
        let mut out = Self::zero(sig, self.weight + 1);
        for ((m, w), c) in &self.terms {
            let tail = Self::from_terms(sig, self.weight, [((Monomial::one(), w.clone()), c.clone())]);
            for &(g, _) in m.factors() {
                let Some((mult, neg, rest)) = m.left_derivative(g, |h| sig.is_odd(h)) else {
                    continue;
                };
                let coef = apply_sign(neg, F::from_i64(mult as i64));
                let partial = Self::from_terms(sig, 0, [((rest, Monomial::one()), coef)]);
                let piece = Self::d_gen(sig, g).wedge(&partial).and_then(|p| p.wedge(&tail));
                out = &out + &piece.expect("same signature");
            }
        }
        out
    }

    /// Expands the word of a term into its letter sequence.
    pub(crate) fn letters(w: &Monomial) -> Vec<Gen> {
        w.factors()
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n(g, e.max(0) as usize))
            .collect()
    }

    pub(crate) fn word_form(sig: &SignatureRef, letters: &[Gen]) -> Self {
        letters.iter().fold(Self::from_scalar(&Element::one(sig)), |acc, &g| {
            acc.wedge(&Self::d_gen(sig, g)).expect("same signature")
        })
    }

    pub fn rebase(&self, sig: &SignatureRef) -> Result<Self> {
        if !self.sig.is_prefix_of(sig) {
            return Err(Error::SignatureMismatch);
        }
        Ok(Self { sig: sig.clone(), weight: self.weight, terms: self.terms.clone() })
    }
}

impl<F: Field> fmt::Display for Form<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((m, w), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut parts = Vec::new();
            if !c.is_one() || (m.is_one() && w.is_one()) {
                parts.push(format!("({c})"));
            }
            if !m.is_one() {
                parts.push(m.display(&self.sig, "").to_string());
            }
            if !w.is_one() {
                parts.push(w.display(&self.sig, "d").to_string());
            }
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Form<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[w{}]({self})", self.weight)
    }
}

impl<F: Field> Add for &Form<F> {
    type Output = Form<F>;
    fn add(self, rhs: Self) -> Form<F> {
        self.try_add(rhs).expect("adding incompatible forms")
    }
}

impl<F: Field> Sub for &Form<F> {
    type Output = Form<F>;
    fn sub(self, rhs: Self) -> Form<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Neg for &Form<F> {
    type Output = Form<F>;
    fn neg(self) -> Form<F> {
        self.scale(&-F::one())
    }
}
