use crate::check::CheckVerdict;
use crate::error::{Error, Result};
use crate::graded::{same_signature, Element, Gen, SignatureRef};
use crate::scalar::Field;

use super::form::Form;

/// The internal differential of a cdga: a degree +1 derivation given on
/// generators.
#[derive(Clone, PartialEq, Debug)]
pub struct Differential<F: Field> {
    sig: SignatureRef,
    images: Vec<Element<F>>,
}

impl<F: Field> Differential<F> {
    pub fn zero(sig: &SignatureRef) -> Self {
        Self { sig: sig.clone(), images: vec![Element::zero(sig); sig.len()] }
    }

    pub fn new(
        sig: &SignatureRef,
        images: impl IntoIterator<Item = (Gen, Element<F>)>,
    ) -> Result<Self> {
        let mut d = Self::zero(sig);
        for (g, img) in images {
            d.set_image(g, img)?;
        }
        Ok(d)
    }

    pub fn set_image(&mut self, g: Gen, img: Element<F>) -> Result<()> {
        if !same_signature(&self.sig, img.signature()) {
            return Err(Error::SignatureMismatch);
        }
        let expected = self.sig.degree(g) + 1;
        if !img.is_homogeneous_of(expected) {
            return Err(Error::ImageDegree {
                name: self.sig.name(g).to_string(),
                expected,
                found: img.to_string(),
            });
        }
        self.images[g.index()] = img;
        Ok(())
    }

    pub fn signature(&self) -> &SignatureRef {
        &self.sig
    }

    pub fn image(&self, g: Gen) -> &Element<F> {
        &self.images[g.index()]
    }

    pub fn images(&self) -> impl Iterator<Item = (Gen, &Element<F>)> {
        self.sig.gens().zip(self.images.iter())
    }

    /// d(f) = Σ_g d(g) · ∂f/∂g.
    pub fn apply(&self, f: &Element<F>) -> Result<Element<F>> {
        if !same_signature(&self.sig, f.signature()) {
            return Err(Error::SignatureMismatch);
        }
        let mut out = Element::zero(&self.sig);
        for g in self.sig.gens() {
            let img = &self.images[g.index()];
            if img.is_zero() || !f.involves(g) {
                continue;
            }
            out += &(img * &f.partial_derivative(g)?);
        }
        Ok(out)
    }

    /// Verdict naming the first generator on which d² ≠ 0.
    pub fn check_d_squared(&self) -> CheckVerdict {
        for g in self.sig.gens() {
            match self.apply(&self.images[g.index()]) {
                Ok(dd) if dd.is_zero() => {}
                Ok(dd) => {
                    return CheckVerdict::fail(format!("d(d({})) = {dd}", self.sig.name(g)));
                }
                Err(e) => return CheckVerdict::fail(e.to_string()),
            }
        }
        CheckVerdict::pass()
    }

    pub fn first_d_squared_failure(&self) -> Option<Gen> {
        self.sig
            .gens()
            .find(|&g| !self.apply(&self.images[g.index()]).map(|e| e.is_zero()).unwrap_or(false))
    }

    /// Extension of d to the de Rham algebra with d(d_dR g) = -d_dR(dg).
    /// Fails if d² ≠ 0 on some generator.
    pub fn apply_form(&self, f: &Form<F>) -> Result<Form<F>> {
        if let Some(g) = self.first_d_squared_failure() {
            return Err(Error::InconsistentDifferential(self.sig.name(g).to_string()));
        }
        self.apply_form_unchecked(f)
    }

    /// As [`Self::apply_form`] without validating d² = 0 first.
    pub fn apply_form_unchecked(&self, f: &Form<F>) -> Result<Form<F>> {
        if !same_signature(&self.sig, f.signature()) {
            return Err(Error::SignatureMismatch);
        }
        let sig = &self.sig;
        let mut out = Form::zero(sig, f.weight());
        for ((m, w), c) in f.terms() {
            let scalar = Element::from_terms(sig, [(m.clone(), c.clone())]);
            let letters = Form::<F>::letters(w);
            let word = Form::word_form(sig, &letters);
            // d(m) · w
            let dm = self.apply(&scalar)?;
            out = &out + &Form::from_scalar(&dm).wedge(&word)?;
            // (-1)^{|m|} m · d(w), with d(w) expanded letter by letter
            let mut neg = f.scalar_parity(m);
            for r in 0..letters.len() {
                let g = letters[r];
                let d_letter = Form::from_scalar(&self.images[g.index()]).de_rham().scale(&-F::one());
                let piece = Form::from_scalar(&scalar)
                    .wedge(&Form::word_form(sig, &letters[..r]))?
                    .wedge(&d_letter)?
                    .wedge(&Form::word_form(sig, &letters[r + 1..]))?;
                out = &out + &if neg { -&piece } else { piece };
                // letter d_dR g has parity deg g + 1
                neg ^= !sig.is_odd(g);
            }
        }
        Ok(out)
    }

    pub fn rebase(&self, sig: &SignatureRef) -> Result<Self> {
        let mut d = Self::zero(sig);
        for (i, img) in self.images.iter().enumerate() {
            d.images[i] = img.rebase(sig)?;
        }
        Ok(d)
    }
}

