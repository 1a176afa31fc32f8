use std::fmt;

use crate::error::{Error, Result};
use crate::graded::{same_signature, Element, Gen, SignatureRef};
use crate::scalar::Field;

/// A graded derivation of the algebra, determined by its generator images.
#[derive(Clone, PartialEq)]
pub struct VectorField<F: Field> {
    sig: SignatureRef,
    degree: i32,
    images: Vec<Element<F>>,
}

impl<F: Field> VectorField<F> {
    pub fn zero(sig: &SignatureRef, degree: i32) -> Self {
        Self { sig: sig.clone(), degree, images: vec![Element::zero(sig); sig.len()] }
    }

    pub fn new(
        sig: &SignatureRef,
        degree: i32,
        images: impl IntoIterator<Item = (Gen, Element<F>)>,
    ) -> Result<Self> {
        let mut v = Self::zero(sig, degree);
        for (g, img) in images {
            v.set_image(g, img)?;
        }
        Ok(v)
    }

    /// The coordinate field ∂/∂g, of degree `-deg g`.
    pub fn partial(sig: &SignatureRef, g: Gen) -> Self {
        let mut v = Self::zero(sig, -sig.degree(g));
        v.images[g.index()] = Element::one(sig);
        v
    }

    pub fn partial_named(sig: &SignatureRef, name: &str) -> Result<Self> {
        Ok(Self::partial(sig, sig.lookup(name)?))
    }

    pub fn set_image(&mut self, g: Gen, img: Element<F>) -> Result<()> {
        if !same_signature(&self.sig, img.signature()) {
            return Err(Error::SignatureMismatch);
        }
        let expected = self.sig.degree(g) + self.degree;
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

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn image(&self, g: Gen) -> &Element<F> {
        &self.images[g.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Element::is_zero)
    }

    /// v(f) = Σ_g v(g) · ∂f/∂g.
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

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !same_signature(&self.sig, &other.sig) {
            return Err(Error::SignatureMismatch);
        }
        if self.degree != other.degree && !other.is_zero() && !self.is_zero() {
            return Err(Error::ImageDegree {
                name: "<vector field>".into(),
                expected: self.degree,
                found: other.degree.to_string(),
            });
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let images = self.images.iter().zip(&other.images).map(|(a, b)| a + b).collect();
        Ok(Self { sig: self.sig.clone(), degree, images })
    }

    /// The field `a · v`, of degree `deg a + deg v`.
    pub fn times_scalar(&self, a: &Element<F>) -> Result<Self> {
        let da = a.degree().unwrap_or(0);
        let images = self.images.iter().map(|img| a.multiply(img)).collect::<Result<_>>()?;
        Ok(Self { sig: self.sig.clone(), degree: self.degree + da, images })
    }

    pub fn scale(&self, c: &F) -> Self {
        Self {
            sig: self.sig.clone(),
            degree: self.degree,
            images: self.images.iter().map(|i| i.scale(c)).collect(),
        }
    }

    pub fn rebase(&self, sig: &SignatureRef) -> Result<Self> {
        let mut v = Self::zero(sig, self.degree);
        for (i, img) in self.images.iter().enumerate() {
            v.images[i] = img.rebase(sig)?;
        }
        Ok(v)
    }
}

impl<F: Field> fmt::Display for VectorField<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in self.sig.gens() {
            let img = &self.images[g.index()];
            if img.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({img}) ∂/∂{}", self.sig.name(g))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for VectorField<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorField[{}]({self})", self.degree)
    }
}
