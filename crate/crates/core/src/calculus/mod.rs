//! The de Rham algebra of a free graded-commutative algebra: forms, the two
//! differentials, vector fields and contraction.

mod differential;
mod form;
mod vector_field;

pub use differential::Differential;
pub use form::{Form, FormKey};
pub use vector_field::VectorField;

use crate::error::{Error, Result};
use crate::graded::{same_signature, Element};
use crate::scalar::Field;

/// Interior product `f ⌟ v`, a right derivation of weight -1 and internal
/// degree `deg v`.
///
/// On generators `d_dR g ⌟ v = v(g)` and scalars contract to zero. Passing
/// the contraction leftwards over a factor of Koszul parity `q` costs
/// `(-1)^{(deg v + 1)·q}`, so for a scalar coefficient `a`,
/// `(a · d_dR g) ⌟ v = a · v(g)` with no sign.
pub fn contract<F: Field>(v: &VectorField<F>, f: &Form<F>) -> Result<Form<F>> {
    if !same_signature(v.signature(), f.signature()) {
        return Err(Error::SignatureMismatch);
    }
    let sig = f.signature();
    if f.weight() == 0 {
        return Ok(Form::zero(sig, 0));
    }
    let contraction_odd = v.degree().rem_euclid(2) == 0;
    let mut out = Form::zero(sig, f.weight() - 1);
    for ((m, w), c) in f.terms() {
        let head = Form::from_scalar(&Element::from_terms(sig, [(m.clone(), c.clone())]));
        let letters = Form::<F>::letters(w);
        let mut suffix_odd = false;
        for r in (0..letters.len()).rev() {
            let g = letters[r];
            let img = v.image(g);
            if !img.is_zero() {
                let piece = head
                    .wedge(&Form::word_form(sig, &letters[..r]))?
                    .wedge(&Form::from_scalar(img))?
                    .wedge(&Form::word_form(sig, &letters[r + 1..]))?;
                let neg = contraction_odd && suffix_odd;
                out = &out + &if neg { -&piece } else { piece };
            }
            suffix_odd ^= !sig.is_odd(g);
        }
    }
    Ok(out)
}

/// `(f ⌟ u) ⌟ v` as a scalar element, for a 2-form `f`.
pub fn pair<F: Field>(f: &Form<F>, u: &VectorField<F>, v: &VectorField<F>) -> Result<Element<F>> {
    contract(v, &contract(u, f)?)?.to_scalar()
}
