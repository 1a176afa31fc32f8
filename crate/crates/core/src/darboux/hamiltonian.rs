//! Hamiltonian data of a Darboux model: the master equation, the induced
//! differential, and the forms ω⁰ and φ.

use crate::calculus::{Differential, Form};
use crate::check::CheckVerdict;
use crate::error::{Error, Result};
use crate::graded::Element;
use crate::scalar::Field;

use super::layout::DarbouxLayout;
use super::shift::ShiftKind;

fn validate_hamiltonian<F: Field>(layout: &DarbouxLayout, h: &Element<F>) -> Result<()> {
    if !crate::graded::same_signature(layout.signature(), h.signature()) {
        return Err(Error::MalformedH("Hamiltonian is not over the model signature".into()));
    }
    let expected = layout.k() + 1;
    if !h.is_homogeneous_of(expected) {
        return Err(Error::WrongDegreeH { expected, found: h.to_string() });
    }
    Ok(())
}

/// The class-appropriate master-equation expression
/// `Σ ∂H/∂x · ∂H/∂y (+ ¼ Σ (∂H/∂z)²)`.
pub fn master_equation_sum<F: Field>(layout: &DarbouxLayout, h: &Element<F>) -> Result<Element<F>> {
    validate_hamiltonian(layout, h)?;
    let mut sum = Element::zero(layout.signature());
    for p in layout.pairs() {
        sum += &(&h.partial_derivative(p.x)? * &h.partial_derivative(p.y)?);
    }
    let quarter = F::from_frac(1, 4);
    for &z in layout.middle() {
        let dz = h.partial_derivative(z)?;
        sum += &(&dz * &dz).scale(&quarter);
    }
    Ok(sum)
}

pub fn master_equation_verdict<F: Field>(layout: &DarbouxLayout, h: &Element<F>) -> Result<CheckVerdict> {
    let sum = master_equation_sum(layout, h)?;
    Ok(CheckVerdict::from_bool(sum.is_zero(), || format!("master equation sum = {sum}")))
}

/// Internal differential determined by `H` on the symplectic generators:
/// `dx^{-i} = s_i ∂H/∂y^{k+i}` (i > 0), `dy^{k+i} = ∂H/∂x^{-i}`,
/// `dz_mid = ½ ∂H/∂z_mid`, and zero on degree-0 generators.
pub fn hamiltonian_differential<F: Field>(
    layout: &DarbouxLayout,
    h: &Element<F>,
) -> Result<Differential<F>> {
    validate_hamiltonian(layout, h)?;
    let sig = layout.signature();
    let mut d = Differential::zero(sig);
    let kind = layout.shift().kind();
    for p in layout.pairs() {
        if p.i > 0 {
            // even shifts need the same (-1)^{i+1} that φ carries on y d_dR x
            let sx = F::from_i64(y_dx_sign(kind, p.i));
            d.set_image(p.x, h.partial_derivative(p.y)?.scale(&sx))?;
        }
        d.set_image(p.y, h.partial_derivative(p.x)?)?;
    }
    let half = F::from_frac(1, 2);
    for &z in layout.middle() {
        d.set_image(z, h.partial_derivative(z)?.scale(&half))?;
    }
    Ok(d)
}

/// `(-1)^{i+1}` for even shifts, `1` for odd ones: the coefficient sign of
/// `y d_dR x` in φ and in the contact form.
pub(crate) fn y_dx_sign(kind: ShiftKind, i: usize) -> i64 {
    match kind {
        ShiftKind::Odd => 1,
        _ if i.is_multiple_of(2) => -1,
        _ => 1,
    }
}

/// ω⁰ = Σ d_dR x d_dR y (+ Σ d_dR z d_dR z).
pub fn symplectic_form<F: Field>(layout: &DarbouxLayout) -> Form<F> {
    let sig = layout.signature();
    let mut omega = Form::zero(sig, 2);
    for p in layout.pairs() {
        omega = &omega + &Form::d_gen(sig, p.x).wedge(&Form::d_gen(sig, p.y)).expect("same signature");
    }
    for &z in layout.middle() {
        omega = &omega + &Form::d_gen(sig, z).wedge(&Form::d_gen(sig, z)).expect("same signature");
    }
    omega
}

/// φ = Σ [-i x d_dR y + s_i (k+i) y d_dR x] (+ k Σ z d_dR z).
pub fn phi_form<F: Field>(layout: &DarbouxLayout) -> Form<F> {
    let sig = layout.signature();
    let k = layout.k() as i64;
    let kind = layout.shift().kind();
    let mut phi = Form::zero(sig, 1);
    for p in layout.pairs() {
        let i = p.i as i64;
        let x = Element::var(sig, p.x);
        let y = Element::var(sig, p.y);
        let a = Form::d_gen(sig, p.y).times_scalar(&x.scale(&F::from_i64(-i))).expect("same signature");
        let b = Form::d_gen(sig, p.x)
            .times_scalar(&y.scale(&F::from_i64(y_dx_sign(kind, p.i) * (k + i))))
            .expect("same signature");
        phi = &(&phi + &a) + &b;
    }
    for &z in layout.middle() {
        let zf = Element::var(sig, z).scale(&F::from_i64(k));
        phi = &phi + &Form::d_gen(sig, z).times_scalar(&zf).expect("same signature");
    }
    phi
}

/// The exactness correction `Σ (-1)^i i x y` relating φ to the contact form.
pub fn correction_term<F: Field>(layout: &DarbouxLayout) -> Element<F> {
    let sig = layout.signature();
    let mut c = Element::zero(sig);
    for p in layout.pairs() {
        let coef = if p.i % 2 == 0 { p.i as i64 } else { -(p.i as i64) };
        c += &(&Element::var(sig, p.x) * &Element::var(sig, p.y)).scale(&F::from_i64(coef));
    }
    c
}
