use crate::calculus::Form;
use crate::darboux::ContactInstance;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Removes the first term of α whose letter is `d_dR x` for an `x` paired
/// with a `y`, leaving d and the kernel fields untouched.
pub fn drop_y_term<F: Field>(inst: &ContactInstance<F>) -> Result<ContactInstance<F>> {
    let layout = inst.layout().ok_or_else(|| Error::Parse("not a Darboux model".into()))?;
    let pair = layout.pairs().first().ok_or_else(|| Error::Parse("model has no Darboux pairs".into()))?;
    let sig = &inst.signature;
    let term = Form::d_gen(sig, pair.x).times_scalar(&inst.alpha.component(pair.x))?;
    Ok(ContactInstance { alpha: &inst.alpha - &term, ..inst.clone() })
}

/// Adds an arbitrary 1-form to α.
pub fn tamper_alpha<F: Field>(inst: &ContactInstance<F>, delta: &Form<F>) -> Result<ContactInstance<F>> {
    Ok(ContactInstance { alpha: inst.alpha.try_add(delta)?, ..inst.clone() })
}
