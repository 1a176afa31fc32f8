//! Two global contact models used as test beds: shifted 1-jet spaces and
//! (twisted) prequantum G_m-bundles over T*A^n.

use crate::calculus::{Differential, Form, VectorField};
use crate::darboux::{ContactInstance, ContactVariant, KernelField, ModelKind, PhiNormalization};
use crate::error::{Error, Result};
use crate::graded::{make_algebra, Element, GeneratorSpec, SignatureRef};
use crate::scalar::Field;

fn kernel_field<F: Field>(sig: &SignatureRef, label: &str, field: VectorField<F>) -> KernelField<F> {
    KernelField { label: format!("ker[{label}]"), field: field.rebase(sig).expect("same signature") }
}

/// `J¹(A^m)` shifted by `n ≤ 0`: coordinates `x_j` in degree 0, `p_j` and
/// `z` in degree `n`, with `α = -d_dR z + Σ p_j d_dR x_j` and `d = 0`.
pub fn build_jet_instance<F: Field>(n: i32, m0: usize) -> Result<ContactInstance<F>> {
    if n > 0 {
        return Err(Error::PositiveShift(n));
    }
    if m0 == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut gens: Vec<GeneratorSpec> = (1..=m0).map(|j| GeneratorSpec::new(format!("x_{j}"), 0)).collect();
    gens.extend((1..=m0).map(|j| GeneratorSpec::new(format!("p_{j}"), n)));
    gens.push(GeneratorSpec::new("z", n));
    let sig = make_algebra(gens)?;
    let z = sig.lookup("z")?;
    let dz = VectorField::partial(&sig, z);
    let mut alpha = -&Form::d_gen(&sig, z);
    let mut kernel = Vec::new();
    for j in 1..=m0 {
        let x = sig.lookup(&format!("x_{j}"))?;
        let p = sig.lookup(&format!("p_{j}"))?;
        let pe = Element::var(&sig, p);
        alpha = &alpha + &Form::d_gen(&sig, x).times_scalar(&pe)?;
        kernel.push(kernel_field(&sig, sig.name(p), VectorField::partial(&sig, p)));
        let fx = VectorField::partial(&sig, x).try_add(&dz.times_scalar(&pe)?)?;
        kernel.push(kernel_field(&sig, sig.name(x), fx));
    }
    Ok(ContactInstance {
        k: n,
        model: ModelKind::Jet { n, dim: m0 },
        variant: ContactVariant::Standard,
        phi_normalization: PhiNormalization::Standard,
        d: Differential::zero(&sig),
        alpha,
        phi: None,
        hamiltonian: None,
        correction: None,
        kernel,
        reeb: dz.scale(&-F::one()),
        sub_algebra_b: sig.gens().collect(),
        artin: Vec::new(),
        signature: sig,
    })
}

/// Signature of the prequantum model: `x_j`, `p_j` in degree 0 and the
/// invertible fibre coordinate `t`.
pub fn prequantum_signature(m0: usize) -> Result<SignatureRef> {
    if m0 == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut gens: Vec<GeneratorSpec> = (1..=m0).map(|j| GeneratorSpec::new(format!("x_{j}"), 0)).collect();
    gens.extend((1..=m0).map(|j| GeneratorSpec::new(format!("p_{j}"), 0)));
    gens.push(GeneratorSpec::invertible("t"));
    make_algebra(gens)
}

/// `T*A^m × G_m` with `α = Σ p_j d_dR x_j + τ + t⁻¹ d_dR t`, where the
/// optional twist `τ` is a closed 1-form in the `x` coordinates alone.
pub fn build_prequantum_instance<F: Field>(m0: usize, twist: Option<&Form<F>>) -> Result<ContactInstance<F>> {
    let sig = prequantum_signature(m0)?;
    let t = sig.lookup("t")?;
    let xs: Vec<_> = (1..=m0).map(|j| sig.lookup(&format!("x_{j}"))).collect::<Result<_>>()?;
    let ps: Vec<_> = (1..=m0).map(|j| sig.lookup(&format!("p_{j}"))).collect::<Result<_>>()?;
    let tau = match twist {
        None => Form::zero(&sig, 1),
        Some(tw) => {
            let tw = tw.rebase(&sig).map_err(|_| Error::TwistNotClosed("twist is over another signature".into()))?;
            if tw.weight() != 1 {
                return Err(Error::TwistNotClosed(format!("twist has weight {}", tw.weight())));
            }
            if let Some(g) = sig.gens().find(|g| !xs.contains(g) && tw.involves(*g)) {
                return Err(Error::TwistNotClosed(format!("twist involves {}", sig.name(g))));
            }
            let dt = tw.de_rham();
            if !dt.is_zero() {
                return Err(Error::TwistNotClosed(format!("d_dR of twist is {dt}")));
            }
            tw
        }
    };
    let t_inv = Element::monomial(&sig, F::one(), &[("t", -1)])?;
    let mut alpha = Form::d_gen(&sig, t).times_scalar(&t_inv)?.try_add(&tau)?;
    let t_dt = VectorField::partial(&sig, t).times_scalar(&Element::var(&sig, t))?;
    let mut kernel = Vec::new();
    for (&x, &p) in xs.iter().zip(&ps) {
        let pe = Element::var(&sig, p);
        alpha = &alpha + &Form::d_gen(&sig, x).times_scalar(&pe)?;
        kernel.push(kernel_field(&sig, sig.name(p), VectorField::partial(&sig, p)));
        let coef = &pe + &tau.component(x);
        let fx = VectorField::partial(&sig, x).try_add(&t_dt.times_scalar(&coef)?.scale(&-F::one()))?;
        kernel.push(kernel_field(&sig, sig.name(x), fx));
    }
    Ok(ContactInstance {
        k: 0,
        model: ModelKind::Prequantum { dim: m0, twisted: !tau.is_zero() },
        variant: ContactVariant::Standard,
        phi_normalization: PhiNormalization::Standard,
        d: Differential::zero(&sig),
        alpha,
        phi: None,
        hamiltonian: None,
        correction: None,
        kernel,
        reeb: t_dt,
        sub_algebra_b: sig.gens().collect(),
        artin: Vec::new(),
        signature: sig,
    })
}
