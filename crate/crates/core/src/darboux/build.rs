use crate::calculus::{Differential, Form, VectorField};
use crate::check::CheckVerdict;
use crate::error::{Error, Result};
use crate::graded::{Element, Gen, GeneratorSpec, SignatureRef};
use crate::scalar::Field;

use super::hamiltonian::{
    correction_term, hamiltonian_differential, master_equation_verdict, phi_form, symplectic_form,
    y_dx_sign,
};
use super::instance::{
    ContactInstance, ContactVariant, KernelField, ModelKind, PhiNormalization, SymplecticInstance,
};
use super::layout::DarbouxLayout;
use super::shift::ShiftKind;

/// Input data for a Darboux model.
#[derive(Debug, Clone)]
pub struct DarbouxSpec<F: Field> {
    pub layout: DarbouxLayout,
    pub hamiltonian: Element<F>,
    /// Number of Artin generators `w` of degree `k - 1` to append.
    pub artin_w: usize,
    /// Images `dw`; empty means all zero.
    pub dw: Vec<Element<F>>,
    pub phi_normalization: PhiNormalization,
}

impl<F: Field> DarbouxSpec<F> {
    pub fn new(layout: DarbouxLayout, hamiltonian: Element<F>) -> Self {
        Self { layout, hamiltonian, artin_w: 0, dw: Vec::new(), phi_normalization: PhiNormalization::Standard }
    }

    pub fn with_artin(mut self, n: usize, dw: Vec<Element<F>>) -> Self {
        self.artin_w = n;
        self.dw = dw;
        self
    }

    pub fn with_normalization(mut self, n: PhiNormalization) -> Self {
        self.phi_normalization = n;
        self
    }
}

pub fn check_master_equation<F: Field>(spec: &DarbouxSpec<F>) -> Result<CheckVerdict> {
    master_equation_verdict(&spec.layout, &spec.hamiltonian)
}

fn require_master_equation<F: Field>(spec: &DarbouxSpec<F>) -> Result<()> {
    let v = check_master_equation(spec)?;
    match v.witness {
        Some(w) if !v.pass => Err(Error::MasterEquationFails(w)),
        _ => Ok(()),
    }
}

/// `(H, φ)` in the requested normalisation, over the symplectic signature.
fn normalized_pair<F: Field>(
    spec: &DarbouxSpec<F>,
    d: &Differential<F>,
) -> Result<(Element<F>, Form<F>)> {
    let h = spec.hamiltonian.clone();
    let phi = phi_form(&spec.layout);
    match spec.phi_normalization {
        PhiNormalization::Standard => Ok((h, phi)),
        PhiNormalization::Tautological => {
            let c = correction_term(&spec.layout);
            let h = h.try_add(&d.apply(&c)?)?;
            let phi = phi.try_add(&Form::from_scalar(&c).de_rham())?;
            Ok((h, phi))
        }
    }
}

pub fn build_symplectic<F: Field>(spec: &DarbouxSpec<F>) -> Result<SymplecticInstance<F>> {
    require_master_equation(spec)?;
    let layout = &spec.layout;
    let d = hamiltonian_differential(layout, &spec.hamiltonian)?;
    let (hamiltonian, phi) = normalized_pair(spec, &d)?;
    let sig = layout.signature().clone();
    let inst = SymplecticInstance {
        sub_algebra_b: sig.gens().collect(),
        artin: Vec::new(),
        signature: sig,
        k: layout.k(),
        model: ModelKind::Darboux(layout.clone()),
        phi_normalization: spec.phi_normalization,
        omega0: symplectic_form(layout),
        d,
        phi,
        hamiltonian,
    };
    if spec.artin_w > 0 {
        inst.extend_with_artin_generators(spec.artin_w, spec.dw.clone())
    } else {
        Ok(inst)
    }
}

/// Kernel generators `∂_g - (α ⌟ ∂_g) ∂_z` for every generator of `gens`.
pub(crate) fn kernel_fields<F: Field>(
    sig: &SignatureRef,
    alpha: &Form<F>,
    z: Gen,
    gens: impl IntoIterator<Item = Gen>,
) -> Result<Vec<KernelField<F>>> {
    let dz = VectorField::partial(sig, z);
    gens.into_iter()
        .map(|g| {
            let a = alpha.component(g);
            let field = VectorField::partial(sig, g).try_add(&dz.times_scalar(&a)?.scale(&-F::one()))?;
            Ok(KernelField { label: format!("ker[{}]", sig.name(g)), field })
        })
        .collect()
}

pub fn build_contact<F: Field>(spec: &DarbouxSpec<F>) -> Result<ContactInstance<F>> {
    require_master_equation(spec)?;
    let layout = &spec.layout;
    let k = layout.k();
    let sig = layout.contact_signature()?;
    let z = sig.lookup("z")?;
    let d0 = hamiltonian_differential(layout, &spec.hamiltonian)?;
    let (hamiltonian, phi) = normalized_pair(spec, &d0)?;
    let c = correction_term(layout);

    let mut d = d0.rebase(&sig)?;
    let h = spec.hamiltonian.rebase(&sig)?;
    let c = c.rebase(&sig)?;
    let dz = h.try_add(&d.apply(&c)?)?.scale(&F::from_frac(-1, k as i64));
    d.set_image(z, dz)?;

    let kind = layout.shift().kind();
    let mut alpha = Form::d_gen(&sig, z);
    for p in layout.pairs() {
        let y = Element::var(&sig, p.y).scale(&F::from_i64(y_dx_sign(kind, p.i)));
        alpha = alpha.try_add(&Form::d_gen(&sig, p.x).times_scalar(&y)?)?;
    }
    for &m in layout.middle() {
        alpha = alpha.try_add(&Form::d_gen(&sig, m).times_scalar(&Element::var(&sig, m))?)?;
    }

    let others: Vec<Gen> = layout.signature().gens().collect();
    let kernel = kernel_fields(&sig, &alpha, z, others)?;
    let inst = ContactInstance {
        k,
        model: ModelKind::Darboux(layout.clone()),
        variant: ContactVariant::Standard,
        phi_normalization: spec.phi_normalization,
        d,
        alpha,
        phi: Some(phi.rebase(&sig)?),
        hamiltonian: Some(hamiltonian.rebase(&sig)?),
        correction: Some(c),
        kernel,
        reeb: VectorField::partial(&sig, z),
        sub_algebra_b: sig.gens().collect(),
        artin: Vec::new(),
        signature: sig,
    };
    if spec.artin_w > 0 {
        inst.extend_with_artin_generators(spec.artin_w, spec.dw.clone())
    } else {
        Ok(inst)
    }
}

/// Rewrites a standard odd-shift Darboux contact model in the form
/// `α′ = d_dR z + φ/k` with `-k dz = H`.
pub fn build_alternative_contact_form<F: Field>(inst: &ContactInstance<F>) -> Result<ContactInstance<F>> {
    let layout = inst.layout().ok_or(Error::UnsupportedClass)?;
    if layout.shift().kind() != ShiftKind::Odd || inst.variant != ContactVariant::Standard {
        return Err(Error::UnsupportedClass);
    }
    let sig = inst.signature.clone();
    let k = inst.k;
    let z = sig.lookup("z")?;
    let c = inst.correction.clone().ok_or(Error::UnsupportedClass)?;
    let mut h = inst.hamiltonian.clone().ok_or(Error::UnsupportedClass)?;
    if inst.phi_normalization == PhiNormalization::Tautological {
        h = &h - &inst.d.apply(&c)?;
    }
    let phi = phi_form::<F>(layout).rebase(&sig)?;
    let mut d = inst.d.clone();
    d.set_image(z, h.scale(&F::from_frac(-1, k as i64)))?;
    let alpha = Form::d_gen(&sig, z).try_add(&phi.scale(&F::from_frac(1, k as i64)))?;
    let others: Vec<Gen> = layout.signature().gens().collect();
    Ok(ContactInstance {
        variant: ContactVariant::Alternative,
        phi_normalization: PhiNormalization::Standard,
        kernel: kernel_fields(&sig, &alpha, z, others)?,
        d,
        alpha,
        phi: Some(phi),
        hamiltonian: Some(h),
        ..inst.clone()
    })
}

/// Signature with `n` further Artin generators of degree `k - 1` appended.
fn artin_extension(sig: &SignatureRef, k: i32, existing: usize, n: usize) -> Result<(SignatureRef, Vec<Gen>)> {
    let deg = k - 1;
    let names: Vec<String> = (existing + 1..=existing + n).map(|j| format!("w{}_{j}", -deg)).collect();
    let ext = sig.extended(names.iter().map(|s| GeneratorSpec::new(s.clone(), deg)))?;
    let gens = names.iter().map(|s| ext.lookup(s)).collect::<Result<_>>()?;
    Ok((ext, gens))
}

fn extend_differential<F: Field>(
    d: &Differential<F>,
    ext: &SignatureRef,
    new: &[Gen],
    dw: Vec<Element<F>>,
) -> Result<Differential<F>> {
    if !dw.is_empty() && dw.len() != new.len() {
        return Err(Error::ArtinImageCount { expected: new.len(), found: dw.len() });
    }
    let mut d = d.rebase(ext)?;
    for (&w, img) in new.iter().zip(dw) {
        d.set_image(w, img.transport(ext)?)?;
    }
    for &w in new {
        if !d.apply(d.image(w))?.is_zero() {
            return Err(Error::DSquaredFailsOnW(ext.name(w).to_string()));
        }
    }
    Ok(d)
}

/// Appending Artin generators `w` of degree `k - 1` with `dw` of degree `k`.
///
/// The images may be given over any signature whose generators they use
/// exist in the extension (matched by name); an empty list sets every `dw`
/// to zero.
pub trait ArtinExtension: Sized {
    type Scalar: Field;

    fn extend_with_artin_generators(&self, n: usize, dw: Vec<Element<Self::Scalar>>) -> Result<Self>;
}

impl<F: Field> ArtinExtension for ContactInstance<F> {
    type Scalar = F;

    fn extend_with_artin_generators(&self, n: usize, dw: Vec<Element<F>>) -> Result<Self> {
        let (ext, new) = artin_extension(&self.signature, self.k, self.artin.len(), n)?;
        let d = extend_differential(&self.d, &ext, &new, dw)?;
        let rebase_opt = |e: &Option<Element<F>>| e.as_ref().map(|e| e.rebase(&ext)).transpose();
        let kernel = self
            .kernel
            .iter()
            .map(|kf| Ok(KernelField { label: kf.label.clone(), field: kf.field.rebase(&ext)? }))
            .collect::<Result<_>>()?;
        let mut artin = self.artin.clone();
        artin.extend(new);
        Ok(Self {
            k: self.k,
            model: self.model.clone(),
            variant: self.variant,
            phi_normalization: self.phi_normalization,
            d,
            alpha: self.alpha.rebase(&ext)?,
            phi: self.phi.as_ref().map(|p| p.rebase(&ext)).transpose()?,
            hamiltonian: rebase_opt(&self.hamiltonian)?,
            correction: rebase_opt(&self.correction)?,
            kernel,
            reeb: self.reeb.rebase(&ext)?,
            sub_algebra_b: self.sub_algebra_b.clone(),
            artin,
            signature: ext,
        })
    }
}

impl<F: Field> ArtinExtension for SymplecticInstance<F> {
    type Scalar = F;

    fn extend_with_artin_generators(&self, n: usize, dw: Vec<Element<F>>) -> Result<Self> {
        let (ext, new) = artin_extension(&self.signature, self.k, self.artin.len(), n)?;
        let d = extend_differential(&self.d, &ext, &new, dw)?;
        let mut artin = self.artin.clone();
        artin.extend(new);
        Ok(Self {
            k: self.k,
            model: self.model.clone(),
            phi_normalization: self.phi_normalization,
            d,
            omega0: self.omega0.rebase(&ext)?,
            phi: self.phi.rebase(&ext)?,
            hamiltonian: self.hamiltonian.rebase(&ext)?,
            sub_algebra_b: self.sub_algebra_b.clone(),
            artin,
            signature: ext,
        })
    }
}

pub fn extend_with_artin_generators<M: ArtinExtension>(
    model: &M,
    n: usize,
    dw: Vec<Element<M::Scalar>>,
) -> Result<M> {
    model.extend_with_artin_generators(n, dw)
}
