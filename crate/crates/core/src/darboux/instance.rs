use crate::calculus::{Differential, Form, VectorField};
use crate::graded::{Element, Gen, SignatureRef};
use crate::scalar::Field;

use super::layout::DarbouxLayout;

/// Where an instance came from; decides which structural checks apply.
#[derive(Debug, Clone)]
pub enum ModelKind {
    Darboux(DarbouxLayout),
    /// Shifted 1-jet space of affine space of dimension `dim`.
    Jet { n: i32, dim: usize },
    /// Trivial G_m-bundle over T*A^dim, optionally twisted.
    Prequantum { dim: usize, twisted: bool },
}

/// Which normal form the contact form is in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContactVariant {
    /// α = d_dR z + Σ y d_dR x, with −k dz = H + d[Σ(−1)^i i x y].
    Standard,
    /// α′ = d_dR z + φ/k, with −k dz = H.
    Alternative,
}

/// How φ is normalised in the emitted (H, φ) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PhiNormalization {
    /// φ = Σ [−i x d_dR y + (k+i) y d_dR x] (signs adjusted for even k).
    #[default]
    Standard,
    /// φ + d_dR c and H + d c with c = Σ(−1)^i i x y, so that φ = k Σ y d_dR x.
    Tautological,
}

#[derive(Debug, Clone)]
pub struct KernelField<F: Field> {
    pub label: String,
    pub field: VectorField<F>,
}

/// A contact Darboux model together with its kernel data.
#[derive(Debug, Clone)]
pub struct ContactInstance<F: Field> {
    pub signature: SignatureRef,
    pub k: i32,
    pub model: ModelKind,
    pub variant: ContactVariant,
    pub phi_normalization: PhiNormalization,
    pub d: Differential<F>,
    pub alpha: Form<F>,
    pub phi: Option<Form<F>>,
    pub hamiltonian: Option<Element<F>>,
    /// The element c = Σ(−1)^i i x y linking α to φ.
    pub correction: Option<Element<F>>,
    pub kernel: Vec<KernelField<F>>,
    pub reeb: VectorField<F>,
    /// Generators of the sub-cdga B (everything except Artin generators).
    pub sub_algebra_b: Vec<Gen>,
    pub artin: Vec<Gen>,
}

/// A symplectic Darboux model.
#[derive(Debug, Clone)]
pub struct SymplecticInstance<F: Field> {
    pub signature: SignatureRef,
    pub k: i32,
    pub model: ModelKind,
    pub phi_normalization: PhiNormalization,
    pub d: Differential<F>,
    pub omega0: Form<F>,
    pub phi: Form<F>,
    pub hamiltonian: Element<F>,
    pub sub_algebra_b: Vec<Gen>,
    pub artin: Vec<Gen>,
}

impl<F: Field> ContactInstance<F> {
    pub fn layout(&self) -> Option<&DarbouxLayout> {
        match &self.model {
            ModelKind::Darboux(l) => Some(l),
            _ => None,
        }
    }

    /// Number of kernel generators the model is supposed to have.
    pub fn expected_kernel_len(&self) -> usize {
        self.sub_algebra_b.len() - 1
    }

    pub fn virtual_dimension(&self) -> i64 {
        self.signature.euler_characteristic()
    }
}

impl<F: Field> SymplecticInstance<F> {
    pub fn layout(&self) -> Option<&DarbouxLayout> {
        match &self.model {
            ModelKind::Darboux(l) => Some(l),
            _ => None,
        }
    }

    pub fn virtual_dimension(&self) -> i64 {
        self.signature.euler_characteristic()
    }
}
