//! Contact and symplectic Darboux models in every shift class.

mod build;
mod hamiltonian;
mod instance;
mod layout;
mod random;
mod shift;

pub use build::{
    build_alternative_contact_form, build_contact, build_symplectic, check_master_equation,
    extend_with_artin_generators, ArtinExtension, DarbouxSpec,
};
pub use hamiltonian::{
    correction_term, hamiltonian_differential, master_equation_sum, master_equation_verdict,
    phi_form, symplectic_form,
};
pub use instance::{
    ContactInstance, ContactVariant, KernelField, ModelKind, PhiNormalization, SymplecticInstance,
};
pub use layout::{DarbouxLayout, Pair};
pub use random::{random_hamiltonian, random_solution};
pub use shift::{ShiftClass, ShiftKind};
