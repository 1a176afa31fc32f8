use rand::Rng;

use crate::graded::{Element, Monomial};
use crate::scalar::Field;

use super::hamiltonian::master_equation_sum;
use super::layout::DarbouxLayout;

/// A random homogeneous `H` of degree `k + 1`: one to three monomials with
/// exponents at most 2 and integer coefficients in `[-3, 3]`. No attempt is
/// made to satisfy the master equation.
pub fn random_hamiltonian<F: Field, R: Rng>(layout: &DarbouxLayout, rng: &mut R) -> Element<F> {
    let sig = layout.signature();
    let monos = sig.monomials_of_degree(layout.k() + 1, 2);
    let mut h = Element::zero(sig);
    if monos.is_empty() {
        return h;
    }
    for _ in 0..rng.gen_range(1..4) {
        let f = &monos[rng.gen_range(0..monos.len())];
        let (neg, m) = Monomial::from_factors(sig, f).expect("generated from the signature");
        let Some(m) = m else { continue };
        let c: i64 = rng.gen_range(-3..=3);
        h.add_term(m, F::from_i64(if neg { -c } else { c }));
    }
    h
}

/// Draws random Hamiltonians until one satisfies the master equation,
/// giving up after `tries` attempts (the zero Hamiltonian is returned then).
pub fn random_solution<F: Field, R: Rng>(layout: &DarbouxLayout, rng: &mut R, tries: usize) -> Element<F> {
    for _ in 0..tries {
        let h: Element<F> = random_hamiltonian(layout, rng);
        if h.is_zero() {
            continue;
        }
        if master_equation_sum(layout, &h).map(|s| s.is_zero()).unwrap_or(false) {
            return h;
        }
    }
    Element::zero(layout.signature())
}
