//! The symplectification `(A[t^{±1}], λ = tα)` of a contact model.

use crate::calculus::{pair, Differential, Form, VectorField};
use crate::check::CheckVerdict;
use crate::darboux::ContactInstance;
use crate::error::{Error, Result};
use crate::graded::{Element, Gen, GeneratorSpec, Point, SignatureRef};
use crate::scalar::Field;
use crate::verify::{check_contact_axioms, describe_contact, pairing_blocks, CheckReport, NamedCheck};

#[derive(Debug, Clone)]
pub struct Symplectification<F: Field> {
    /// The contact model, rebased onto the extended signature.
    pub base: ContactInstance<F>,
    pub signature: SignatureRef,
    pub t: Gen,
    pub d: Differential<F>,
    pub lambda: Form<F>,
    pub omega: Form<F>,
}

/// Adjoins an invertible `t` of degree 0 with `dt = 0` and sets `λ = tα`,
/// `ω = d_dR λ`. Refuses inputs that fail the contact axioms.
pub fn symplectify<F: Field>(inst: &ContactInstance<F>) -> Result<Symplectification<F>> {
    let failed: Vec<String> = check_contact_axioms(inst)?.into_iter().filter(|c| !c.pass).map(|c| c.name).collect();
    if !failed.is_empty() {
        return Err(Error::ContactAxiomsFail(failed.join(", ")));
    }
    let name = if inst.signature.lookup("t").is_ok() { "s" } else { "t" };
    let sig = inst.signature.extended([GeneratorSpec::invertible(name)])?;
    let t = sig.lookup(name)?;
    let d = inst.d.rebase(&sig)?;
    let alpha = inst.alpha.rebase(&sig)?;
    let lambda = alpha.times_scalar(&Element::var(&sig, t))?;
    let omega = lambda.de_rham();
    let kernel = inst
        .kernel
        .iter()
        .map(|k| Ok(crate::darboux::KernelField { label: k.label.clone(), field: k.field.rebase(&sig)? }))
        .collect::<Result<_>>()?;
    let base = ContactInstance {
        d: d.clone(),
        alpha,
        phi: inst.phi.as_ref().map(|p| p.rebase(&sig)).transpose()?,
        hamiltonian: inst.hamiltonian.as_ref().map(|h| h.rebase(&sig)).transpose()?,
        correction: inst.correction.as_ref().map(|c| c.rebase(&sig)).transpose()?,
        kernel,
        reeb: inst.reeb.rebase(&sig)?,
        signature: sig.clone(),
        ..inst.clone()
    };
    Ok(Symplectification { base, signature: sig, t, d, lambda, omega })
}

impl<F: Field> Symplectification<F> {
    pub fn virtual_dimension(&self) -> i64 {
        self.signature.euler_characteristic()
    }

    /// The lift of a point of the contact model to the fibre value `t`.
    pub fn lift(&self, p: &Point<F>, t: &F) -> Result<Point<F>> {
        if t.is_zero() {
            return Err(Error::TZero);
        }
        Ok(p.with(self.signature.name(self.t), t.clone()))
    }

    /// dλ = 0, ω = d_dR t ∧ α + t d_dR α, d_dR ω = 0.
    pub fn structural_checks(&self) -> Result<Vec<NamedCheck>> {
        let sig = &self.signature;
        let dl = self.d.apply_form_unchecked(&self.lambda)?;
        let te = Element::var(sig, self.t);
        let expected = Form::d_gen(sig, self.t)
            .wedge(&self.base.alpha)?
            .try_add(&self.base.alpha.de_rham().times_scalar(&te)?)?;
        let ddr = self.omega.de_rham();
        Ok(vec![
            NamedCheck::new("d_squared", self.d.check_d_squared()),
            NamedCheck::new("d_lambda", CheckVerdict::from_bool(dl.is_zero(), || format!("got {dl}"))),
            NamedCheck::new(
                "omega_formula",
                CheckVerdict::from_bool(expected == self.omega, || format!("{} != {expected}", self.omega)),
            ),
            NamedCheck::new("dR_omega", CheckVerdict::from_bool(ddr.is_zero(), || format!("got {ddr}"))),
        ])
    }

    /// Nondegeneracy of ω at each contact point lifted to fibre value `t`,
    /// split as: (1) ω on the contact kernel, (2) `∂_t` against the Reeb
    /// field pairs to ±1, (3) the kernel is ω-orthogonal to both, and the
    /// full graded pairing on kernel + {∂_t, R}.
    pub fn check_nondegenerate(&self, points: &[Point<F>], t: &F) -> Result<Vec<NamedCheck>> {
        if points.is_empty() {
            return Err(Error::NoPointsGiven);
        }
        let sig = &self.signature;
        let dt = VectorField::partial(sig, self.t);
        let reeb = &self.base.reeb;
        let kernel: Vec<(String, VectorField<F>)> =
            self.base.kernel.iter().map(|k| (k.label.clone(), k.field.clone())).collect();
        let mut all = kernel.clone();
        all.push(("d/dt".into(), dt.clone()));
        all.push(("reeb".into(), reeb.clone()));
        let (mut c1, mut c2, mut c3, mut full) = (None, None, None, None);
        for p in points {
            let q = self.lift(p, t)?;
            let at = format!("t={t}, point #{}", points.iter().position(|x| x == p).unwrap_or(0));
            if c1.is_none() {
                let blocks = pairing_blocks(&self.omega, self.base.k, &kernel, &q)?;
                c1 = blocks.iter().find(|b| !b.is_nondegenerate()).map(|b| format!("kernel block {} at {at}", b.matrix));
            }
            if c2.is_none() {
                let v = pair(&self.omega, &dt, reeb)?.evaluate(&q)?;
                if v.abs() != F::one() {
                    c2 = Some(format!("omega(d/dt, R) = {v} at {at}"));
                }
            }
            if c3.is_none() {
                'outer: for (l, k) in &kernel {
                    for (m, v) in [("d/dt", &dt), ("reeb", reeb)] {
                        let a = pair(&self.omega, k, v)?.evaluate(&q)?;
                        let b = pair(&self.omega, v, k)?.evaluate(&q)?;
                        if !a.is_zero() || !b.is_zero() {
                            c3 = Some(format!("omega({l}, {m}) = {a}, {b} at {at}"));
                            break 'outer;
                        }
                    }
                }
            }
            if full.is_none() {
                let blocks = pairing_blocks(&self.omega, self.base.k, &all, &q)?;
                full = blocks.iter().find(|b| !b.is_nondegenerate()).map(|b| {
                    format!("degree {} x {} block {} at {at}", b.degree, b.partner, b.matrix)
                });
            }
        }
        let mk = |name: &str, w: Option<String>| NamedCheck::new(name, CheckVerdict { pass: w.is_none(), witness: w });
        Ok(vec![
            mk("case1_kernel_block", c1),
            mk("case2_t_reeb_unit", c2),
            mk("case3_orthogonality", c3),
            mk("nondegenerate", full),
        ])
    }

    pub fn verify(&self, points: &[Point<F>], t: &F) -> Result<CheckReport> {
        let mut checks = self.structural_checks()?;
        checks.extend(self.check_nondegenerate(points, t)?);
        let lifted = points.iter().map(|p| self.lift(p, t)).collect::<Result<Vec<_>>>()?;
        let name = format!("symplectification of {}", describe_contact(&self.base));
        Ok(CheckReport::new(&crate::io::symplectification_to_json(self), name, self.virtual_dimension(), checks, &lifted))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::darboux::{build_contact, DarbouxLayout, DarbouxSpec};
    use crate::stack::{build_jet_instance, build_prequantum_instance};
    use crate::verify::{drop_y_term, sample_points};
    use crate::Q;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn k_minus_one_darboux() {
        let layout = DarbouxLayout::new(-1, vec![1]).unwrap();
        let h = Element::monomial(layout.signature(), q(1), &[("x0_1", 2)]).unwrap();
        let inst = build_contact(&DarbouxSpec::new(layout, h)).unwrap();
        assert_eq!(inst.virtual_dimension(), -1);
        let s = symplectify(&inst).unwrap();
        assert_eq!(s.virtual_dimension(), 0);
        let pts = sample_points(&inst.signature, 4, 3);
        for t in [q(1), q(-2), Q::new(1.into(), 3.into())] {
            let r = s.verify(&pts, &t).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert_eq!(s.check_nondegenerate(&pts, &q(0)).unwrap_err(), Error::TZero);
        assert_eq!(s.check_nondegenerate(&[], &q(1)).unwrap_err(), Error::NoPointsGiven);
        assert!(matches!(symplectify(&drop_y_term(&inst).unwrap()), Err(Error::ContactAxiomsFail(_))));
    }

    #[test]
    fn jets_and_prequantum() {
        let jet = build_jet_instance::<Q>(-2, 2).unwrap();
        let pre = build_prequantum_instance::<Q>(1, None).unwrap();
        for inst in [jet, pre] {
            let s = symplectify(&inst).unwrap();
            let r = s.verify(&sample_points(&inst.signature, 3, 5), &q(3)).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
