//! Machine checks for contact and symplectic models: the contact axioms,
//! the form identities, and pointwise nondegeneracy of the pairing.

mod mutation;
mod pairing;
mod report;
mod sample;
mod vdim;

pub use mutation::{drop_y_term, tamper_alpha};
pub use pairing::{coordinate_fields, full_matrix, pairing_blocks, BlockSummary, PairingBlock};
pub use report::{json_digest, CheckReport, NamedCheck};
pub use sample::{sample_points, COORDINATE_BOUND};
pub use vdim::{vdim_row, vdim_table, VdimRow};

use crate::calculus::{contract, Form, VectorField};
use crate::check::CheckVerdict;
use crate::darboux::{master_equation_verdict, ContactInstance, ContactVariant, ModelKind, PhiNormalization, SymplecticInstance};
use crate::error::{Error, Result};
use crate::graded::{Element, Point, SignatureRef};
use crate::scalar::Field;

/// Name of the pointwise nondegeneracy check. Only the minimal convention
/// (the pairing restricted to the generators of the sub-cdga B) is tested.
pub const NONDEGENERATE: &str = "nondegenerate (minimal-convention)";

pub fn virtual_dimension(sig: &SignatureRef) -> i64 {
    sig.euler_characteristic()
}

fn eq_check<F: Field>(name: &str, lhs: &Form<F>, rhs: &Form<F>) -> NamedCheck {
    NamedCheck::new(name, CheckVerdict::from_bool(lhs == rhs, || format!("{lhs} != {rhs}")))
}

fn zero_check(name: &str, value: &impl ToString, is_zero: bool) -> NamedCheck {
    NamedCheck::new(name, CheckVerdict::from_bool(is_zero, || format!("got {}", value.to_string())))
}

pub fn describe_contact<F: Field>(inst: &ContactInstance<F>) -> String {
    let mut s = match &inst.model {
        ModelKind::Darboux(l) => format!("darboux contact k={} m={:?}", l.k(), l.multiplicities()),
        ModelKind::Jet { n, dim } => format!("jet n={n} dim={dim}"),
        ModelKind::Prequantum { dim, twisted } => {
            format!("prequantum dim={dim}{}", if *twisted { " twisted" } else { "" })
        }
    };
    if inst.variant == ContactVariant::Alternative {
        s.push_str(" alt-form");
    }
    if inst.phi_normalization == PhiNormalization::Tautological {
        s.push_str(" phi=tautological");
    }
    if !inst.artin.is_empty() {
        s.push_str(&format!(" artin_w={}", inst.artin.len()));
    }
    s
}

/// d² = 0, dα = 0, α(R) = 1, ι_R d_dR α = 0, and the kernel fields
/// annihilate α and have the expected count.
pub fn check_contact_axioms<F: Field>(inst: &ContactInstance<F>) -> Result<Vec<NamedCheck>> {
    let sig = &inst.signature;
    let mut out = vec![NamedCheck::new("d_squared", inst.d.check_d_squared())];
    let da = inst.d.apply_form_unchecked(&inst.alpha)?;
    out.push(zero_check("d_alpha", &da, da.is_zero()));
    let ra = contract(&inst.reeb, &inst.alpha)?;
    out.push(eq_check("reeb_normalized", &ra, &Form::from_scalar(&Element::one(sig))));
    let rd = contract(&inst.reeb, &inst.alpha.de_rham())?;
    out.push(zero_check("reeb_in_radical", &rd, rd.is_zero()));
    let mut bad = Vec::new();
    for kf in &inst.kernel {
        let v = contract(&kf.field, &inst.alpha)?;
        if !v.is_zero() {
            bad.push(format!("{} gives {v}", kf.label));
        }
    }
    out.push(NamedCheck::new(
        "kernel_annihilates_alpha",
        CheckVerdict::from_bool(bad.is_empty(), || bad.join("; ")),
    ));
    let (n, want) = (inst.kernel.len(), inst.expected_kernel_len());
    out.push(NamedCheck::new(
        "kernel_count",
        CheckVerdict::from_bool(n == want, || format!("{n} kernel fields, expected {want}")),
    ));
    Ok(out)
}

fn artin_check<F: Field>(
    sig: &SignatureRef,
    d: &crate::calculus::Differential<F>,
    k: i32,
    artin: &[crate::graded::Gen],
) -> Result<NamedCheck> {
    let mut bad = Vec::new();
    for &w in artin {
        if sig.degree(w) != k - 1 {
            bad.push(format!("{} has degree {}", sig.name(w), sig.degree(w)));
        } else if !d.apply(d.image(w))?.is_zero() {
            bad.push(format!("d(d({})) != 0", sig.name(w)));
        }
    }
    Ok(NamedCheck::new("artin_block", CheckVerdict::from_bool(bad.is_empty(), || bad.join("; "))))
}

/// For Darboux models: dH = 0, d_dR H + dφ = 0, d_dR φ = k d_dR α, and
/// k(α - d_dR z) - φ = d_dR c (or 0 once the correction is absorbed).
pub fn check_form_identities<F: Field>(inst: &ContactInstance<F>) -> Result<Vec<NamedCheck>> {
    let (Some(h), Some(phi)) = (&inst.hamiltonian, &inst.phi) else { return Ok(Vec::new()) };
    let k = F::from_i64(inst.k as i64);
    let mut out = Vec::new();
    let dh = inst.d.apply(h)?;
    out.push(zero_check("dH", &dh, dh.is_zero()));
    let closure = Form::from_scalar(h).de_rham().try_add(&inst.d.apply_form_unchecked(phi)?)?;
    out.push(zero_check("dR_H_plus_d_phi", &closure, closure.is_zero()));
    out.push(eq_check("dR_phi_eq_k_dR_alpha", &phi.de_rham(), &inst.alpha.de_rham().scale(&k)));
    let z = inst.signature.lookup("z")?;
    let lhs = (&inst.alpha - &Form::d_gen(&inst.signature, z)).scale(&k);
    let lhs = &lhs - phi;
    let absorbed =
        inst.variant == ContactVariant::Alternative || inst.phi_normalization == PhiNormalization::Tautological;
    let rhs = match (&inst.correction, absorbed) {
        (Some(c), false) => Form::from_scalar(c).de_rham(),
        _ => Form::zero(&inst.signature, 1),
    };
    out.push(eq_check("alpha_phi_relation", &lhs, &rhs));
    Ok(out)
}

/// Kernel fields of the contact form as labelled fields.
fn kernel_as_fields<F: Field>(inst: &ContactInstance<F>) -> Vec<(String, VectorField<F>)> {
    inst.kernel.iter().map(|k| (k.label.clone(), k.field.clone())).collect()
}

/// Pairing blocks of `d_dR α` on the kernel fields at one point.
pub fn contact_pairing_blocks<F: Field>(inst: &ContactInstance<F>, point: &Point<F>) -> Result<Vec<PairingBlock<F>>> {
    pairing_blocks(&inst.alpha.de_rham(), inst.k, &kernel_as_fields(inst), point)
}

fn blocks_verdict<F: Field>(blocks: &[PairingBlock<F>], point: &Point<F>) -> Option<String> {
    blocks.iter().find(|b| !b.is_nondegenerate()).map(|b| {
        let det = b.matrix.determinant().map_or_else(|| "n/a (not square)".to_string(), |d| d.to_string());
        format!(
            "degree {} x {} block {} singular (det {det}) at {}",
            b.degree,
            b.partner,
            b.matrix,
            render_point(point)
        )
    })
}

fn render_point<F: Field>(p: &Point<F>) -> String {
    let parts: Vec<String> = p.values().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Nondegeneracy of `d_dR α` on the kernel at every point, plus the check
/// that on the coordinate fields of B its kernel is exactly the Reeb line.
pub fn check_nondegenerate<F: Field>(inst: &ContactInstance<F>, points: &[Point<F>]) -> Result<Vec<NamedCheck>> {
    if points.is_empty() {
        return Err(Error::NoPointsGiven);
    }
    let omega = inst.alpha.de_rham();
    let fields = kernel_as_fields(inst);
    let coords = coordinate_fields(&inst.signature, inst.sub_algebra_b.iter().copied());
    let mut kernel_fail = None;
    let mut reeb_fail = None;
    for p in points {
        if kernel_fail.is_none() {
            kernel_fail = blocks_verdict(&pairing_blocks(&omega, inst.k, &fields, p)?, p);
        }
        if reeb_fail.is_none() {
            reeb_fail = reeb_line_failure(inst, &omega, &coords, p)?;
        }
    }
    Ok(vec![
        NamedCheck::new(NONDEGENERATE, CheckVerdict { pass: kernel_fail.is_none(), witness: kernel_fail }),
        NamedCheck::new("tangent_kernel_is_reeb_line", CheckVerdict { pass: reeb_fail.is_none(), witness: reeb_fail }),
    ])
}

fn reeb_line_failure<F: Field>(
    inst: &ContactInstance<F>,
    omega: &Form<F>,
    coords: &[(String, VectorField<F>)],
    p: &Point<F>,
) -> Result<Option<String>> {
    let m = full_matrix(omega, coords, p)?;
    let r: Vec<F> = inst
        .sub_algebra_b
        .iter()
        .map(|&g| inst.reeb.image(g).evaluate(p))
        .collect::<Result<_>>()?;
    let ker = m.kernel().len();
    let in_kernel = m.mul_vec(&r).iter().all(|x| x.is_zero());
    let nonzero = r.iter().any(|x| !x.is_zero());
    Ok((ker != 1 || !in_kernel || !nonzero)
        .then(|| format!("kernel dimension {ker}, Reeb vector in kernel: {}, at {}", in_kernel && nonzero, render_point(p))))
}

/// Every check applicable to a contact instance, evaluated at `points`.
pub fn verify_contact<F: Field>(inst: &ContactInstance<F>, points: &[Point<F>]) -> Result<CheckReport> {
    let mut checks = Vec::new();
    if let (Some(l), Some(h)) = (inst.layout(), &inst.hamiltonian) {
        if inst.variant == ContactVariant::Standard && inst.phi_normalization == PhiNormalization::Standard {
            let h0 = h.transport(l.signature()).ok();
            if let Some(h0) = h0 {
                checks.push(NamedCheck::new("master_equation", master_equation_verdict(l, &h0)?));
            }
        }
    }
    checks.extend(check_contact_axioms(inst)?);
    checks.extend(check_form_identities(inst)?);
    checks.extend(check_nondegenerate(inst, points)?);
    let report = CheckReport::new(&crate::io::contact_to_json(inst), describe_contact(inst), inst.virtual_dimension(), checks, points);
    if inst.artin.is_empty() {
        return Ok(report);
    }
    Ok(report.with_artin_block(artin_check(&inst.signature, &inst.d, inst.k, &inst.artin)?))
}

pub fn describe_symplectic<F: Field>(inst: &SymplecticInstance<F>) -> String {
    let mut s = match &inst.model {
        ModelKind::Darboux(l) => format!("darboux symplectic k={} m={:?}", l.k(), l.multiplicities()),
        _ => "symplectic".to_string(),
    };
    if !inst.artin.is_empty() {
        s.push_str(&format!(" artin_w={}", inst.artin.len()));
    }
    s
}

pub fn verify_symplectic<F: Field>(inst: &SymplecticInstance<F>, points: &[Point<F>]) -> Result<CheckReport> {
    if points.is_empty() {
        return Err(Error::NoPointsGiven);
    }
    let k = F::from_i64(inst.k as i64);
    let mut checks = Vec::new();
    if let Some(l) = inst.layout() {
        if inst.phi_normalization == PhiNormalization::Standard {
            if let Ok(h0) = inst.hamiltonian.transport(l.signature()) {
                checks.push(NamedCheck::new("master_equation", master_equation_verdict(l, &h0)?));
            }
        }
    }
    checks.push(NamedCheck::new("d_squared", inst.d.check_d_squared()));
    let dw = inst.d.apply_form_unchecked(&inst.omega0)?;
    checks.push(zero_check("d_omega", &dw, dw.is_zero()));
    let ddr = inst.omega0.de_rham();
    checks.push(zero_check("dR_omega", &ddr, ddr.is_zero()));
    let dh = inst.d.apply(&inst.hamiltonian)?;
    checks.push(zero_check("dH", &dh, dh.is_zero()));
    let closure = Form::from_scalar(&inst.hamiltonian).de_rham().try_add(&inst.d.apply_form_unchecked(&inst.phi)?)?;
    checks.push(zero_check("dR_H_plus_d_phi", &closure, closure.is_zero()));
    checks.push(eq_check("dR_phi_eq_k_omega", &inst.phi.de_rham(), &inst.omega0.scale(&k)));
    let coords = coordinate_fields(&inst.signature, inst.sub_algebra_b.iter().copied());
    let mut fail = None;
    for p in points {
        fail = blocks_verdict(&pairing_blocks(&inst.omega0, inst.k, &coords, p)?, p);
        if fail.is_some() {
            break;
        }
    }
    checks.push(NamedCheck::new(NONDEGENERATE, CheckVerdict { pass: fail.is_none(), witness: fail }));
    let report = CheckReport::new(&crate::io::symplectic_to_json(inst), describe_symplectic(inst), inst.virtual_dimension(), checks, points);
    if inst.artin.is_empty() {
        return Ok(report);
    }
    Ok(report.with_artin_block(artin_check(&inst.signature, &inst.d, inst.k, &inst.artin)?))
}
