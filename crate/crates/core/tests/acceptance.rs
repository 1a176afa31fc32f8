//! Acceptance gate: every criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use darboux::calculus::{contract, Form};
use darboux::darboux::{
    build_alternative_contact_form, build_contact, build_symplectic, extend_with_artin_generators,
    random_solution, ContactInstance, DarbouxLayout, DarbouxSpec, ShiftClass, ShiftKind, SymplecticInstance,
};
use darboux::graded::{Element, Point};
use darboux::stack::{build_jet_instance, build_prequantum_instance, prequantum_signature};
use darboux::symplectification::symplectify;
use darboux::verify::{
    check_contact_axioms, drop_y_term, sample_points, tamper_alpha, vdim_table, verify_contact, verify_symplectic,
    CheckReport, NONDEGENERATE,
};
use darboux::Q;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Points per instance, seed, and the runtime budget for the whole gate.
const POINTS: usize = 10;
const SEED: u64 = 20;
const BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

struct GridEntry {
    layout: DarbouxLayout,
    h: Element<Q>,
    contact: ContactInstance<Q>,
    symplectic: SymplecticInstance<Q>,
}

fn multiplicities(len: usize) -> Vec<Vec<usize>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|v| {
                [1, 2].into_iter().map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect()
    })
}

/// Every layout with multiplicities in {1, 2} for the six shifts, each
/// with H = 0 and (when one exists) a nonzero master-equation solution.
fn grid() -> Result<Vec<GridEntry>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::new();
    for k in [-1, -3, -5, -4, -2, -6] {
        let len = ShiftClass::new(k).map_err(|e| e.to_string())?.multiplicity_len();
        for m in multiplicities(len) {
            let layout = DarbouxLayout::new(k, m).map_err(|e| e.to_string())?;
            let nonzero: Element<Q> = random_solution(&layout, &mut rng, 600);
            let mut hs = vec![Element::zero(layout.signature())];
            if !nonzero.is_zero() {
                hs.push(nonzero);
            }
            for h in hs {
                let spec = DarbouxSpec::new(layout.clone(), h.clone());
                let contact = build_contact(&spec).map_err(|e| format!("k={k}: {e}"))?;
                let symplectic = build_symplectic(&spec).map_err(|e| format!("k={k}: {e}"))?;
                out.push(GridEntry { layout: layout.clone(), h, contact, symplectic });
            }
        }
    }
    Ok(out)
}

fn label(e: &GridEntry) -> String {
    format!("k={} m={:?} H={}", e.layout.k(), e.layout.multiplicities(), e.h)
}

fn reports(grid: &[GridEntry]) -> Result<Vec<(CheckReport, CheckReport)>, String> {
    grid.iter()
        .map(|e| {
            let pc = sample_points(&e.contact.signature, POINTS, SEED);
            let ps = sample_points(&e.symplectic.signature, POINTS, SEED);
            let c = verify_contact(&e.contact, &pc).map_err(|x| x.to_string())?;
            let s = verify_symplectic(&e.symplectic, &ps).map_err(|x| x.to_string())?;
            Ok((c, s))
        })
        .collect()
}

fn passes(r: &CheckReport, names: &[&str]) -> Result<(), String> {
    for n in names {
        let c = r.check(n).ok_or_else(|| format!("{}: no check `{n}`", r.description))?;
        ensure(c.pass, || format!("{}: {n} failed: {:?}", r.description, c.witness))?;
    }
    Ok(())
}

fn criterion_1(grid: &[GridEntry], reps: &[(CheckReport, CheckReport)]) -> Outcome {
    let mut nonzero: BTreeMap<String, usize> = BTreeMap::new();
    for (e, (c, s)) in grid.iter().zip(reps) {
        passes(c, &["d_squared", "d_alpha", "dH", "dR_H_plus_d_phi", "dR_phi_eq_k_dR_alpha"])?;
        passes(s, &["d_squared", "dH", "dR_H_plus_d_phi", "dR_phi_eq_k_omega"])?;
        if !e.h.is_zero() {
            *nonzero.entry(format!("{:?}", e.layout.shift().kind())).or_default() += 1;
        }
    }
    ensure(nonzero.len() == 3, || format!("nonzero Hamiltonians found only for {nonzero:?}"))?;
    Ok(format!("{} instances, nonzero H per class {nonzero:?}", grid.len()))
}

fn criterion_2(grid: &[GridEntry], reps: &[(CheckReport, CheckReport)]) -> Outcome {
    for (e, (c, _)) in grid.iter().zip(reps) {
        passes(c, &["kernel_annihilates_alpha", "kernel_count", "reeb_normalized", "tangent_kernel_is_reeb_line"])?;
        let z = e.contact.signature.lookup("z").map_err(|x| x.to_string())?;
        ensure(e.contact.reeb == darboux::calculus::VectorField::partial(&e.contact.signature, z), || {
            format!("{}: Reeb field is not d/dz", label(e))
        })?;
    }
    Ok(format!("{} contact instances", grid.len()))
}

fn criterion_3(grid: &[GridEntry], reps: &[(CheckReport, CheckReport)]) -> Outcome {
    let mut flipped = 0;
    for (e, (c, s)) in grid.iter().zip(reps) {
        passes(c, &[NONDEGENERATE])?;
        passes(s, &[NONDEGENERATE])?;
        ensure(c.points.len() == POINTS, || format!("{}: {} points", label(e), c.points.len()))?;
        let bad = drop_y_term(&e.contact).map_err(|x| x.to_string())?;
        let r = verify_contact(&bad, &sample_points(&bad.signature, POINTS, SEED)).map_err(|x| x.to_string())?;
        let nd = r.check(NONDEGENERATE).ok_or("missing check")?;
        let singular = nd.witness.as_deref().is_some_and(|w| w.contains("singular"));
        ensure(!nd.pass && singular, || format!("{}: mutation not caught: {:?}", label(e), nd.witness))?;
        flipped += 1;
    }
    Ok(format!("{} instances x {POINTS} points; {flipped} mutations flipped to singular", grid.len()))
}

fn criterion_4(grid: &[GridEntry]) -> Outcome {
    let rows = vdim_table(&[-1, -3, -5, -4, -2, -6], 2).map_err(|e| e.to_string())?;
    for r in &rows {
        ensure(r.pass, || format!("k={}: {:?} / {:?} does not match `{}`", r.k, r.symplectic, r.contact, r.expected))?;
    }
    for e in grid {
        let (vs, vc) = (e.symplectic.virtual_dimension(), e.contact.virtual_dimension());
        match e.layout.shift().kind() {
            ShiftKind::Odd => ensure(vs == 0 && vc == -1, || format!("{}: vdim {vs}/{vc}", label(e)))?,
            ShiftKind::ZeroMod4 => ensure(vs % 2 == 0, || format!("{}: odd vdim {vs}", label(e)))?,
            ShiftKind::TwoMod4 => {}
        }
    }
    let two = |k: i32| rows.iter().find(|r| r.k == k).map(|r| r.symplectic.clone()).unwrap_or_default();
    Ok(format!("Odd 0/-1, ZeroMod4 even, TwoMod4 k=-2 realises {:?}, k=-6 realises {:?}", two(-2), two(-6)))
}

fn criterion_5(grid: &[GridEntry]) -> Outcome {
    let mut n = 0;
    for e in grid.iter().filter(|e| e.layout.shift().kind() == ShiftKind::Odd) {
        let alt = build_alternative_contact_form(&e.contact).map_err(|x| x.to_string())?;
        let k = q(e.layout.k() as i64);
        let lhs = (&e.contact.alpha - &alt.alpha).scale(&k);
        let c = e.contact.correction.as_ref().ok_or("no correction term")?;
        ensure(lhs == Form::from_scalar(c).de_rham(), || format!("{}: kα − kα′ = {lhs}", label(e)))?;
        if e.layout.k() == -1 {
            ensure(e.contact.alpha == alt.alpha, || format!("{}: α ≠ α′", label(e)))?;
        }
        let r = verify_contact(&alt, &sample_points(&alt.signature, POINTS, SEED)).map_err(|x| x.to_string())?;
        ensure(r.passed(), || format!("{}: alternative form fails\n{r}", label(e)))?;
        n += 1;
    }
    Ok(format!("{n} odd instances"))
}

fn verdicts(r: &CheckReport) -> Vec<(String, bool)> {
    r.checks.iter().map(|c| (c.name.clone(), c.pass)).collect()
}

fn criterion_6(grid: &[GridEntry], reps: &[(CheckReport, CheckReport)]) -> Outcome {
    let mut n = 0;
    for (e, (c, s)) in grid.iter().zip(reps) {
        let k = e.layout.k();
        for w in 1..=3usize {
            let shift = w as i64 * if (k - 1).rem_euclid(2) == 0 { 1 } else { -1 };
            let ec = extend_with_artin_generators(&e.contact, w, vec![]).map_err(|x| x.to_string())?;
            let es = extend_with_artin_generators(&e.symplectic, w, vec![]).map_err(|x| x.to_string())?;
            let rc = verify_contact(&ec, &sample_points(&ec.signature, POINTS, SEED)).map_err(|x| x.to_string())?;
            let rs =
                verify_symplectic(&es, &sample_points(&es.signature, POINTS, SEED)).map_err(|x| x.to_string())?;
            ensure(verdicts(&rc) == verdicts(c), || format!("{} +{w}w: contact verdicts changed", label(e)))?;
            ensure(verdicts(&rs) == verdicts(s), || format!("{} +{w}w: symplectic verdicts changed", label(e)))?;
            ensure(rc.vdim == c.vdim + shift && rs.vdim == s.vdim + shift, || {
                format!("{} +{w}w: vdim {} -> {}", label(e), c.vdim, rc.vdim)
            })?;
            ensure(rc.artin_block.as_ref().is_some_and(|b| b.pass), || format!("{}: artin block", label(e)))?;
            n += 1;
        }
    }
    Ok(format!("{n} extensions, verdicts unchanged, vdim shifted by n(-1)^(k-1)"))
}

fn criterion_7(grid: &[GridEntry]) -> Outcome {
    let mut n = 0;
    for e in grid {
        let s = symplectify(&e.contact).map_err(|x| format!("{}: {x}", label(e)))?;
        ensure(s.virtual_dimension() == e.contact.virtual_dimension() + 1, || format!("{}: vdim", label(e)))?;
        if e.layout.shift().kind() == ShiftKind::Odd {
            ensure(e.contact.virtual_dimension() == -1 && s.virtual_dimension() == 0, || {
                format!("{}: vdim {} -> {}", label(e), e.contact.virtual_dimension(), s.virtual_dimension())
            })?;
        }
        let pts = sample_points(&e.contact.signature, POINTS, SEED);
        for t in [q(1), q(2), q(-3)] {
            let r = s.verify(&pts, &t).map_err(|x| x.to_string())?;
            passes(&r, &["d_lambda", "omega_formula", "case1_kernel_block", "case2_t_reeb_unit", "case3_orthogonality", "nondegenerate"])?;
        }
        n += 1;
    }
    Ok(format!("{n} symplectifications at t in {{1, 2, -3}}"))
}

fn criterion_8() -> Outcome {
    let mut n = 0;
    for shift in [0, -1, -2] {
        for m0 in [1, 2] {
            let inst = build_jet_instance::<Q>(shift, m0).map_err(|e| e.to_string())?;
            let r = verify_contact(&inst, &sample_points(&inst.signature, POINTS, SEED)).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("jet n={shift} m0={m0}\n{r}"))?;
            n += 1;
        }
    }
    for m0 in [1, 2] {
        let sig = prequantum_signature(m0).map_err(|e| e.to_string())?;
        // d_dR(x_1^2 x_m0): a closed twist in the base variables
        let f = Element::monomial(&sig, q(1), &[("x_1", 2), (format!("x_{m0}").as_str(), 1)]).map_err(|e| e.to_string())?;
        let twist = Form::from_scalar(&f).de_rham();
        for tw in [None, Some(&twist)] {
            let inst = build_prequantum_instance(m0, tw).map_err(|e| e.to_string())?;
            let r = verify_contact(&inst, &sample_points(&inst.signature, POINTS, SEED)).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("prequantum m0={m0}\n{r}"))?;
            let one = Form::from_scalar(&Element::one(&inst.signature));
            ensure(contract(&inst.reeb, &inst.alpha).map_err(|e| e.to_string())? == one, || "α(t∂t) ≠ 1".into())?;
            let t = inst.signature.lookup("t").map_err(|e| e.to_string())?;
            let dt = Form::<Q>::d_gen(&inst.signature, t);
            ensure(dt.wedge(&dt).map_err(|e| e.to_string())?.is_zero(), || "(d_dR t)² ≠ 0".into())?;
            let log = Form::d_gen(&inst.signature, t)
                .times_scalar(&Element::monomial(&inst.signature, q(1), &[("t", -1)]).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            ensure(log.de_rham().is_zero(), || "d_dR(t⁻¹ d_dR t) ≠ 0".into())?;
            n += 1;
        }
    }
    Ok(format!("{n} jet/prequantum instances"))
}

/// The four pinned identities on every instance, and detection of the
/// natural wrong-sign variants.
fn criterion_9(grid: &[GridEntry]) -> Outcome {
    let mut caught = 0;
    let point = |inst: &ContactInstance<Q>| -> Vec<Point<Q>> { sample_points(&inst.signature, 2, SEED) };
    for e in grid {
        let checks = check_contact_axioms(&e.contact).map_err(|x| x.to_string())?;
        for name in ["d_alpha", "reeb_normalized", "kernel_annihilates_alpha"] {
            let c = checks.iter().find(|c| c.name == name).ok_or("missing check")?;
            ensure(c.pass, || format!("{}: {name} fails: {:?}", label(e), c.witness))?;
        }
        // wrong sign on dz
        let z = e.contact.signature.lookup("z").map_err(|x| x.to_string())?;
        let dz = e.contact.d.image(z).clone();
        if !dz.is_zero() {
            let mut bad = e.contact.clone();
            bad.d.set_image(z, -&dz).map_err(|x| x.to_string())?;
            let r = verify_contact(&bad, &point(&bad)).map_err(|x| x.to_string())?;
            ensure(!r.passed(), || format!("{}: flipped dz accepted", label(e)))?;
            caught += 1;
        }
        // wrong sign on each y d_dR x coefficient
        for p in e.layout.pairs() {
            let coef = e.contact.alpha.component(p.x);
            let delta = Form::d_gen(&e.contact.signature, p.x)
                .times_scalar(&coef.scale(&q(-2)))
                .map_err(|x| x.to_string())?;
            let bad = tamper_alpha(&e.contact, &delta).map_err(|x| x.to_string())?;
            let r = verify_contact(&bad, &point(&bad)).map_err(|x| x.to_string())?;
            ensure(!r.passed(), || format!("{}: flipped sign on y d x{} accepted", label(e), p.i))?;
            caught += 1;
        }
    }
    Ok(format!("pins hold on {} instances; {caught} sign variants rejected", grid.len()))
}

fn main() {
    let start = Instant::now();
    let grid = match grid() {
        Ok(g) => g,
        Err(e) => {
            println!("acceptance: grid construction failed: {e}");
            std::process::exit(1);
        }
    };
    let reps = match reports(&grid) {
        Ok(r) => r,
        Err(e) => {
            println!("acceptance: verification failed: {e}");
            std::process::exit(1);
        }
    };
    let criteria: Vec<Criterion> = vec![
        ("builder grid soundness", Box::new(|| criterion_1(&grid, &reps))),
        ("kernel and Reeb structure", Box::new(|| criterion_2(&grid, &reps))),
        ("pointwise nondegeneracy and mutation", Box::new(|| criterion_3(&grid, &reps))),
        ("virtual dimension table", Box::new(|| criterion_4(&grid))),
        ("alpha / alpha' equivalence", Box::new(|| criterion_5(&grid))),
        ("Artin invariance", Box::new(|| criterion_6(&grid, &reps))),
        ("symplectification", Box::new(|| criterion_7(&grid))),
        ("jet and prequantum examples", Box::new(criterion_8)),
        ("sign-convention pins", Box::new(|| criterion_9(&grid))),
    ];
    let mut failed = 0;
    println!("setup: {:.1}s", start.elapsed().as_secs_f64());
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    let elapsed = start.elapsed();
    let in_budget = elapsed <= BUDGET;
    println!(
        "runtime: {:.1}s (budget {}s) {}",
        elapsed.as_secs_f64(),
        BUDGET.as_secs(),
        if in_budget { "PASS" } else { "FAIL" }
    );
    if failed > 0 || !in_budget {
        std::process::exit(1);
    }
}
