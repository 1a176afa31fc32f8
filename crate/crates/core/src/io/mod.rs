//! JSON encodings of elements, forms, instances and specs. Coefficients are
//! exact rationals written as strings `"p/q"`.

mod expr;
#[cfg(test)]
mod tests;

pub use expr::parse_expression;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::calculus::{Differential, Form, VectorField};
use crate::darboux::{
    ContactInstance, ContactVariant, DarbouxLayout, DarbouxSpec, KernelField, ModelKind, PhiNormalization,
    SymplecticInstance,
};
use crate::error::{Error, Result};
use crate::graded::{make_algebra, Element, GeneratorSpec, SignatureRef};
use crate::scalar::Field;
use crate::symplectification::Symplectification;

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TermJson {
    coef: String,
    #[serde(default)]
    mono: Vec<(String, i32)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ElementJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gens: Option<Vec<GeneratorSpec>>,
    #[serde(default)]
    terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct FormTermJson {
    coef: String,
    #[serde(default)]
    mono: Vec<(String, i32)>,
    #[serde(default)]
    wedge: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct FormJson {
    weight: usize,
    #[serde(default)]
    terms: Vec<FormTermJson>,
}

fn from_value<T: for<'de> Deserialize<'de>>(v: &Value, what: &str) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| bad(format!("{what}: {e}")))
}

fn parse_coef<F: Field>(s: &str) -> Result<F> {
    s.trim().parse().map_err(|_| bad(format!("bad coefficient `{s}`")))
}

fn mono_json(sig: &SignatureRef, m: &crate::graded::Monomial) -> Vec<(String, i32)> {
    m.factors().iter().map(|&(g, e)| (sig.name(g).to_string(), e)).collect()
}

pub fn signature_to_json(sig: &SignatureRef) -> Value {
    serde_json::to_value(sig.generators()).expect("generators serialise")
}

pub fn signature_from_json(v: &Value) -> Result<SignatureRef> {
    make_algebra(from_value(v, "gens")?)
}

/// `{"terms":[{"coef","mono"}]}`, with `"gens"` when `with_gens` is set.
pub fn element_to_json<F: Field>(e: &Element<F>, with_gens: bool) -> Value {
    let sig = e.signature();
    let terms = e.terms().map(|(m, c)| TermJson { coef: c.to_string(), mono: mono_json(sig, m) }).collect();
    let gens = with_gens.then(|| sig.generators().to_vec());
    serde_json::to_value(ElementJson { gens, terms }).expect("element serialises")
}

/// Reads an element over `sig` from an object, a JSON-encoded object string,
/// or a polynomial expression string.
pub fn element_from_json<F: Field>(sig: &SignatureRef, v: &Value) -> Result<Element<F>> {
    if let Value::String(s) = v {
        let t = s.trim();
        if t.starts_with('{') {
            let inner: Value = serde_json::from_str(t).map_err(|e| bad(format!("element: {e}")))?;
            return element_from_json(sig, &inner);
        }
        return parse_expression(sig, t);
    }
    let ej: ElementJson = from_value(v, "element")?;
    let mut acc = Element::zero(sig);
    for t in ej.terms {
        let refs: Vec<(&str, i32)> = t.mono.iter().map(|(n, e)| (n.as_str(), *e)).collect();
        acc += &Element::monomial(sig, parse_coef(&t.coef)?, &refs)?;
    }
    Ok(acc)
}

/// Standalone element with its own `"gens"`.
pub fn element_with_gens_from_json<F: Field>(v: &Value) -> Result<Element<F>> {
    let gens = v.get("gens").ok_or_else(|| bad("element: missing gens"))?;
    element_from_json(&signature_from_json(gens)?, v)
}

pub fn form_to_json<F: Field>(f: &Form<F>) -> Value {
    let sig = f.signature();
    let terms = f
        .terms()
        .map(|((m, w), c)| FormTermJson {
            coef: c.to_string(),
            mono: mono_json(sig, m),
            wedge: Form::<F>::letters(w).into_iter().map(|g| sig.name(g).to_string()).collect(),
        })
        .collect();
    serde_json::to_value(FormJson { weight: f.weight(), terms }).expect("form serialises")
}

pub fn form_from_json<F: Field>(sig: &SignatureRef, v: &Value) -> Result<Form<F>> {
    let v = match v {
        Value::String(s) => serde_json::from_str(s).map_err(|e| bad(format!("form: {e}")))?,
        other => other.clone(),
    };
    let fj: FormJson = from_value(&v, "form")?;
    let mut acc = Form::zero(sig, fj.weight);
    for t in fj.terms {
        if t.wedge.len() != fj.weight {
            return Err(Error::WeightMismatch { expected: fj.weight, found: t.wedge.len() });
        }
        let refs: Vec<(&str, i32)> = t.mono.iter().map(|(n, e)| (n.as_str(), *e)).collect();
        let scalar = Element::monomial(sig, parse_coef(&t.coef)?, &refs)?;
        let letters = t.wedge.iter().map(|n| sig.lookup(n)).collect::<Result<Vec<_>>>()?;
        let term = Form::from_scalar(&scalar).wedge(&Form::word_form(sig, &letters))?;
        acc = acc.try_add(&term)?;
    }
    Ok(acc)
}

fn images_to_json<'a, F: Field + 'a>(
    sig: &SignatureRef,
    images: impl Iterator<Item = (crate::graded::Gen, &'a Element<F>)>,
) -> Value {
    let map: BTreeMap<String, Value> = images
        .filter(|(_, e)| !e.is_zero())
        .map(|(g, e)| (sig.name(g).to_string(), element_to_json(e, false)))
        .collect();
    serde_json::to_value(map).expect("map serialises")
}

fn images_from_json<F: Field>(sig: &SignatureRef, v: &Value) -> Result<Vec<(crate::graded::Gen, Element<F>)>> {
    let map = v.as_object().ok_or_else(|| bad("images must be an object"))?;
    map.iter().map(|(n, e)| Ok((sig.lookup(n)?, element_from_json(sig, e)?))).collect()
}

pub fn vector_field_to_json<F: Field>(v: &VectorField<F>) -> Value {
    let sig = v.signature();
    json!({
        "degree": v.degree(),
        "images": images_to_json(sig, sig.gens().map(|g| (g, v.image(g)))),
    })
}

pub fn vector_field_from_json<F: Field>(sig: &SignatureRef, v: &Value) -> Result<VectorField<F>> {
    let degree = v.get("degree").and_then(Value::as_i64).ok_or_else(|| bad("vector field: missing degree"))?;
    let mut f = VectorField::zero(sig, degree as i32);
    for (g, e) in images_from_json(sig, v.get("images").unwrap_or(&json!({})))? {
        f.set_image(g, e)?;
    }
    Ok(f)
}

pub fn differential_to_json<F: Field>(d: &Differential<F>) -> Value {
    images_to_json(d.signature(), d.images())
}

pub fn differential_from_json<F: Field>(sig: &SignatureRef, v: &Value) -> Result<Differential<F>> {
    let mut d = Differential::zero(sig);
    for (g, e) in images_from_json(sig, v)? {
        d.set_image(g, e)?;
    }
    Ok(d)
}

fn names(sig: &SignatureRef, gens: &[crate::graded::Gen]) -> Value {
    json!(gens.iter().map(|&g| sig.name(g)).collect::<Vec<_>>())
}

fn model_to_json(m: &ModelKind) -> Value {
    match m {
        ModelKind::Darboux(l) => json!({"kind": "darboux", "k": l.k(), "m": l.multiplicities()}),
        ModelKind::Jet { n, dim } => json!({"kind": "jet", "n": n, "dim": dim}),
        ModelKind::Prequantum { dim, twisted } => json!({"kind": "prequantum", "dim": dim, "twisted": twisted}),
    }
}

fn model_from_json(v: &Value) -> Result<ModelKind> {
    let int = |key: &str| v.get(key).and_then(Value::as_i64).ok_or_else(|| bad(format!("model: missing `{key}`")));
    match v.get("kind").and_then(Value::as_str) {
        Some("darboux") => {
            let m: Vec<usize> = from_value(v.get("m").unwrap_or(&Value::Null), "model.m")?;
            Ok(ModelKind::Darboux(DarbouxLayout::new(int("k")? as i32, m)?))
        }
        Some("jet") => Ok(ModelKind::Jet { n: int("n")? as i32, dim: int("dim")? as usize }),
        Some("prequantum") => Ok(ModelKind::Prequantum {
            dim: int("dim")? as usize,
            twisted: v.get("twisted").and_then(Value::as_bool).unwrap_or(false),
        }),
        other => Err(bad(format!("unknown model kind {other:?}"))),
    }
}

fn opt<T>(x: Option<T>, f: impl FnOnce(T) -> Value) -> Value {
    x.map_or(Value::Null, f)
}

pub fn contact_to_json<F: Field>(inst: &ContactInstance<F>) -> Value {
    let sig = &inst.signature;
    json!({
        "type": "contact",
        "model": model_to_json(&inst.model),
        "k": inst.k,
        "variant": match inst.variant { ContactVariant::Standard => "standard", ContactVariant::Alternative => "alternative" },
        "phi_normalization": normalization_name(inst.phi_normalization),
        "gens": signature_to_json(sig),
        "d": differential_to_json(&inst.d),
        "alpha": form_to_json(&inst.alpha),
        "phi": opt(inst.phi.as_ref(), form_to_json),
        "H": opt(inst.hamiltonian.as_ref(), |h| element_to_json(h, false)),
        "c": opt(inst.correction.as_ref(), |c| element_to_json(c, false)),
        "kernel": inst.kernel.iter().map(|k| {
            let mut v = vector_field_to_json(&k.field);
            v["label"] = json!(k.label);
            v
        }).collect::<Vec<_>>(),
        "reeb": vector_field_to_json(&inst.reeb),
        "sub_algebra_B": names(sig, &inst.sub_algebra_b),
        "artin": names(sig, &inst.artin),
        "vdim": inst.virtual_dimension(),
    })
}

fn normalization_name(n: PhiNormalization) -> &'static str {
    match n {
        PhiNormalization::Standard => "standard",
        PhiNormalization::Tautological => "tautological",
    }
}

fn normalization_from(v: Option<&Value>) -> Result<PhiNormalization> {
    match v.and_then(Value::as_str) {
        None | Some("standard") => Ok(PhiNormalization::Standard),
        Some("tautological") => Ok(PhiNormalization::Tautological),
        Some(o) => Err(bad(format!("unknown phi normalization `{o}`"))),
    }
}

fn gen_list(sig: &SignatureRef, v: Option<&Value>) -> Result<Vec<crate::graded::Gen>> {
    let names: Vec<String> = match v {
        Some(v) => from_value(v, "generator list")?,
        None => Vec::new(),
    };
    names.iter().map(|n| sig.lookup(n)).collect()
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("instance: missing `{key}`")))
}

fn opt_field<T>(v: &Value, key: &str, f: impl FnOnce(&Value) -> Result<T>) -> Result<Option<T>> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(x) => f(x).map(Some),
    }
}

pub fn contact_from_json<F: Field>(v: &Value) -> Result<ContactInstance<F>> {
    if v.get("type").and_then(Value::as_str) != Some("contact") {
        return Err(bad("not a contact instance"));
    }
    let sig = signature_from_json(field(v, "gens")?)?;
    let k = field(v, "k")?.as_i64().ok_or_else(|| bad("k must be an integer"))? as i32;
    let variant = match v.get("variant").and_then(Value::as_str) {
        None | Some("standard") => ContactVariant::Standard,
        Some("alternative") => ContactVariant::Alternative,
        Some(o) => return Err(bad(format!("unknown variant `{o}`"))),
    };
    let kernel = field(v, "kernel")?
        .as_array()
        .ok_or_else(|| bad("kernel must be a list"))?
        .iter()
        .map(|kv| {
            let label = kv.get("label").and_then(Value::as_str).unwrap_or("ker").to_string();
            Ok(KernelField { label, field: vector_field_from_json(&sig, kv)? })
        })
        .collect::<Result<_>>()?;
    let mut b = gen_list(&sig, v.get("sub_algebra_B"))?;
    let artin = gen_list(&sig, v.get("artin"))?;
    if b.is_empty() {
        b = sig.gens().filter(|g| !artin.contains(g)).collect();
    }
    Ok(ContactInstance {
        k,
        model: model_from_json(field(v, "model")?)?,
        variant,
        phi_normalization: normalization_from(v.get("phi_normalization"))?,
        d: differential_from_json(&sig, field(v, "d")?)?,
        alpha: form_from_json(&sig, field(v, "alpha")?)?,
        phi: opt_field(v, "phi", |x| form_from_json(&sig, x))?,
        hamiltonian: opt_field(v, "H", |x| element_from_json(&sig, x))?,
        correction: opt_field(v, "c", |x| element_from_json(&sig, x))?,
        kernel,
        reeb: vector_field_from_json(&sig, field(v, "reeb")?)?,
        sub_algebra_b: b,
        artin,
        signature: sig,
    })
}

pub fn symplectic_to_json<F: Field>(inst: &SymplecticInstance<F>) -> Value {
    let sig = &inst.signature;
    json!({
        "type": "symplectic",
        "model": model_to_json(&inst.model),
        "k": inst.k,
        "phi_normalization": normalization_name(inst.phi_normalization),
        "gens": signature_to_json(sig),
        "d": differential_to_json(&inst.d),
        "omega0": form_to_json(&inst.omega0),
        "phi": form_to_json(&inst.phi),
        "H": element_to_json(&inst.hamiltonian, false),
        "sub_algebra_B": names(sig, &inst.sub_algebra_b),
        "artin": names(sig, &inst.artin),
        "vdim": inst.virtual_dimension(),
    })
}

pub fn symplectification_to_json<F: Field>(s: &Symplectification<F>) -> Value {
    json!({
        "type": "symplectification",
        "t": s.signature.name(s.t),
        "gens": signature_to_json(&s.signature),
        "d": differential_to_json(&s.d),
        "lambda": form_to_json(&s.lambda),
        "omega": form_to_json(&s.omega),
        "base": contact_to_json(&s.base),
        "vdim": s.virtual_dimension(),
    })
}

/// What a spec file asks to be built.
#[derive(Debug, Clone)]
pub enum ModelSpec<F: Field> {
    Darboux(DarbouxSpec<F>),
    Jet { n: i32, dim: usize },
    Prequantum { dim: usize, twist: Option<Value> },
}

/// Parses a spec: `{"k","m","H","artin_w","dw","phi"}` for Darboux models,
/// `{"model":"jet","n","dim"}` or `{"model":"prequantum","dim","twist"}`.
pub fn spec_from_json<F: Field>(v: &Value) -> Result<ModelSpec<F>> {
    let int = |key: &str| v.get(key).and_then(Value::as_i64);
    match v.get("model").and_then(Value::as_str).unwrap_or("darboux") {
        "darboux" => {
            let k = int("k").ok_or_else(|| bad("spec: missing integer `k`"))? as i32;
            let m: Vec<usize> = from_value(v.get("m").ok_or_else(|| bad("spec: missing `m`"))?, "spec.m")?;
            let layout = DarbouxLayout::new(k, m)?;
            let h = match v.get("H") {
                None | Some(Value::Null) => Element::zero(layout.signature()),
                Some(h) => element_from_json(layout.signature(), h)?,
            };
            let artin_w = int("artin_w").unwrap_or(0);
            if artin_w < 0 {
                return Err(bad("artin_w must be nonnegative"));
            }
            let mut dw = Vec::new();
            if let Some(list) = v.get("dw") {
                let list = list.as_array().ok_or_else(|| bad("dw must be a list"))?;
                let csig = layout.contact_signature()?;
                for e in list {
                    dw.push(element_from_json(&csig, e)?);
                }
            }
            let spec = DarbouxSpec::new(layout, h)
                .with_artin(artin_w as usize, dw)
                .with_normalization(normalization_from(v.get("phi"))?);
            Ok(ModelSpec::Darboux(spec))
        }
        "jet" => Ok(ModelSpec::Jet {
            n: int("n").ok_or_else(|| bad("jet spec: missing `n`"))? as i32,
            dim: int("dim").ok_or_else(|| bad("jet spec: missing `dim`"))? as usize,
        }),
        "prequantum" => Ok(ModelSpec::Prequantum {
            dim: int("dim").ok_or_else(|| bad("prequantum spec: missing `dim`"))? as usize,
            twist: v.get("twist").filter(|t| !t.is_null()).cloned(),
        }),
        other => Err(bad(format!("unknown model `{other}`"))),
    }
}

pub fn darboux_spec_to_json<F: Field>(spec: &DarbouxSpec<F>) -> Value {
    let mut v = json!({
        "k": spec.layout.k(),
        "m": spec.layout.multiplicities(),
        "H": element_to_json(&spec.hamiltonian, false),
        "artin_w": spec.artin_w,
    });
    if !spec.dw.is_empty() {
        v["dw"] = json!(spec.dw.iter().map(|e| element_to_json(e, false)).collect::<Vec<_>>());
    }
    if spec.phi_normalization == PhiNormalization::Tautological {
        v["phi"] = json!("tautological");
    }
    v
}
