use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::darboux::{build_alternative_contact_form, build_contact, random_solution};
use crate::stack::{build_jet_instance, build_prequantum_instance};
use crate::verify::{sample_points, verify_contact};
use crate::Q;

fn same_instance(a: &ContactInstance<Q>, b: &ContactInstance<Q>) {
    assert_eq!(a.signature.generators(), b.signature.generators());
    assert_eq!(a.alpha, b.alpha.rebase(&a.signature).unwrap_or_else(|_| b.alpha.clone()));
    assert_eq!(contact_to_json(a), contact_to_json(b));
}

#[test]
fn element_json_matches_documented_shape() {
    let sig = make_algebra(vec![GeneratorSpec::new("x0", 0)]).unwrap();
    let e = Element::monomial(&sig, Q::new(3.into(), 2.into()), &[("x0", 2)]).unwrap();
    let v = element_to_json(&e, true);
    assert_eq!(v, json!({"gens":[{"name":"x0","deg":0}],"terms":[{"coef":"3/2","mono":[["x0",2]]}]}));
    assert_eq!(element_with_gens_from_json::<Q>(&v).unwrap().to_string(), e.to_string());
    assert_eq!(element_from_json::<Q>(&sig, &json!("3/2*x0^2")).unwrap(), e);
    assert_eq!(element_from_json::<Q>(&sig, &json!(v.to_string())).unwrap(), e);
}

#[test]
fn contact_instances_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut insts = Vec::new();
    for (k, m) in [(-1, vec![2]), (-3, vec![1, 2]), (-2, vec![1, 1]), (-4, vec![1, 1, 1])] {
        let layout = DarbouxLayout::new(k, m).unwrap();
        let h = random_solution(&layout, &mut rng, 400);
        let inst = build_contact(&DarbouxSpec::new(layout, h).with_artin(1, vec![])).unwrap();
        if k % 2 != 0 {
            insts.push(build_alternative_contact_form(&inst).unwrap());
        }
        insts.push(inst);
    }
    insts.push(build_jet_instance(-2, 2).unwrap());
    let sig = crate::stack::prequantum_signature(1).unwrap();
    let tw = form_from_json::<Q>(&sig, &json!({"weight":1,"terms":[{"coef":"2","mono":[["x_1",1]],"wedge":["x_1"]}]})).unwrap();
    insts.push(build_prequantum_instance(1, Some(&tw)).unwrap());
    for inst in insts {
        let v = contact_to_json(&inst);
        let text = serde_json::to_string(&v).unwrap();
        let back: ContactInstance<Q> = contact_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        same_instance(&inst, &back);
        let pts = sample_points(&inst.signature, 3, 1);
        assert_eq!(verify_contact(&inst, &pts).unwrap().to_json(), verify_contact(&back, &pts).unwrap().to_json());
    }
}

#[test]
fn forms_round_trip_with_odd_letters() {
    let layout = DarbouxLayout::new(-2, vec![1, 2]).unwrap();
    let omega: Form<Q> = crate::darboux::symplectic_form(&layout);
    let phi: Form<Q> = crate::darboux::phi_form(&layout);
    for f in [omega, phi] {
        assert_eq!(form_from_json::<Q>(layout.signature(), &form_to_json(&f)).unwrap(), f);
    }
}

#[test]
fn spec_parsing() {
    let v = json!({"k": -3, "m": [1, 2], "H": "y2_1*x0_1", "artin_w": 0});
    let ModelSpec::Darboux(s) = spec_from_json::<Q>(&v).unwrap() else { panic!() };
    assert_eq!(s.layout.k(), -3);
    assert_eq!(darboux_spec_to_json(&s)["H"]["terms"][0]["coef"], json!("1"));
    let h_obj = json!({"k": -1, "m": [1], "H": {"terms":[{"coef":"1","mono":[["x0_1",2]]}]}});
    assert!(matches!(spec_from_json::<Q>(&h_obj).unwrap(), ModelSpec::Darboux(_)));
    assert!(matches!(spec_from_json::<Q>(&json!({"k": -1, "m": [1, 1]})), Err(Error::BadMultiplicities { .. })));
    assert!(matches!(spec_from_json::<Q>(&json!({"m": [1]})), Err(Error::Parse(_))));
    assert!(matches!(
        spec_from_json::<Q>(&json!({"model": "jet", "n": -1, "dim": 2})).unwrap(),
        ModelSpec::Jet { n: -1, dim: 2 }
    ));
}

#[test]
fn keys_are_canonically_ordered() {
    let inst = build_jet_instance::<Q>(0, 1).unwrap();
    let s = serde_json::to_string(&contact_to_json(&inst)).unwrap();
    let keys: Vec<&str> = ["\"alpha\"", "\"artin\"", "\"d\"", "\"gens\""].to_vec();
    let pos: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{s}");
}
