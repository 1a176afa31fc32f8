//! Shared proptest strategies for unit tests.

use proptest::prelude::*;

use crate::graded::{make_algebra, Element, Gen, GeneratorSpec, Monomial, SignatureRef};
use crate::Q;

/// Mixed-parity signature: two degree-0 coordinates (one invertible), two
/// odd and two even negative-degree generators.
pub fn mixed_signature() -> SignatureRef {
    make_algebra(vec![
        GeneratorSpec::new("x", 0),
        GeneratorSpec::invertible("t"),
        GeneratorSpec::new("a", -1),
        GeneratorSpec::new("b", -1),
        GeneratorSpec::new("c", -2),
        GeneratorSpec::new("e", -3),
    ])
    .unwrap()
}

fn monomial(sig: SignatureRef) -> impl Strategy<Value = (i64, Vec<(Gen, i32)>)> {
    let n = sig.len();
    (-4i64..=4, proptest::collection::vec((0..n as u32, -1i32..=2), 0..4)).prop_map(
        move |(c, raw)| {
            let factors = raw
                .into_iter()
                .map(|(g, e)| {
                    let g = Gen(g);
                    let e = if sig.is_odd(g) || (e < 0 && !sig.is_invertible(g)) {
                        1
                    } else {
                        e
                    };
                    (g, e)
                })
                .collect();
            (c, factors)
        },
    )
}

pub fn element(sig: SignatureRef) -> impl Strategy<Value = Element<Q>> {
    proptest::collection::vec(monomial(sig.clone()), 0..5).prop_map(move |terms| {
        let mut out = Element::zero(&sig);
        for (c, factors) in terms {
            let (neg, m) = Monomial::from_factors(&sig, &factors).unwrap();
            if let Some(m) = m {
                let c = Q::from_integer(c.into());
                let c = if neg { -c } else { c };
                out += &Element::from_terms(&sig, [(m, c)]);
            }
        }
        out
    })
}

/// A random element reduced to the homogeneous component of its leading term.
pub fn homogeneous(sig: SignatureRef) -> impl Strategy<Value = Element<Q>> {
    element(sig).prop_map(|e| {
        let d = e.terms().next().map(|(m, _)| e.monomial_degree(m));
        match d {
            Some(d) => e.homogeneous_component(d),
            None => e,
        }
    })
}
