use crate::error::{Error, Result};
use crate::graded::{make_algebra, Gen, GeneratorSpec, SignatureRef};

use super::shift::{ShiftClass, ShiftKind};

/// A Darboux pair `x_j^{-i}`, `y_j^{k+i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pair {
    pub i: usize,
    pub j: usize,
    pub x: Gen,
    pub y: Gen,
}

/// Generator layout of a symplectic Darboux model.
///
/// Names: `x{i}_{j}` for `x_j^{-i}`, `y{n}_{j}` for `y_j^{-n}`, and
/// `z{n}_{j}` for the self-paired middle generators of degree `-n`. The
/// contact model appends the distinguished generator `z` of degree `k`, and
/// Artin extensions append `w{n}_{j}` of degree `k - 1`.
#[derive(Debug, Clone)]
pub struct DarbouxLayout {
    shift: ShiftClass,
    m: Vec<usize>,
    sig: SignatureRef,
    pairs: Vec<Pair>,
    middle: Vec<Gen>,
}

impl DarbouxLayout {
    pub fn new(k: i32, m: Vec<usize>) -> Result<Self> {
        let shift = ShiftClass::new(k)?;
        if m.len() != shift.multiplicity_len() {
            return Err(Error::BadMultiplicities { k, expected: shift.multiplicity_len(), found: m });
        }
        let top = shift.top_pair_index();
        let mut gens = Vec::new();
        for (i, &mi) in m.iter().enumerate().take(top + 1) {
            for j in 1..=mi {
                gens.push(GeneratorSpec::new(format!("x{i}_{j}"), -(i as i32)));
            }
        }
        let n_middle = if shift.kind() == ShiftKind::TwoMod4 { m[top + 1] } else { 0 };
        if let Some(md) = shift.middle_degree() {
            for j in 1..=n_middle {
                gens.push(GeneratorSpec::new(format!("z{}_{j}", -md), md));
            }
        }
        for (i, &mi) in m.iter().enumerate().take(top + 1) {
            let deg = k + i as i32;
            for j in 1..=mi {
                gens.push(GeneratorSpec::new(format!("y{}_{j}", -deg), deg));
            }
        }
        let sig = make_algebra(gens)?;
        let mut pairs = Vec::new();
        for (i, &mi) in m.iter().enumerate().take(top + 1) {
            for j in 1..=mi {
                let x = sig.lookup(&format!("x{i}_{j}"))?;
                let y = sig.lookup(&format!("y{}_{j}", -(k + i as i32)))?;
                pairs.push(Pair { i, j, x, y });
            }
        }
        let middle = match shift.middle_degree() {
            Some(md) => (1..=n_middle)
                .map(|j| sig.lookup(&format!("z{}_{j}", -md)))
                .collect::<Result<_>>()?,
            None => Vec::new(),
        };
        Ok(Self { shift, m, sig, pairs, middle })
    }

    pub fn shift(&self) -> ShiftClass {
        self.shift
    }

    pub fn k(&self) -> i32 {
        self.shift.k()
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.m
    }

    /// Signature of the symplectic model (no distinguished generator).
    pub fn signature(&self) -> &SignatureRef {
        &self.sig
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn middle(&self) -> &[Gen] {
        &self.middle
    }

    /// Signature of the contact model: the symplectic one with `z` appended.
    pub fn contact_signature(&self) -> Result<SignatureRef> {
        self.sig.extended([GeneratorSpec::new("z", self.k())])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_minus_three_layout() {
        let l = DarbouxLayout::new(-3, vec![1, 2]).unwrap();
        let names: Vec<_> = l.signature().generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["x0_1", "x1_1", "x1_2", "y3_1", "y2_1", "y2_2"]);
        assert_eq!(l.pairs().len(), 3);
        assert_eq!(l.signature().euler_characteristic(), 0);
        let c = l.contact_signature().unwrap();
        assert_eq!(c.euler_characteristic(), -1);
    }

    #[test]
    fn two_mod_four_layout() {
        let l = DarbouxLayout::new(-2, vec![1, 2]).unwrap();
        let names: Vec<_> = l.signature().generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["x0_1", "z1_1", "z1_2", "y2_1"]);
        assert_eq!(l.middle().len(), 2);
    }

    #[test]
    fn zero_mod_four_middle_pairs_share_a_degree() {
        let l = DarbouxLayout::new(-4, vec![1, 1, 1]).unwrap();
        let p = l.pairs().iter().find(|p| p.i == 2).unwrap();
        assert_eq!(l.signature().degree(p.x), -2);
        assert_eq!(l.signature().degree(p.y), -2);
    }

    #[test]
    fn multiplicity_length_is_checked() {
        assert!(matches!(DarbouxLayout::new(-3, vec![1]), Err(Error::BadMultiplicities { .. })));
    }
}
