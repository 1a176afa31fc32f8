use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Residue class of a negative shift `k`, which fixes the generator layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ShiftKind {
    /// `k = -2ℓ - 1`
    Odd,
    /// `k = -4ℓ`, middle-degree pairs `x, y` in degree `-2ℓ`
    ZeroMod4,
    /// `k = -4ℓ - 2`, self-paired middle generators in degree `-2ℓ - 1`
    TwoMod4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShiftClass {
    k: i32,
    kind: ShiftKind,
    ell: usize,
}

impl ShiftClass {
    pub fn new(k: i32) -> Result<Self> {
        if k >= 0 {
            return Err(Error::NonNegativeShift(k));
        }
        let n = -k;
        let (kind, ell) = if n % 2 == 1 {
            (ShiftKind::Odd, (n - 1) / 2)
        } else if n % 4 == 0 {
            (ShiftKind::ZeroMod4, n / 4)
        } else {
            (ShiftKind::TwoMod4, (n - 2) / 4)
        };
        Ok(Self { k, kind, ell: ell as usize })
    }

    pub fn k(&self) -> i32 {
        self.k
    }

    pub fn kind(&self) -> ShiftKind {
        self.kind
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Largest `i` such that `x^{-i}, y^{k+i}` form a pair.
    pub fn top_pair_index(&self) -> usize {
        match self.kind {
            ShiftKind::Odd => self.ell,
            ShiftKind::ZeroMod4 | ShiftKind::TwoMod4 => 2 * self.ell,
        }
    }

    /// Length of the multiplicity list: one entry per pair index, plus one
    /// for the self-paired middle generators when `k ≡ 2 mod 4`.
    pub fn multiplicity_len(&self) -> usize {
        let pairs = self.top_pair_index() + 1;
        match self.kind {
            ShiftKind::TwoMod4 => pairs + 1,
            _ => pairs,
        }
    }

    /// Degree of the self-paired middle generators, if any.
    pub fn middle_degree(&self) -> Option<i32> {
        (self.kind == ShiftKind::TwoMod4).then_some(self.k / 2)
    }
}

impl fmt::Display for ShiftClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} ({:?}, ℓ={})", self.k, self.kind, self.ell)
    }
}
