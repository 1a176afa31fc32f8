use std::collections::BTreeSet;

use serde::Serialize;

use crate::darboux::{DarbouxLayout, ShiftClass, ShiftKind};
use crate::error::Result;

/// Virtual dimensions realised by Darboux models of one shift, over all
/// multiplicity vectors with entries in `0..=max_mult`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VdimRow {
    pub k: i32,
    pub class: ShiftKind,
    pub symplectic: BTreeSet<i64>,
    pub contact: BTreeSet<i64>,
    /// What the parity pattern should be: `"0"`, `"even"`, or `"any"`.
    pub expected: &'static str,
    pub pass: bool,
}

fn multiplicity_vectors(len: usize, max: usize) -> Vec<Vec<usize>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|v| {
                (0..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect()
    })
}

pub fn vdim_row(k: i32, max_mult: usize) -> Result<VdimRow> {
    let shift = ShiftClass::new(k)?;
    let mut symplectic = BTreeSet::new();
    let mut contact = BTreeSet::new();
    for m in multiplicity_vectors(shift.multiplicity_len(), max_mult) {
        let layout = DarbouxLayout::new(k, m)?;
        symplectic.insert(layout.signature().euler_characteristic());
        contact.insert(layout.contact_signature()?.euler_characteristic());
    }
    let (expected, pass) = match shift.kind() {
        ShiftKind::Odd => ("0", symplectic.iter().all(|&v| v == 0) && contact.iter().all(|&v| v == -1)),
        ShiftKind::ZeroMod4 => ("even", symplectic.iter().all(|v| v % 2 == 0)),
        ShiftKind::TwoMod4 => ("any", symplectic.iter().any(|v| v % 2 == 0) && symplectic.iter().any(|v| v % 2 != 0)),
    };
    Ok(VdimRow { k, class: shift.kind(), symplectic, contact, expected, pass })
}

pub fn vdim_table(ks: &[i32], max_mult: usize) -> Result<Vec<VdimRow>> {
    ks.iter().map(|&k| vdim_row(k, max_mult)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_pattern() {
        let rows = vdim_table(&[-1, -3, -4, -2, -6, -8], 2).unwrap();
        assert!(rows.iter().all(|r| r.pass), "{rows:?}");
        assert_eq!(rows[0].contact, BTreeSet::from([-1]));
        assert!(rows[3].contact.contains(&2) && rows[3].contact.contains(&-1));
    }
}
