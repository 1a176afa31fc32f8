use std::collections::BTreeSet;

use serde::Serialize;

use crate::calculus::{pair, Form, VectorField};
use crate::error::Result;
use crate::graded::{Point, SignatureRef};
use crate::linalg::Matrix;
use crate::scalar::Field;

/// One graded block of a pairing: fields of degree `degree` against fields
/// of degree `partner = -k - degree`, evaluated at a point.
#[derive(Debug, Clone)]
pub struct PairingBlock<F: Field> {
    pub degree: i32,
    pub partner: i32,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub matrix: Matrix<F>,
}

impl<F: Field> PairingBlock<F> {
    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.determinant().is_some_and(|d| !d.is_zero())
    }
}

/// Serialisable view of a block with entries as strings.
#[derive(Debug, Clone, Serialize)]
pub struct BlockSummary {
    pub degree: i32,
    pub partner: i32,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

impl<F: Field> From<&PairingBlock<F>> for BlockSummary {
    fn from(b: &PairingBlock<F>) -> Self {
        Self {
            degree: b.degree,
            partner: b.partner,
            rows: b.rows.clone(),
            cols: b.cols.clone(),
            entries: b.matrix.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        }
    }
}

/// Pairing blocks of the 2-form `omega` of degree `k` on the given fields,
/// one for each field degree present (ascending).
pub fn pairing_blocks<F: Field>(
    omega: &Form<F>,
    k: i32,
    fields: &[(String, VectorField<F>)],
    point: &Point<F>,
) -> Result<Vec<PairingBlock<F>>> {
    let degrees: BTreeSet<i32> = fields.iter().map(|(_, v)| v.degree()).collect();
    let mut blocks = Vec::new();
    for &a in &degrees {
        let b = -k - a;
        let rows: Vec<&(String, VectorField<F>)> = fields.iter().filter(|(_, v)| v.degree() == a).collect();
        let cols: Vec<&(String, VectorField<F>)> = fields.iter().filter(|(_, v)| v.degree() == b).collect();
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (i, (_, u)) in rows.iter().enumerate() {
            for (j, (_, v)) in cols.iter().enumerate() {
                m.set(i, j, pair(omega, u, v)?.evaluate(point)?);
            }
        }
        blocks.push(PairingBlock {
            degree: a,
            partner: b,
            rows: rows.iter().map(|(l, _)| l.clone()).collect(),
            cols: cols.iter().map(|(l, _)| l.clone()).collect(),
            matrix: m,
        });
    }
    Ok(blocks)
}

/// Coordinate fields `∂/∂g` for the listed generators, labelled by name.
pub fn coordinate_fields<F: Field>(
    sig: &SignatureRef,
    gens: impl IntoIterator<Item = crate::graded::Gen>,
) -> Vec<(String, VectorField<F>)> {
    gens.into_iter().map(|g| (format!("d/d{}", sig.name(g)), VectorField::partial(sig, g))).collect()
}

/// The full matrix of `omega` on the given fields at a point (entries of
/// mismatched degree vanish automatically).
pub fn full_matrix<F: Field>(
    omega: &Form<F>,
    fields: &[(String, VectorField<F>)],
    point: &Point<F>,
) -> Result<Matrix<F>> {
    let n = fields.len();
    let mut m = Matrix::zeros(n, n);
    for (i, (_, u)) in fields.iter().enumerate() {
        for (j, (_, v)) in fields.iter().enumerate() {
            m.set(i, j, pair(omega, u, v)?.evaluate(point)?);
        }
    }
    Ok(m)
}
