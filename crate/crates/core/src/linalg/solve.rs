use num_traits::Zero;

use super::field::{rref_dense, Field, ModP, Rationals};
use super::{LinalgError, Ring, Scalar, Vector};

/// Precomputed coordinates with respect to a fixed linearly independent family.
///
/// Elimination on `[B | I]` yields pivot positions `P` and a transform `E`
/// with `E B` reduced; coordinates of `v` are then `Eᵀ v[P]`, followed by an
/// exact membership check.
#[derive(Clone, Debug)]
pub struct BasisSolver {
    ring: Ring,
    len: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
    transform: Vec<Vec<Scalar>>,
}

impl BasisSolver {
    pub fn new(basis: &[Vector], ring: Ring) -> Result<Self, LinalgError> {
        let len = basis.first().map_or(0, Vector::len);
        if let Some(bad) = basis.iter().find(|b| b.len() != len) {
            return Err(LinalgError::DimensionMismatch { expected: len, found: bad.len() });
        }
        let (pivots, transform) = match ring {
            Ring::PrimeField(p) => prepare(&ModP(p.get()), basis, len),
            _ => prepare(&Rationals, basis, len),
        };
        if pivots.len() != basis.len() {
            return Err(LinalgError::Dependent);
        }
        Ok(BasisSolver { ring, len, basis: basis.to_vec(), pivots, transform })
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn solve(&self, v: &Vector) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.len && !self.basis.is_empty() {
            return Err(LinalgError::DimensionMismatch { expected: self.len, found: v.len() });
        }
        let k = self.basis.len();
        let d: Vec<Scalar> = self.pivots.iter().map(|&p| v.get(p)).collect();
        let mut coeffs = vec![Scalar::zero(); k];
        for (i, di) in d.iter().enumerate() {
            if di.is_zero() {
                continue;
            }
            for (j, c) in coeffs.iter_mut().enumerate() {
                let e = &self.transform[i][j];
                if !e.is_zero() {
                    *c += e * di;
                }
            }
        }
        if self.ring == Ring::Integers && coeffs.iter().any(|c| !c.is_integer()) {
            return Err(LinalgError::NotInSpan);
        }
        let coeffs: Vec<Scalar> = coeffs.into_iter().map(|c| self.ring.normalize(c)).collect();
        let mut residual: Vec<Scalar> = if self.basis.is_empty() { Vec::new() } else { v.to_dense() };
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (i, x) in b.entries() {
                residual[i] = self.ring.sub(&residual[i], &self.ring.mul(c, x));
            }
        }
        let leftover = if self.basis.is_empty() { !v.is_zero() } else { residual.iter().any(|x| !x.is_zero()) };
        if leftover {
            return Err(LinalgError::NotInSpan);
        }
        Ok(coeffs)
    }
}

fn prepare<F: Field>(f: &F, basis: &[Vector], len: usize) -> (Vec<usize>, Vec<Vec<Scalar>>) {
    let k = basis.len();
    let rows = basis
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let mut row: Vec<(usize, F::Elem)> =
                b.entries().map(|(c, x)| (c, f.import(x))).filter(|(_, x)| !f.is_zero(x)).collect();
            row.push((len + i, f.one()));
            row
        })
        .collect();
    let ech = rref_dense(f, rows, len + k);
    let mut pivots = Vec::new();
    let mut transform = Vec::new();
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        if p >= len {
            break;
        }
        pivots.push(p);
        let mut t = vec![Scalar::zero(); k];
        for (c, x) in row.iter().filter(|(c, _)| *c >= len) {
            t[c - len] = f.export(x);
        }
        transform.push(t);
    }
    (pivots, transform)
}
