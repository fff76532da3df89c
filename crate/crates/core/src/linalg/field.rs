//! Gauss-Jordan elimination over the rationals and over `Z/p`.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::ring::{inverse_mod, symmetric};
use super::Scalar;

/// Blocks with at most this many columns are eliminated densely.
pub const DENSE_LIMIT: usize = 64;

pub(crate) trait Field {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn import(&self, s: &Scalar) -> Self::Elem;
    fn export(&self, e: &Self::Elem) -> Scalar;
}

pub(crate) struct Rationals;

impl Field for Rationals {
    type Elem = Scalar;

    fn zero(&self) -> Scalar {
        Scalar::zero()
    }
    fn one(&self) -> Scalar {
        Scalar::one()
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }
    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a - b
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn neg(&self, a: &Scalar) -> Scalar {
        -a
    }
    fn inv(&self, a: &Scalar) -> Scalar {
        a.recip()
    }
    fn import(&self, s: &Scalar) -> Scalar {
        s.clone()
    }
    fn export(&self, e: &Scalar) -> Scalar {
        e.clone()
    }
}

pub(crate) struct ModP(pub u64);

impl Field for ModP {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
    fn inv(&self, a: &u64) -> u64 {
        inverse_mod(*a, self.0)
    }
    fn import(&self, s: &Scalar) -> u64 {
        let p = BigInt::from(self.0);
        let num = s.numer().mod_floor(&p).to_u64().unwrap();
        let den = s.denom().mod_floor(&p).to_u64().unwrap();
        num * inverse_mod(den, self.0) % self.0
    }
    fn export(&self, e: &u64) -> Scalar {
        Scalar::from_integer(BigInt::from(symmetric(*e, self.0)))
    }
}

/// Reduced row echelon form: nonzero rows only, each with a leading one.
#[derive(Debug)]
pub(crate) struct Echelon<E> {
    pub rows: Vec<Vec<(usize, E)>>,
    pub pivots: Vec<usize>,
}

pub(crate) type SparseRow<E> = Vec<(usize, E)>;

pub(crate) fn rref<F: Field>(f: &F, rows: Vec<SparseRow<F::Elem>>, n_cols: usize) -> Echelon<F::Elem> {
    if n_cols <= DENSE_LIMIT {
        rref_dense(f, rows, n_cols)
    } else {
        rref_sparse(f, rows)
    }
}

pub(crate) fn rref_dense<F: Field>(f: &F, rows: Vec<SparseRow<F::Elem>>, n_cols: usize) -> Echelon<F::Elem> {
    let mut a: Vec<Vec<F::Elem>> = rows
        .into_iter()
        .map(|row| {
            let mut dense = vec![f.zero(); n_cols];
            for (c, x) in row {
                dense[c] = x;
            }
            dense
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n_cols {
        let Some(p) = (r..a.len()).find(|&i| !f.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, p);
        let inv = f.inv(&a[r][c]);
        for x in a[r].iter_mut().skip(c) {
            *x = f.mul(x, &inv);
        }
        for i in 0..a.len() {
            if i == r || f.is_zero(&a[i][c]) {
                continue;
            }
            let factor = a[i][c].clone();
            for j in c..n_cols {
                if !f.is_zero(&a[r][j]) {
                    let delta = f.mul(&factor, &a[r][j]);
                    a[i][j] = f.sub(&a[i][j], &delta);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    let rows = a
        .into_iter()
        .map(|row| row.into_iter().enumerate().filter(|(_, x)| !f.is_zero(x)).collect())
        .collect();
    Echelon { rows, pivots }
}

/// Incremental elimination: rows are inserted one at a time into a fully
/// reduced pivot table. The result is the same unique RREF as the dense path.
pub(crate) fn rref_sparse<F: Field>(f: &F, rows: Vec<SparseRow<F::Elem>>) -> Echelon<F::Elem> {
    let mut table: BTreeMap<usize, SparseRow<F::Elem>> = BTreeMap::new();
    for row in rows {
        let mut row = row;
        let hits: Vec<usize> = row.iter().map(|(c, _)| *c).filter(|c| table.contains_key(c)).collect();
        for c in hits {
            let Some(coef) = lookup(&row, c).cloned() else { continue };
            row = axpy(f, &row, &coef, &table[&c]);
        }
        let Some((lead, lead_val)) = row.first().cloned() else { continue };
        let inv = f.inv(&lead_val);
        let row: SparseRow<F::Elem> = row.into_iter().map(|(c, x)| (c, f.mul(&x, &inv))).collect();
        for other in table.values_mut() {
            if let Some(coef) = lookup(other, lead).cloned() {
                *other = axpy(f, other, &coef, &row);
            }
        }
        table.insert(lead, row);
    }
    let pivots = table.keys().copied().collect();
    Echelon { rows: table.into_values().collect(), pivots }
}

fn lookup<E>(row: &[(usize, E)], c: usize) -> Option<&E> {
    row.binary_search_by_key(&c, |(j, _)| *j).ok().map(|i| &row[i].1)
}

/// `a - coef * b` for sorted sparse rows.
fn axpy<F: Field>(f: &F, a: &[(usize, F::Elem)], coef: &F::Elem, b: &[(usize, F::Elem)]) -> SparseRow<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, f.neg(&f.mul(coef, &b[j].1))));
            j += 1;
        } else {
            let x = f.sub(&a[i].1, &f.mul(coef, &b[j].1));
            if !f.is_zero(&x) {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Kernel basis in reduced echelon form with the smallest possible leading
/// positions, each leading coefficient equal to one.
pub(crate) fn kernel<F: Field>(f: &F, rows: Vec<SparseRow<F::Elem>>, n_cols: usize) -> Vec<SparseRow<F::Elem>> {
    let flip = |c: usize| n_cols - 1 - c;
    let reversed = rows
        .into_iter()
        .map(|row| {
            let mut r: SparseRow<F::Elem> = row.into_iter().map(|(c, x)| (flip(c), x)).collect();
            r.sort_by_key(|(c, _)| *c);
            r
        })
        .collect();
    let ech = rref(f, reversed, n_cols);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; n_cols];
        for &p in &ech.pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in (0..n_cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![(flip(free), f.one())];
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            if let Some(x) = lookup(row, free) {
                v.push((flip(p), f.neg(x)));
            }
        }
        v.sort_by_key(|(c, _)| *c);
        basis.push(v);
    }
    basis.sort_by_key(|v| v[0].0);
    basis
}

pub(crate) fn rank<F: Field>(f: &F, rows: Vec<SparseRow<F::Elem>>, n_cols: usize) -> usize {
    rref(f, rows, n_cols).pivots.len()
}

pub(crate) fn import_rows<'a, F: Field>(
    f: &F,
    rows: impl Iterator<Item = &'a BTreeMap<usize, Scalar>>,
) -> Vec<SparseRow<F::Elem>> {
    rows.map(|row| {
        row.iter()
            .map(|(&c, x)| (c, f.import(x)))
            .filter(|(_, x)| !f.is_zero(x))
            .collect()
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(f: &ModP, dense: &[&[u64]]) -> Vec<SparseRow<u64>> {
        dense
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, &x)| x % f.0 != 0).map(|(c, &x)| (c, x % f.0)).collect())
            .collect()
    }

    #[test]
    fn dense_and_sparse_agree() {
        let f = ModP(7);
        let m = rows(&f, &[&[1, 2, 3, 4], &[2, 4, 6, 1], &[0, 1, 5, 5], &[3, 0, 2, 2]]);
        let d = rref_dense(&f, m.clone(), 4);
        let s = rref_sparse(&f, m);
        assert_eq!(d.pivots, s.pivots);
        assert_eq!(d.rows, s.rows);
    }

    #[test]
    fn kernel_leading_positions_are_smallest() {
        let f = ModP(3);
        let k = kernel(&f, rows(&f, &[&[1, 1, 1]]), 3);
        assert_eq!(k, vec![vec![(0, 1), (2, 2)], vec![(1, 1), (2, 2)]]);
    }

    #[test]
    fn rank_of_rationals() {
        let q = |x: i64| Scalar::from_integer(x.into());
        let m = vec![vec![(0, q(3)), (1, q(6))], vec![(0, q(1)), (1, q(2))]];
        assert_eq!(rank(&Rationals, m, 2), 1);
    }
}
