use std::collections::BTreeMap;

use num_traits::Zero;

use super::{LinalgError, Ring, Scalar};

/// Sparse vector with only nonzero entries stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    len: usize,
    entries: BTreeMap<usize, Scalar>,
}

impl Vector {
    pub fn zeros(len: usize) -> Self {
        Vector { len, entries: BTreeMap::new() }
    }

    pub fn from_entries(len: usize, entries: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut v = Vector::zeros(len);
        for (i, x) in entries {
            v.set(i, x);
        }
        v
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        Vector::from_entries(values.len(), values.iter().cloned().enumerate())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        self.entries.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, i: usize, x: Scalar) {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        if x.is_zero() {
            self.entries.remove(&i);
        } else {
            self.entries.insert(i, x);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(&i, x)| (i, x))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Index of the first nonzero entry.
    pub fn leading_index(&self) -> Option<usize> {
        self.entries.keys().next().copied()
    }
}

/// Sparse matrix stored row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<BTreeMap<usize, Scalar>>,
}

impl ExactMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        ExactMatrix { n_rows, n_cols, rows: vec![BTreeMap::new(); n_rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::from_integer(1.into()));
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut m = ExactMatrix::zeros(rows.len(), n_cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n_cols, "ragged dense matrix");
            for (c, x) in row.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| Scalar::from_integer(x.into())).collect())
            .collect();
        let mut m = ExactMatrix::from_dense(&dense);
        if rows.is_empty() {
            m.n_cols = 0;
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(n_rows: usize, columns: &[Vector]) -> Self {
        let mut m = ExactMatrix::zeros(n_rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), n_rows, "column length mismatch");
            for (r, x) in col.entries() {
                m.set(r, c, x.clone());
            }
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.rows[r].get(&c).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        assert!(r < self.n_rows && c < self.n_cols, "entry ({r},{c}) out of range");
        if x.is_zero() {
            self.rows[r].remove(&c);
        } else {
            self.rows[r].insert(c, x);
        }
    }

    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, &Scalar)> {
        self.rows[r].iter().map(|(&c, x)| (c, x))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(&c, x)| (r, c, x)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        (0..self.n_rows).map(|r| (0..self.n_cols).map(|c| self.get(r, c)).collect()).collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zeros(self.n_cols, self.n_rows);
        for (r, c, x) in self.entries() {
            t.set(c, r, x.clone());
        }
        t
    }

    pub fn mul_vec(&self, v: &Vector, ring: Ring) -> Result<Vector, LinalgError> {
        if v.len() != self.n_cols {
            return Err(LinalgError::DimensionMismatch { expected: self.n_cols, found: v.len() });
        }
        let mut out = Vector::zeros(self.n_rows);
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc = Scalar::zero();
            for (c, x) in row {
                let y = v.get(*c);
                if !y.is_zero() {
                    acc += x * y;
                }
            }
            out.set(r, ring.normalize(acc));
        }
        Ok(out)
    }

    pub fn mul(&self, other: &ExactMatrix, ring: Ring) -> Result<ExactMatrix, LinalgError> {
        if other.n_rows != self.n_cols {
            return Err(LinalgError::DimensionMismatch { expected: self.n_cols, found: other.n_rows });
        }
        let mut out = ExactMatrix::zeros(self.n_rows, other.n_cols);
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, x) in row {
                for (c, y) in &other.rows[*k] {
                    *acc.entry(*c).or_insert_with(Scalar::zero) += x * y;
                }
            }
            for (c, s) in acc {
                out.set(r, c, ring.normalize(s));
            }
        }
        Ok(out)
    }

    pub(crate) fn sparse_rows(&self) -> impl Iterator<Item = &BTreeMap<usize, Scalar>> {
        self.rows.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeros_are_not_stored() {
        let mut m = ExactMatrix::zeros(2, 2);
        m.set(0, 1, Scalar::from_integer(3.into()));
        m.set(0, 1, Scalar::zero());
        assert!(m.is_zero());
        let v = Vector::from_dense(&[Scalar::zero(), Scalar::from_integer(2.into())]);
        assert_eq!(v.nnz(), 1);
        assert_eq!(v.leading_index(), Some(1));
    }

    #[test]
    fn products() {
        let a = ExactMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let b = ExactMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b, Ring::Integers).unwrap(), ExactMatrix::from_i64(&[&[2, 1], &[4, 3]]));
        let v = Vector::from_dense(&[Scalar::from_integer(1.into()), Scalar::from_integer(1.into())]);
        let z5 = Ring::prime_field(5).unwrap();
        assert_eq!(a.mul_vec(&v, z5).unwrap().to_dense(), vec![z5.from_i64(3), z5.from_i64(7)]);
        assert_eq!(a.transpose().get(0, 1), Scalar::from_integer(3.into()));
    }
}
