//! Exact linear algebra over `Q`, `Z` and `Z/p`.
//!
//! Field computations run through Gauss-Jordan elimination (dense for narrow
//! matrices, sparse otherwise); integer computations use Hermite and Smith
//! normal forms with big-integer arithmetic.

mod field;
mod integer;
mod matrix;
mod ring;
mod solve;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

pub use field::DENSE_LIMIT;
pub use matrix::{ExactMatrix, Vector};
pub use ring::{Prime, Ring, Scalar, MAX_PRIME};
pub use solve::BasisSolver;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("unrecognised ring spec `{0}` (expected q, z or zp:<prime>)")]
    BadRingSpec(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector is not in the span of the basis")]
    NotInSpan,
    #[error("basis vectors are linearly dependent")]
    Dependent,
}

/// Basis of the right kernel of `m`.
///
/// Over a field the result is the reduced echelon basis of the kernel whose
/// leading positions are as small as possible; every leading coefficient is
/// one. Over the integers this delegates to [`hermite_kernel`].
pub fn kernel_basis(m: &ExactMatrix, ring: Ring) -> Vec<Vector> {
    let n = m.n_cols();
    let pack = |rows: Vec<Vec<(usize, Scalar)>>| {
        rows.into_iter().map(|r| Vector::from_entries(n, r)).collect()
    };
    match ring {
        Ring::Integers => hermite_kernel(m),
        Ring::Rationals => pack(field::kernel(&field::Rationals, field::import_rows(&field::Rationals, m.sparse_rows()), n)),
        Ring::PrimeField(p) => {
            let f = field::ModP(p.get());
            let k = field::kernel(&f, field::import_rows(&f, m.sparse_rows()), n);
            pack(k.into_iter().map(|r| r.into_iter().map(|(c, x)| (c, field::Field::export(&f, &x))).collect()).collect())
        }
    }
}

/// Saturated `Z`-basis of the integer kernel of `m`, in reduced Hermite form
/// (leading entries positive).
///
/// # Panics
/// If `m` has non-integral entries.
pub fn hermite_kernel(m: &ExactMatrix) -> Vec<Vector> {
    let n = m.n_cols();
    let rows = integer_rows(m);
    integer::integer_kernel(&rows, n).into_iter().map(|r| from_integers(&r)).collect()
}

/// Rank over the field, or over `Q` for an integer matrix.
pub fn rank(m: &ExactMatrix, ring: Ring) -> usize {
    let n = m.n_cols();
    match ring {
        Ring::PrimeField(p) => {
            let f = field::ModP(p.get());
            field::rank(&f, field::import_rows(&f, m.sparse_rows()), n)
        }
        _ => field::rank(&field::Rationals, field::import_rows(&field::Rationals, m.sparse_rows()), n),
    }
}

/// Nonzero invariant factors of an integer matrix, each dividing the next.
///
/// # Panics
/// If `m` has non-integral entries.
pub fn smith_normal_form(m: &ExactMatrix) -> Vec<BigInt> {
    integer::invariant_factors(integer_rows(m), m.n_cols())
}

/// Unique coefficients `c` with `v = Σ c_i b_i`.
pub fn express_in_basis(v: &Vector, basis: &[Vector], ring: Ring) -> Result<Vec<Scalar>, LinalgError> {
    BasisSolver::new(basis, ring)?.solve(v)
}

/// Reduced Hermite basis of the `Z`-lattice spanned by integer vectors of length `n`.
pub fn lattice_hnf(vectors: &[Vector], n: usize) -> Vec<Vector> {
    let rows = vectors
        .iter()
        .map(|v| {
            let mut row = vec![BigInt::zero(); n];
            for (i, x) in v.entries() {
                row[i] = integer_entry(x);
            }
            row
        })
        .collect();
    integer::hnf(rows, n).into_iter().map(|r| from_integers(&r)).collect()
}

/// Rescale a rational vector to a primitive integer vector with the same leading sign.
pub fn clear_denominators(v: &Vector) -> Vector {
    let lcm = v.entries().fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v.entries().map(|(_, x)| (x * Scalar::from_integer(lcm.clone())).to_integer()).collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.clone();
    }
    Vector::from_entries(
        v.len(),
        v.entries().map(|(i, _)| i).zip(scaled).map(|(i, x)| (i, Scalar::from_integer(x / &g))),
    )
}

fn integer_entry(x: &Scalar) -> BigInt {
    assert!(x.is_integer(), "non-integral entry {x} in an integer matrix");
    x.to_integer()
}

fn integer_rows(m: &ExactMatrix) -> Vec<Vec<BigInt>> {
    m.sparse_rows()
        .map(|row| {
            let mut dense = vec![BigInt::zero(); m.n_cols()];
            for (&c, x) in row {
                dense[c] = integer_entry(x);
            }
            dense
        })
        .collect()
}

fn from_integers(row: &[BigInt]) -> Vector {
    Vector::from_entries(row.len(), row.iter().enumerate().map(|(i, x)| (i, Scalar::from_integer(x.clone()))))
}
