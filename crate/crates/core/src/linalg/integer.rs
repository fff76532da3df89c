//! Hermite and Smith normal forms over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

type Row = Vec<BigInt>;

fn sub_multiple(target: &mut Row, q: &BigInt, source: &Row) {
    if q.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

/// Row-style Hermite normal form of the lattice spanned by `rows`, restricted to
/// eliminating in the first `n_cols` columns. Zero rows (in those columns) are
/// kept at the bottom. Returns the number of pivot rows.
///
/// Pivots are chosen by smallest absolute value; leading entries end positive.
/// With `reduce` the entries above each pivot are brought into `[0, pivot)`.
pub(crate) fn echelonize(rows: &mut [Row], n_cols: usize, reduce: bool) -> usize {
    let mut r = 0;
    for c in 0..n_cols {
        if r == rows.len() {
            break;
        }
        loop {
            let best = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(p) = best else { break };
            rows.swap(r, p);
            let (head, tail) = rows.split_at_mut(r + 1);
            let pivot_row = &head[r];
            let mut clean = true;
            for row in tail.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&pivot_row[c]);
                sub_multiple(row, &q, pivot_row);
                if !row[c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -&*x;
            }
        }
        if reduce {
            let (head, tail) = rows.split_at_mut(r);
            let pivot_row = &tail[0];
            for row in head.iter_mut() {
                let q = row[c].div_floor(&pivot_row[c]);
                sub_multiple(row, &q, pivot_row);
            }
        }
        r += 1;
    }
    r
}

/// Canonical basis of the lattice spanned by `rows` (reduced row HNF, zero rows dropped).
pub(crate) fn hnf(mut rows: Vec<Row>, n_cols: usize) -> Vec<Row> {
    let r = echelonize(&mut rows, n_cols, true);
    rows.truncate(r);
    rows
}

/// Saturated basis of `{ x ∈ Z^n : m x = 0 }` for the `n_rows × n_cols`
/// integer matrix `m`, returned in reduced row HNF.
pub(crate) fn integer_kernel(m: &[Row], n_cols: usize) -> Vec<Row> {
    let n_rows = m.len();
    // rows of [m^T | I]; unimodular row operations keep the right block unimodular
    let mut aug: Vec<Row> = (0..n_cols)
        .map(|j| {
            let mut row: Row = m.iter().map(|mr| mr[j].clone()).collect();
            row.extend((0..n_cols).map(|k| BigInt::from((k == j) as i64)));
            row
        })
        .collect();
    let rank = echelonize(&mut aug, n_rows, false);
    let kernel: Vec<Row> = aug.into_iter().skip(rank).map(|row| row[n_rows..].to_vec()).collect();
    hnf(kernel, n_cols)
}

/// Nonzero invariant factors `d_1 | d_2 | … | d_r`.
pub(crate) fn invariant_factors(mut a: Vec<Row>, n_cols: usize) -> Vec<BigInt> {
    let n_rows = a.len();
    let mut factors = Vec::new();
    for t in 0..n_rows.min(n_cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..n_rows {
                for j in t..n_cols {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return factors;
            };
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            let mut dirty = false;
            for i in t + 1..n_rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (head, tail) = a.split_at_mut(i);
                sub_multiple(&mut tail[0], &q, &head[t]);
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..n_cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut() {
                    let s = row[t].clone();
                    if !s.is_zero() {
                        row[j] -= &q * s;
                    }
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                continue;
            }
            let offender = (t + 1..n_rows).find(|&i| (t + 1..n_cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match offender {
                Some(i) => {
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in head[t].iter_mut().zip(&tail[0]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t][t].abs());
    }
    factors
}
