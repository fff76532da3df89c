//! Boundary matrices in `Ω`-bases, Betti numbers, torsion and path Euler
//! characteristics.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::chains::{allowed_paths, omega_basis, path_boundary, OmegaBasis};
use crate::digraph::Digraph;
use crate::linalg::{rank, smith_normal_form, ExactMatrix, Ring, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("the digraph has a directed cycle, so a maximum dimension is required")]
    Unbounded,
}

#[derive(Clone, Debug)]
pub struct HomologyReport {
    pub ring: Ring,
    pub max_dim: usize,
    /// Allowed paths longer than `max_dim` exist.
    pub truncated: bool,
    pub omega_dims: Vec<usize>,
    pub betti: Vec<usize>,
    /// Invariant factors above one of `∂_{n+1}`, over `Z` only.
    pub torsion: Option<Vec<Vec<BigInt>>>,
    /// Over fields, when nothing was truncated.
    pub euler: Option<i64>,
    pub bases: Vec<OmegaBasis>,
    /// `∂_n` for `n = 0..=max_dim`, columns indexed by `bases[n]`.
    pub boundaries: Vec<ExactMatrix>,
}

/// Matrix of `∂_n` from `basis_n` to `basis_nm1`.
///
/// # Panics
/// If a boundary leaves the span of `basis_nm1`, which valid bases rule out.
pub fn boundary_matrix(g: &Digraph, basis_n: &OmegaBasis, basis_nm1: &OmegaBasis) -> ExactMatrix {
    let cols: Vec<Vector> = basis_n
        .chains()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|c| {
            let b = path_boundary(c, g).expect("boundary of an Omega chain is allowed");
            let coords = basis_nm1.coordinates(&b).expect("boundary lies in the span of the lower basis");
            Vector::from_entries(basis_nm1.len(), coords)
        })
        .collect();
    ExactMatrix::from_columns(basis_nm1.len(), &cols)
}

/// Path homology in degrees `0..=max_dim` (default: the longest path length).
pub fn homology_report(g: &Digraph, max_dim: Option<usize>, ring: Ring) -> Result<HomologyReport, HomologyError> {
    let top = match max_dim {
        Some(n) => n,
        None if g.vertex_count() == 0 => 0,
        None => g.longest_path_length().ok_or(HomologyError::Unbounded)?,
    };
    if g.vertex_count() == 0 {
        return Ok(HomologyReport {
            ring,
            max_dim: top,
            truncated: false,
            omega_dims: vec![],
            betti: vec![],
            torsion: (ring == Ring::Integers).then(Vec::new),
            euler: ring.is_field().then_some(0),
            bases: vec![],
            boundaries: vec![],
        });
    }
    let truncated = !allowed_paths(g, top + 1).is_empty();
    let mut bases: Vec<OmegaBasis> = (0..=top + 1).map(|n| omega_basis(g, n, ring)).collect();
    let mut boundaries: Vec<ExactMatrix> = vec![ExactMatrix::zeros(0, bases[0].len())];
    for n in 1..=top + 1 {
        boundaries.push(boundary_matrix(g, &bases[n], &bases[n - 1]));
    }
    let ranks: Vec<usize> = boundaries.iter().map(|m| rank(m, ring)).collect();
    let omega_dims: Vec<usize> = bases[..=top].iter().map(OmegaBasis::len).collect();
    let betti = (0..=top).map(|n| omega_dims[n] - ranks[n] - ranks[n + 1]).collect();
    let torsion = (ring == Ring::Integers).then(|| {
        (0..=top)
            .map(|n| smith_normal_form(&boundaries[n + 1]).into_iter().filter(|d| !d.is_one()).collect())
            .collect()
    });
    let euler = (ring.is_field() && !truncated)
        .then(|| omega_dims.iter().enumerate().map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) }).sum());
    bases.truncate(top + 1);
    boundaries.truncate(top + 1);
    Ok(HomologyReport { ring, max_dim: top, truncated, omega_dims, betti, torsion, euler, bases, boundaries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::Chain;
    use crate::digraph::{gen_family, square, Family};

    fn rings() -> [Ring; 4] {
        [Ring::Rationals, Ring::Integers, Ring::prime_field(2).unwrap(), Ring::prime_field(3).unwrap()]
    }

    #[test]
    fn single_vertex() {
        let mut g = Digraph::new();
        g.add_vertex("a");
        let r = homology_report(&g, None, Ring::Rationals).unwrap();
        assert_eq!(r.betti, vec![1]);
        assert_eq!(r.euler, Some(1));
        assert!(!r.truncated);
    }

    #[test]
    fn empty_digraph() {
        let r = homology_report(&Digraph::new(), None, Ring::Integers).unwrap();
        assert!(r.omega_dims.is_empty() && r.betti.is_empty());
    }

    #[test]
    fn edge_columns() {
        let g = square();
        let r = homology_report(&g, None, Ring::Integers).unwrap();
        let d1 = &r.boundaries[1];
        assert_eq!(d1.n_cols(), 4);
        for c in 0..4 {
            let col: Vec<i64> = (0..4).map(|i| d1.get(i, c).to_integer().try_into().unwrap()).collect();
            assert_eq!(col.iter().filter(|&&x| x == 1).count(), 1);
            assert_eq!(col.iter().filter(|&&x| x == -1).count(), 1);
        }
        assert_eq!(r.betti, vec![1, 0, 0]);
        assert_eq!(r.torsion, Some(vec![vec![], vec![], vec![]]));
    }

    #[test]
    fn trapezohedron_is_acyclic() {
        for t in 2..=4 {
            let g = gen_family(Family::Trapezohedron, t).unwrap();
            for ring in rings() {
                let r = homology_report(&g, None, ring).unwrap();
                assert_eq!(r.omega_dims[3], 1);
                assert_eq!(r.betti[0], 1);
                assert!(r.betti[1..].iter().all(|&b| b == 0), "{ring} {:?}", r.betti);
                let explicit = (1..=t).fold(Chain::zero(3, ring), |mut acc, i| {
                    let next = i % t + 1;
                    let (ui, vi, vn) = (format!("u{i}"), format!("v{i}"), format!("v{next}"));
                    acc += &Chain::from_named(&g, ring, &[(1, &["T", &ui, &vi, "H"]), (-1, &["T", &ui, &vn, "H"])]).unwrap();
                    acc
                });
                // boundary by hand: drop each interior vertex with sign
                let mut by_hand = Chain::zero(2, ring);
                for (p, x) in explicit.terms() {
                    for i in 0..4 {
                        let s = if i % 2 == 0 { x.clone() } else { -x.clone() };
                        by_hand.add_term(p.without(i), &s);
                    }
                }
                assert!(!by_hand.is_zero() && by_hand.is_allowed(&g));
                assert_eq!(path_boundary(&explicit, &g).unwrap(), by_hand);
                assert_eq!(r.boundaries[3].n_cols(), 1);
                assert!(!r.boundaries[3].is_zero());
            }
        }
    }

    #[test]
    fn euler_six_field_dependence() {
        let g = gen_family(Family::Euler, 6).unwrap();
        let q = homology_report(&g, None, Ring::Rationals).unwrap();
        let z5 = homology_report(&g, None, Ring::prime_field(5).unwrap()).unwrap();
        assert_eq!(q.omega_dims, z5.omega_dims);
        for p in [2, 3] {
            let r = homology_report(&g, None, Ring::prime_field(p).unwrap()).unwrap();
            assert_eq!(r.omega_dims[4], q.omega_dims[4] + 1);
            assert_eq!(r.euler.unwrap(), q.euler.unwrap() + 1);
        }
        let z = homology_report(&g, None, Ring::Integers).unwrap();
        assert!(z.euler.is_none());
    }

    #[test]
    fn cycles_need_a_bound() {
        let g = Digraph::from_edges([("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        assert_eq!(homology_report(&g, None, Ring::Rationals).unwrap_err(), HomologyError::Unbounded);
        let r = homology_report(&g, Some(2), Ring::Rationals).unwrap();
        assert!(r.truncated);
        assert!(r.euler.is_none());
        assert_eq!(r.betti[..2], [1, 1]);
    }

    #[test]
    fn boundaries_compose_to_zero() {
        let g = gen_family(Family::Multiplicity, 2).unwrap();
        for ring in rings() {
            let r = homology_report(&g, None, ring).unwrap();
            for n in 2..r.boundaries.len() {
                let prod = r.boundaries[n - 1].mul(&r.boundaries[n], ring).unwrap();
                assert!(prod.is_zero());
            }
        }
    }
}
