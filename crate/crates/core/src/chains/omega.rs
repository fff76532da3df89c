use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_traits::Zero;
use rayon::prelude::*;

use super::ops::{endpoints, in_omega, jumps};
use super::{allowed_paths, Chain, ChainError, ElementaryPath};
use crate::digraph::{Digraph, VertexId};
use crate::linalg::{hermite_kernel, kernel_basis, BasisSolver, ExactMatrix, LinalgError, Ring, Scalar, Vector};

pub type Block = (VertexId, VertexId);

#[derive(Clone, Debug)]
struct BasisBlock {
    chains: Vec<Chain>,
    offset: usize,
    solver: OnceLock<Result<(Vec<ElementaryPath>, BasisSolver), LinalgError>>,
}

impl BasisBlock {
    fn solver(&self, ring: Ring) -> Result<&(Vec<ElementaryPath>, BasisSolver), LinalgError> {
        self.solver
            .get_or_init(|| {
                let mut support: Vec<ElementaryPath> = self.chains.iter().flat_map(|c| c.paths().cloned()).collect();
                support.sort();
                support.dedup();
                let vectors: Vec<Vector> = self.chains.iter().map(|c| chain_vector(c, &support)).collect();
                BasisSolver::new(&vectors, ring).map(|s| (support, s))
            })
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// Coordinates of `c` against a sorted list of paths (which must cover its support).
pub(crate) fn chain_vector(c: &Chain, support: &[ElementaryPath]) -> Vector {
    Vector::from_entries(
        support.len(),
        c.terms().map(|(p, x)| (support.binary_search(p).expect("path inside support"), x.clone())),
    )
}

/// Basis of `Ω_n` split into `(tail, head)` blocks.
///
/// Flat indices run block by block in `(tail, head)` order, and in list order
/// inside each block.
#[derive(Clone, Debug)]
pub struct OmegaBasis {
    dim: usize,
    ring: Ring,
    blocks: BTreeMap<Block, BasisBlock>,
    len: usize,
}

impl OmegaBasis {
    /// Group connected chains into blocks, keeping their relative order.
    pub fn from_chains(dim: usize, ring: Ring, chains: impl IntoIterator<Item = Chain>) -> Result<Self, ChainError> {
        let mut grouped: BTreeMap<Block, Vec<Chain>> = BTreeMap::new();
        for c in chains {
            if c.dim() != dim || c.ring() != ring {
                return Err(ChainError::Mismatch { dim: c.dim(), ring: c.ring() });
            }
            grouped.entry(endpoints(&c)?).or_default().push(c);
        }
        Ok(Self::from_blocks(dim, ring, grouped))
    }

    fn from_blocks(dim: usize, ring: Ring, grouped: BTreeMap<Block, Vec<Chain>>) -> Self {
        let mut len = 0;
        let blocks = grouped
            .into_iter()
            .filter(|(_, chains)| !chains.is_empty())
            .map(|(k, chains)| {
                let offset = len;
                len += chains.len();
                (k, BasisBlock { chains, offset, solver: OnceLock::new() })
            })
            .collect();
        OmegaBasis { dim, ring, blocks, len }
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn blocks(&self) -> impl Iterator<Item = (Block, &[Chain])> {
        self.blocks.iter().map(|(&k, b)| (k, b.chains.as_slice()))
    }

    pub fn block(&self, tail: VertexId, head: VertexId) -> &[Chain] {
        self.blocks.get(&(tail, head)).map_or(&[], |b| b.chains.as_slice())
    }

    /// Flat index of the first chain of a block.
    pub fn block_offset(&self, tail: VertexId, head: VertexId) -> Option<usize> {
        self.blocks.get(&(tail, head)).map(|b| b.offset)
    }

    pub fn chains(&self) -> impl Iterator<Item = &Chain> {
        self.blocks.values().flat_map(|b| b.chains.iter())
    }

    pub fn get(&self, i: usize) -> &Chain {
        let b = self.blocks.values().find(|b| i >= b.offset && i < b.offset + b.chains.len()).expect("index in range");
        &b.chains[i - b.offset]
    }

    /// Sparse coordinates `(flat index, coefficient)` of `y` in this basis.
    pub fn coordinates(&self, y: &Chain) -> Result<Vec<(usize, Scalar)>, LinalgError> {
        let mut parts: BTreeMap<Block, Chain> = BTreeMap::new();
        for (p, x) in y.terms() {
            parts
                .entry((p.tail(), p.head()))
                .or_insert_with(|| Chain::zero(y.dim(), y.ring()))
                .add_term(p.clone(), x);
        }
        let mut out = Vec::new();
        for (key, part) in parts {
            let block = self.blocks.get(&key).ok_or(LinalgError::NotInSpan)?;
            let (support, solver) = block.solver(self.ring)?;
            if part.paths().any(|p| support.binary_search(p).is_err()) {
                return Err(LinalgError::NotInSpan);
            }
            let coeffs = solver.solve(&chain_vector(&part, support))?;
            out.extend(coeffs.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (block.offset + j, c)));
        }
        Ok(out)
    }

    /// Check the basis invariants: membership in `Ω_n`, connectedness with the
    /// recorded endpoints, and independence inside each block.
    pub fn validate(&self, g: &Digraph) -> Result<(), ChainError> {
        for (&(t, h), block) in &self.blocks {
            for c in &block.chains {
                if !in_omega(c, g) {
                    return Err(ChainError::NotInOmega);
                }
                if endpoints(c)? != (t, h) {
                    return Err(ChainError::Disconnected);
                }
            }
            block.solver(self.ring)?;
        }
        Ok(())
    }
}

/// `Ω_n(G; R)` as the kernel of the diagonal magnitude differential, one
/// `(tail, head)` block at a time.
pub fn omega_basis(g: &Digraph, n: usize, ring: Ring) -> OmegaBasis {
    let mut grouped: BTreeMap<Block, Vec<ElementaryPath>> = BTreeMap::new();
    for p in allowed_paths(g, n) {
        grouped.entry((p.tail(), p.head())).or_default().push(p);
    }
    let work: Vec<(Block, Vec<ElementaryPath>)> = grouped.into_iter().collect();
    let solved: Vec<(Block, Vec<Chain>)> = work
        .into_par_iter()
        .map(|(key, paths)| {
            let chains = block_kernel(g, n, ring, &paths);
            (key, chains)
        })
        .collect();
    OmegaBasis::from_blocks(n, ring, solved.into_iter().collect())
}

/// Matrix of `Σ_i (-1)^i ∂^M_{n,n,i}` restricted to one block.
pub(crate) fn magnitude_matrix(g: &Digraph, n: usize, paths: &[ElementaryPath]) -> ExactMatrix {
    let mut rows: HashMap<ElementaryPath, usize> = HashMap::new();
    let mut entries: Vec<(usize, usize, i64)> = Vec::new();
    for (c, p) in paths.iter().enumerate() {
        for i in 1..n {
            if jumps(g, p[i - 1], p[i + 1]) {
                let next = rows.len();
                let r = *rows.entry(p.without(i)).or_insert(next);
                entries.push((r, c, if i % 2 == 0 { 1 } else { -1 }));
            }
        }
    }
    let mut m = ExactMatrix::zeros(rows.len(), paths.len());
    for (r, c, s) in entries {
        let x = m.get(r, c) + Scalar::from_integer(s.into());
        m.set(r, c, x);
    }
    m
}

fn block_kernel(g: &Digraph, n: usize, ring: Ring, paths: &[ElementaryPath]) -> Vec<Chain> {
    let m = magnitude_matrix(g, n, paths);
    let kernel = match ring {
        Ring::Integers => hermite_kernel(&m),
        _ => kernel_basis(&m, ring),
    };
    kernel
        .into_iter()
        .map(|v| Chain::from_terms(n, ring, v.entries().map(|(c, x)| (paths[c].clone(), x.clone()))))
        .collect()
}
