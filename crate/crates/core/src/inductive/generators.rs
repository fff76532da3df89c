use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use super::{inductive_structure, InductiveElement, InductiveError};
use crate::chains::{allowed_paths, endpoints, omega_basis, Block, Chain, ElementaryPath, OmegaBasis};
use crate::digraph::Digraph;
use crate::extensions::Direction;
use crate::linalg::{lattice_hnf, rank, ExactMatrix, Ring, Vector};

/// Rank comparison for one `(tail, head)` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCertificate {
    pub block: Block,
    pub omega_rank: usize,
    pub generator_rank: usize,
    /// Over `Z`: whether the generators span the same lattice as `Ω_n`.
    pub lattice_equal: Option<bool>,
    /// Over `Z`: whether the selected basis subset is itself a lattice basis.
    pub basis_lattice_equal: Option<bool>,
}

/// Inductive elements of one dimension, with a basis subset and the
/// per-block evidence that they generate `Ω_n`.
#[derive(Clone, Debug)]
pub struct GeneratingSet {
    pub dimension: usize,
    pub ring: Ring,
    pub direction: Direction,
    pub elements: Vec<InductiveElement>,
    /// Indices into `elements` of a maximal independent subset, chosen greedily per block.
    pub basis: Vec<usize>,
    pub spans: bool,
    /// Whether every lower level was built over inductive bases rather than
    /// falling back to kernel bases.
    pub grounded: bool,
    pub certificates: Vec<BlockCertificate>,
}

/// One level of the tower: the generating set and the basis of `Ω_n` that
/// the next level expands faces in.
#[derive(Clone, Debug)]
pub struct InductiveLevel {
    pub set: GeneratingSet,
    pub basis: OmegaBasis,
    /// For each flat basis index, the element it comes from (if any).
    pub provenance: Vec<Option<usize>>,
}

/// Levels `0..=max_dim`. Over `Q` the construction runs over `Z` (faces of
/// lattice elements have integral coordinates) and is read in `Q` at the end.
pub fn inductive_tower(
    g: &Digraph,
    max_dim: usize,
    ring: Ring,
    direction: Direction,
    cap: usize,
) -> Result<Vec<InductiveLevel>, InductiveError> {
    let work = if ring == Ring::Rationals { Ring::Integers } else { ring };
    let mut levels: Vec<InductiveLevel> = vec![vertex_level(g, work, direction)];
    let mut grounded = true;
    for n in 1..=max_dim {
        let prev = &levels[n - 1].basis;
        let prev2 = n.checked_sub(2).map(|k| &levels[k].basis);
        let level = build_level(g, n, work, direction, prev, prev2, cap, grounded)?;
        grounded = level.set.grounded && level.provenance.iter().all(Option::is_some);
        levels.push(level);
    }
    if ring == Ring::Rationals {
        levels = levels.into_iter().map(|l| rationalize(g, l)).collect();
    }
    Ok(levels)
}

/// The level-`n` generating set.
pub fn inductive_generators(
    g: &Digraph,
    n: usize,
    ring: Ring,
    direction: Direction,
    cap: usize,
) -> Result<GeneratingSet, InductiveError> {
    Ok(inductive_tower(g, n, ring, direction, cap)?.pop().expect("level zero is always present").set)
}

fn vertex_level(g: &Digraph, ring: Ring, direction: Direction) -> InductiveLevel {
    let elements: Vec<InductiveElement> = g.vertices().map(|v| InductiveElement::vertex(ring, direction, v)).collect();
    let certificates = g
        .vertices()
        .map(|v| BlockCertificate {
            block: (v, v),
            omega_rank: 1,
            generator_rank: 1,
            lattice_equal: (ring == Ring::Integers).then_some(true),
            basis_lattice_equal: (ring == Ring::Integers).then_some(true),
        })
        .collect();
    let basis = OmegaBasis::from_chains(0, ring, elements.iter().map(|e| e.chain.clone())).expect("vertex chains");
    InductiveLevel {
        set: GeneratingSet {
            dimension: 0,
            ring,
            direction,
            basis: (0..elements.len()).collect(),
            elements,
            spans: true,
            grounded: true,
            certificates,
        },
        provenance: (0..g.vertex_count()).map(Some).collect(),
        basis,
    }
}

fn support_of<'a>(chains: impl IntoIterator<Item = &'a Chain>) -> Vec<ElementaryPath> {
    let mut s: Vec<ElementaryPath> = chains.into_iter().flat_map(|c| c.paths().cloned()).collect();
    s.sort();
    s.dedup();
    s
}

fn vector(c: &Chain, support: &[ElementaryPath]) -> Vector {
    Vector::from_entries(support.len(), c.terms().map(|(p, x)| (support.binary_search(p).unwrap(), x.clone())))
}

fn column_rank(vectors: &[Vector], n_rows: usize, ring: Ring) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&ExactMatrix::from_columns(n_rows, vectors), ring)
}

/// Greedy maximal independent subset, in order.
fn greedy(vectors: &[Vector], n_rows: usize, ring: Ring) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut cols: Vec<Vector> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        cols.push(v.clone());
        if column_rank(&cols, n_rows, ring) == cols.len() {
            chosen.push(i);
        } else {
            cols.pop();
        }
    }
    chosen
}

#[allow(clippy::too_many_arguments)]
fn build_level(
    g: &Digraph,
    n: usize,
    ring: Ring,
    direction: Direction,
    prev: &OmegaBasis,
    prev2: Option<&OmegaBasis>,
    cap: usize,
    grounded_below: bool,
) -> Result<InductiveLevel, InductiveError> {
    let kernel = omega_basis(g, n, ring);
    let inputs: Vec<&Chain> = kernel.chains().collect();
    let produced: Vec<Result<Vec<InductiveElement>, InductiveError>> =
        inputs.par_iter().map(|x| inductive_structure(x, prev, prev2, direction, g, cap)).collect();
    let mut elements: Vec<InductiveElement> = Vec::new();
    let mut seen: HashSet<Chain> = HashSet::new();
    for r in produced {
        for e in r? {
            if seen.insert(e.chain.sign_normalized().0) {
                elements.push(e);
            }
        }
    }
    let mut by_block: BTreeMap<Block, Vec<usize>> = BTreeMap::new();
    for (i, e) in elements.iter().enumerate() {
        by_block.entry(endpoints(&e.chain)?).or_default().push(i);
    }

    let mut basis_idx = Vec::new();
    let mut next_chains = Vec::new();
    let mut provenance = Vec::new();
    let mut certificates = Vec::new();
    let mut spans = true;
    for (block, kchains) in kernel.blocks() {
        let members = by_block.get(&block).map_or(&[][..], Vec::as_slice);
        let support = support_of(kchains.iter().chain(members.iter().map(|&i| &elements[i].chain)));
        let gens: Vec<Vector> = members.iter().map(|&i| vector(&elements[i].chain, &support)).collect();
        let chosen = greedy(&gens, support.len(), ring);
        let omega_rank = kchains.len();
        let generator_rank = chosen.len();
        let (lattice_equal, basis_lattice_equal) = if ring == Ring::Integers {
            let kvecs: Vec<Vector> = kchains.iter().map(|c| vector(c, &support)).collect();
            let target = lattice_hnf(&kvecs, support.len());
            let sub: Vec<Vector> = chosen.iter().map(|&j| gens[j].clone()).collect();
            (Some(lattice_hnf(&gens, support.len()) == target), Some(lattice_hnf(&sub, support.len()) == target))
        } else {
            (None, None)
        };
        spans &= lattice_equal.unwrap_or(generator_rank == omega_rank);
        let usable = basis_lattice_equal.unwrap_or(generator_rank == omega_rank);
        if usable {
            for &j in &chosen {
                next_chains.push(elements[members[j]].chain.clone());
                provenance.push(Some(members[j]));
            }
        } else {
            next_chains.extend(kchains.iter().cloned());
            provenance.extend(std::iter::repeat(None).take(kchains.len()));
        }
        basis_idx.extend(chosen.iter().map(|&j| members[j]));
        certificates.push(BlockCertificate { block, omega_rank, generator_rank, lattice_equal, basis_lattice_equal });
    }
    basis_idx.sort_unstable();
    let basis = OmegaBasis::from_chains(n, ring, next_chains)?;
    Ok(InductiveLevel {
        set: GeneratingSet {
            dimension: n,
            ring,
            direction,
            elements,
            basis: basis_idx,
            spans,
            grounded: grounded_below,
            certificates,
        },
        basis,
        provenance,
    })
}

/// Read a level computed over `Z` in `Q`.
fn rationalize(g: &Digraph, level: InductiveLevel) -> InductiveLevel {
    let q = Ring::Rationals;
    let set = level.set;
    let elements: Vec<InductiveElement> = set.elements.iter().map(|e| e.change_ring(q)).collect();
    let certificates = set
        .certificates
        .into_iter()
        .map(|c| BlockCertificate { lattice_equal: None, basis_lattice_equal: None, ..c })
        .collect::<Vec<_>>();
    let spans = certificates.iter().all(|c| c.generator_rank == c.omega_rank);
    let basis = OmegaBasis::from_chains(set.dimension, q, level.basis.chains().map(|c| c.change_ring(q)))
        .expect("same blocks as the integral basis");
    debug_assert!(basis.validate(g).is_ok());
    InductiveLevel {
        set: GeneratingSet { ring: q, elements, spans, certificates, ..set },
        basis,
        provenance: level.provenance,
    }
}

/// Double edges `e_{a,b,a}`, directed triangles `e_{a,b,c}` with `a → c`,
/// and directed squares `e_{a,b,d} - e_{a,c,d}` with `a ↛ d`, each with
/// positive leading coefficient.
pub fn dimension_two_elements(g: &Digraph, ring: Ring) -> Vec<Chain> {
    let paths = allowed_paths(g, 2);
    let mut out = Vec::new();
    for p in &paths {
        let (a, c) = (p.tail(), p.head());
        if a == c || g.has_edge(a, c) {
            out.push(Chain::path(ring, &[a, p[1], c]));
        }
    }
    for (i, p) in paths.iter().enumerate() {
        for q in &paths[i + 1..] {
            let (a, d) = (p.tail(), p.head());
            if q.tail() == a && q.head() == d && a != d && !g.has_edge(a, d) {
                let mut c = Chain::path(ring, &[a, p[1], d]);
                c -= &Chain::path(ring, &[a, q[1], d]);
                out.push(c.sign_normalized().0);
            }
        }
    }
    out
}
