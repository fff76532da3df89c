use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive};

use super::InductiveError;
use crate::chains::{in_omega, is_connected, Chain, ChainError, OmegaBasis};
use crate::digraph::{Digraph, VertexId};
use crate::extensions::{Direction, FaceMultihypergraph, FaceSlot};
use crate::linalg::{LinalgError, Ring, Scalar};

/// A connected chain together with the complete, strongly connected face
/// multihypergraph it extends from.
#[derive(Clone, Debug)]
pub struct InductiveElement {
    pub chain: Chain,
    pub direction: Direction,
    pub extension_vertex: VertexId,
    pub structure: FaceMultihypergraph,
}

impl InductiveElement {
    /// `e_v`, the base case; its structure is empty.
    pub fn vertex(ring: Ring, direction: Direction, v: VertexId) -> Self {
        InductiveElement {
            chain: Chain::path(ring, &[v]),
            direction,
            extension_vertex: v,
            structure: FaceMultihypergraph::new(direction, 0, ring),
        }
    }

    pub fn dimension(&self) -> usize {
        self.chain.dim()
    }

    pub fn change_ring(&self, ring: Ring) -> Self {
        InductiveElement {
            chain: self.chain.change_ring(ring),
            direction: self.direction,
            extension_vertex: self.extension_vertex,
            structure: self.structure.change_ring(ring),
        }
    }

    /// Re-derive the chain from the structure and check strong connectivity.
    pub fn verify(&self, g: &Digraph, cap: usize) -> Result<bool, InductiveError> {
        if self.dimension() == 0 {
            return Ok(self.chain == Chain::path(self.chain.ring(), &[self.extension_vertex]));
        }
        let y = self.structure.extend_over(self.extension_vertex, g)?;
        Ok(y == self.chain && self.structure.is_strongly_connected(cap)?)
    }
}

/// Signed number of copies of a basis element with coefficient `k`.
fn copies(ring: Ring, k: &Scalar) -> Result<(bool, usize), InductiveError> {
    let v = ring.integer_value(k).ok_or(InductiveError::NonIntegral)?;
    Ok((v.is_negative(), v.abs().to_usize().expect("multiplicity fits in memory")))
}

fn coordinates(basis: &OmegaBasis, y: &Chain) -> Result<Vec<(usize, Scalar)>, InductiveError> {
    basis.coordinates(y).map_err(|e| match e {
        LinalgError::NotInSpan => InductiveError::NotInSpan { dim: y.dim() },
        e => e.into(),
    })
}

/// Split a connected `x ∈ Ω_n` into inductive elements over the given bases
/// of `Ω_{n-1}` and `Ω_{n-2}` (the latter unused below dimension two).
///
/// Faces of `x` are expanded into signed copies of `basis_nm1` elements;
/// faces of those at anchors not adjacent to the extension vertex are
/// expanded in `basis_nm2` and matched, opposite signs first, leftover
/// groups of `p` equal parts forming hyperedges over `Z/p`. The resulting
/// graph is split into components, and each component is split further
/// whenever its mutation class has a disconnected member.
///
/// # Panics
/// If face parts cannot be matched or the pieces fail to sum to `x`.
pub fn inductive_structure(
    x: &Chain,
    basis_nm1: &OmegaBasis,
    basis_nm2: Option<&OmegaBasis>,
    direction: Direction,
    g: &Digraph,
    cap: usize,
) -> Result<Vec<InductiveElement>, InductiveError> {
    let n = x.dim();
    let ring = x.ring();
    if !in_omega(x, g) {
        return Err(ChainError::NotInOmega.into());
    }
    if !is_connected(x)? {
        return Err(ChainError::Disconnected.into());
    }
    let h = direction.endpoint(x)?;
    if n == 0 {
        return Ok(vec![InductiveElement { chain: x.clone(), direction, extension_vertex: h, structure: FaceMultihypergraph::new(direction, 0, ring) }]);
    }

    let mut f = FaceMultihypergraph::new(direction, n - 1, ring);
    for face in direction.faces(x).values() {
        for (j, k) in coordinates(basis_nm1, face)? {
            let (neg, count) = copies(ring, &k)?;
            let y = basis_nm1.get(j);
            let label = if neg { -y } else { y.clone() };
            for _ in 0..count {
                f.add_vertex(label.clone(), Some(j));
            }
        }
    }

    // (anchor, basis element) -> slots carrying it positively / negatively
    let mut pool: BTreeMap<(VertexId, usize), (Vec<FaceSlot>, Vec<FaceSlot>)> = BTreeMap::new();
    for i in 0..f.len() {
        let faces = direction.faces(&f.vertices()[i].label);
        for (w, face) in faces {
            if w == h || direction.adjacent(g, w, h) {
                continue;
            }
            let b2 = basis_nm2.expect("a basis of the dimension below the faces");
            let mut parts = Vec::new();
            for (j, k) in coordinates(b2, &face)? {
                let (neg, count) = copies(ring, &k)?;
                let y = b2.get(j);
                let part = if neg { -y } else { y.clone() };
                let entry = pool.entry((w, j)).or_default();
                for _ in 0..count {
                    let slot = FaceSlot { vertex: i, k: parts.len() };
                    if neg { entry.1.push(slot) } else { entry.0.push(slot) }
                    parts.push(part.clone());
                }
            }
            f.set_decomposition(i, w, parts);
        }
    }
    for ((w, _), (pos, neg)) in pool {
        for (a, b) in pos.iter().zip(&neg) {
            f.add_hyperedge(w, &[(a.vertex, a.k), (b.vertex, b.k)]);
        }
        let m = pos.len().min(neg.len());
        let residue = if pos.len() > m { &pos[m..] } else { &neg[m..] };
        if residue.is_empty() {
            continue;
        }
        let p = ring.characteristic() as usize;
        assert!(p >= 2 && residue.len() % p == 0, "face parts at anchor {w} cannot be matched");
        for chunk in residue.chunks(p) {
            let slots: Vec<(usize, usize)> = chunk.iter().map(|s| (s.vertex, s.k)).collect();
            f.add_hyperedge(w, &slots);
        }
    }
    debug_assert!(f.validate().is_ok(), "{:?}", f.validate());

    let mut pieces = Vec::new();
    for c in f.components() {
        refine(c, cap, &mut pieces)?;
    }
    let mut out = Vec::with_capacity(pieces.len());
    let mut total = Chain::zero(n, ring);
    for piece in pieces {
        let chain = piece.extend_over(h, g)?;
        total += &chain;
        out.push(InductiveElement { chain, direction, extension_vertex: h, structure: piece });
    }
    assert_eq!(total, *x, "inductive pieces do not reassemble the chain");
    Ok(out)
}

/// Split along disconnected mutation class members until every piece is
/// strongly connected.
fn refine(c: FaceMultihypergraph, cap: usize, out: &mut Vec<FaceMultihypergraph>) -> Result<(), InductiveError> {
    match c.find_disconnected_member(cap)? {
        Some(m) => {
            for part in m.components() {
                refine(part, cap, out)?;
            }
        }
        None => out.push(c),
    }
    Ok(())
}
