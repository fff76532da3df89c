use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Direction, ExtensionError};
use crate::chains::{in_omega, Chain};
use crate::digraph::{Digraph, VertexId};
use crate::linalg::Ring;

/// Decompositions with at most this many parts get an exhaustive zero-subsum check.
const EXHAUSTIVE_SUBSETS: usize = 12;
const SAMPLED_SUBSETS: usize = 4096;

/// A graph vertex: a signed chain, optionally tagged with the index of the
/// basis element it is a copy of.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphVertex {
    pub label: Chain,
    pub basis_index: Option<usize>,
}

/// The part `x_i^{u,k}` of the decomposition of vertex `i` at the hyperedge's anchor `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceSlot {
    pub vertex: usize,
    pub k: usize,
}

/// A hyperedge anchored at a digraph vertex. Size two is an ordinary edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperedge {
    pub anchor: VertexId,
    pub slots: Vec<FaceSlot>,
}

impl Hyperedge {
    pub fn new(anchor: VertexId, mut slots: Vec<FaceSlot>) -> Self {
        slots.sort_unstable();
        Hyperedge { anchor, slots }
    }

    pub fn size(&self) -> usize {
        self.slots.len()
    }
}

/// Labeled multihypergraph on chains `x_1, …, x_m` of one dimension, with the
/// chosen face decompositions and the hyperedges matching their parts.
#[derive(Clone, Debug)]
pub struct FaceMultihypergraph {
    direction: Direction,
    dim: usize,
    ring: Ring,
    vertices: Vec<GraphVertex>,
    decompositions: BTreeMap<(usize, VertexId), Vec<Chain>>,
    hyperedges: Vec<Hyperedge>,
}

impl FaceMultihypergraph {
    pub fn new(direction: Direction, dim: usize, ring: Ring) -> Self {
        FaceMultihypergraph {
            direction,
            dim,
            ring,
            vertices: Vec::new(),
            decompositions: BTreeMap::new(),
            hyperedges: Vec::new(),
        }
    }

    /// Add a vertex labeled `label`; each nonzero face starts with the
    /// one-part decomposition.
    ///
    /// # Panics
    /// If the label has the wrong dimension or ring.
    pub fn add_vertex(&mut self, label: Chain, basis_index: Option<usize>) -> usize {
        assert_eq!(label.dim(), self.dim, "vertex label has the wrong dimension");
        assert_eq!(label.ring(), self.ring, "vertex label has the wrong ring");
        let i = self.vertices.len();
        for (u, face) in self.direction.faces(&label) {
            self.decompositions.insert((i, u), vec![face]);
        }
        self.vertices.push(GraphVertex { label, basis_index });
        i
    }

    /// Replace the decomposition of the face of vertex `i` at `u`.
    pub fn set_decomposition(&mut self, i: usize, u: VertexId, parts: Vec<Chain>) {
        self.decompositions.insert((i, u), parts);
    }

    /// Add a hyperedge from `(vertex, k)` pairs.
    pub fn add_hyperedge(&mut self, anchor: VertexId, slots: &[(usize, usize)]) {
        let slots = slots.iter().map(|&(vertex, k)| FaceSlot { vertex, k }).collect();
        self.hyperedges.push(Hyperedge::new(anchor, slots));
        self.hyperedges.sort();
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn vertices(&self) -> &[GraphVertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn hyperedges(&self) -> &[Hyperedge] {
        &self.hyperedges
    }

    pub fn decomposition(&self, i: usize, u: VertexId) -> Option<&[Chain]> {
        self.decompositions.get(&(i, u)).map(Vec::as_slice)
    }

    pub fn decompositions(&self) -> impl Iterator<Item = ((usize, VertexId), &[Chain])> {
        self.decompositions.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    /// The decomposition part a slot refers to, if it exists.
    pub fn slot_label(&self, anchor: VertexId, slot: FaceSlot) -> Option<&Chain> {
        self.decompositions.get(&(slot.vertex, anchor)).and_then(|d| d.get(slot.k))
    }

    /// `x_1 + ⋯ + x_m`.
    pub fn label_sum(&self) -> Chain {
        let mut s = Chain::zero(self.dim, self.ring);
        for v in &self.vertices {
            s += &v.label;
        }
        s
    }

    pub(crate) fn with_hyperedges(&self, mut hyperedges: Vec<Hyperedge>) -> Self {
        hyperedges.sort();
        FaceMultihypergraph { hyperedges, ..self.clone() }
    }

    /// The same data with coefficients read in another ring.
    pub fn change_ring(&self, ring: Ring) -> Self {
        FaceMultihypergraph {
            direction: self.direction,
            dim: self.dim,
            ring,
            vertices: self
                .vertices
                .iter()
                .map(|v| GraphVertex { label: v.label.change_ring(ring), basis_index: v.basis_index })
                .collect(),
            decompositions: self
                .decompositions
                .iter()
                .map(|(&k, parts)| (k, parts.iter().map(|c| c.change_ring(ring)).collect()))
                .collect(),
            hyperedges: self.hyperedges.clone(),
        }
    }

    /// Whether a hyperedge is locally admissible: labels of an edge are
    /// negatives on distinct vertices; a larger hyperedge needs an odd
    /// characteristic dividing its size, equal labels, and not a single vertex.
    pub(crate) fn hyperedge_problem(&self, h: &Hyperedge) -> Option<String> {
        let labels: Option<Vec<&Chain>> = h.slots.iter().map(|&s| self.slot_label(h.anchor, s)).collect();
        let Some(labels) = labels else {
            return Some(format!("hyperedge at {} refers to a missing face part", h.anchor));
        };
        match h.size() {
            0 | 1 => Some("hyperedges need at least two slots".into()),
            2 => {
                if h.slots[0].vertex == h.slots[1].vertex {
                    Some("an edge joins a vertex to itself".into())
                } else if !(labels[0] + labels[1]).is_zero() {
                    Some(format!("edge at {} joins labels that are not negatives", h.anchor))
                } else {
                    None
                }
            }
            t => {
                let p = self.ring.characteristic();
                if p < 3 || t as u64 % p != 0 {
                    Some(format!("hyperedge of size {t} is not allowed over {}", self.ring))
                } else if labels.iter().any(|l| *l != labels[0]) {
                    Some("hyperedge labels differ".into())
                } else if h.slots.iter().all(|s| s.vertex == h.slots[0].vertex) {
                    Some("hyperedge sits on a single vertex".into())
                } else {
                    None
                }
            }
        }
    }

    /// Check every structural condition of a face multihypergraph.
    pub fn validate(&self) -> Result<(), ExtensionError> {
        let bad = |s: String| Err(ExtensionError::Invalid(s));
        for (i, a) in self.vertices.iter().enumerate() {
            if a.label.is_zero() {
                return bad(format!("vertex {i} is labeled by zero"));
            }
            for (j, b) in self.vertices.iter().enumerate().skip(i + 1) {
                if (&a.label + &b.label).is_zero() {
                    return bad(format!("vertices {i} and {j} carry opposite labels"));
                }
            }
        }
        for (&(i, u), parts) in &self.decompositions {
            let Some(v) = self.vertices.get(i) else {
                return bad(format!("decomposition for missing vertex {i}"));
            };
            let face = self.direction.face(&v.label, u);
            if face.is_zero() {
                return bad(format!("vertex {i} has no face at {u}"));
            }
            let mut sum = Chain::zero(face.dim(), self.ring);
            for p in parts {
                if p.dim() != face.dim() || p.ring() != self.ring {
                    return bad(format!("decomposition of vertex {i} at {u} has a mismatched part"));
                }
                sum += p;
            }
            if sum != face {
                return bad(format!("decomposition of vertex {i} at {u} does not sum to its face"));
            }
            if has_zero_subsum(parts) {
                return bad(format!("decomposition of vertex {i} at {u} has a vanishing sub-sum"));
            }
        }
        let mut used = BTreeSet::new();
        for h in &self.hyperedges {
            if let Some(problem) = self.hyperedge_problem(h) {
                return bad(problem);
            }
            for s in &h.slots {
                if !used.insert((h.anchor, *s)) {
                    return bad(format!("face part {:?} at {} is used twice", s, h.anchor));
                }
            }
        }
        Ok(())
    }

    /// Whether every head (tail) of every label is adjacent to `v`.
    pub fn extension_defined(&self, v: VertexId, g: &Digraph) -> bool {
        self.vertices.iter().all(|x| {
            self.direction.ends(&x.label).map_or(false, |ends| ends.iter().all(|&w| self.direction.adjacent(g, w, v)))
        })
    }

    /// `v`-properness: no hyperedge is anchored at `v` or at a vertex adjacent to it.
    pub fn is_proper(&self, v: VertexId, g: &Digraph) -> Result<bool, ExtensionError> {
        if !self.extension_defined(v, g) {
            return Err(ExtensionError::Undefined { vertex: v });
        }
        Ok(self.hyperedges.iter().all(|h| h.anchor != v && !self.direction.adjacent(g, h.anchor, v)))
    }

    /// Anchors whose face parts must all be matched for an extension by `v`.
    pub(crate) fn required_anchors(&self, i: usize, v: VertexId, g: &Digraph) -> Vec<VertexId> {
        self.direction
            .faces(&self.vertices[i].label)
            .into_keys()
            .filter(|&u| u != v && !self.direction.adjacent(g, u, v))
            .collect()
    }

    /// `v`-completeness: proper, and every required face part lies in a hyperedge.
    pub fn is_complete(&self, v: VertexId, g: &Digraph) -> Result<bool, ExtensionError> {
        if !self.is_proper(v, g)? {
            return Ok(false);
        }
        let covered: BTreeSet<(VertexId, FaceSlot)> =
            self.hyperedges.iter().flat_map(|h| h.slots.iter().map(move |&s| (h.anchor, s))).collect();
        for i in 0..self.vertices.len() {
            for u in self.required_anchors(i, v, g) {
                let Some(parts) = self.decompositions.get(&(i, u)) else {
                    return Ok(false);
                };
                if (0..parts.len()).any(|k| !covered.contains(&(u, FaceSlot { vertex: i, k }))) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The extension by `v` of the label sum.
    ///
    /// # Panics
    /// If the result misses `Ω_{n+1}` although the graph is valid and
    /// complete, which would be a bug.
    pub fn extend_over(&self, v: VertexId, g: &Digraph) -> Result<Chain, ExtensionError> {
        if !self.is_complete(v, g)? {
            return Err(ExtensionError::Incomplete { vertex: v });
        }
        self.validate()?;
        let y = self.direction.extend(&self.label_sum(), v, g);
        assert!(in_omega(&y, g), "extension over a complete face multihypergraph left Omega: {y:?}");
        Ok(y)
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn component_sets(&self) -> Vec<Vec<usize>> {
        components_of(self.vertices.len(), &self.hyperedges)
    }

    pub fn is_connected(&self) -> bool {
        self.component_sets().len() <= 1
    }

    /// Split into connected components, each a face multihypergraph in its own right.
    pub fn components(&self) -> Vec<FaceMultihypergraph> {
        self.component_sets().into_iter().map(|set| self.restrict(&set)).collect()
    }

    fn restrict(&self, set: &[usize]) -> FaceMultihypergraph {
        let index: BTreeMap<usize, usize> = set.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let mut out = FaceMultihypergraph::new(self.direction, self.dim, self.ring);
        out.vertices = set.iter().map(|&i| self.vertices[i].clone()).collect();
        out.decompositions = self
            .decompositions
            .iter()
            .filter_map(|(&(i, u), parts)| index.get(&i).map(|&j| ((j, u), parts.clone())))
            .collect();
        out.hyperedges = self
            .hyperedges
            .iter()
            .filter(|h| index.contains_key(&h.slots[0].vertex))
            .map(|h| {
                let slots = h.slots.iter().map(|s| FaceSlot { vertex: index[&s.vertex], k: s.k }).collect();
                Hyperedge::new(h.anchor, slots)
            })
            .collect();
        out.hyperedges.sort();
        out
    }
}

pub(crate) fn components_of(n: usize, hyperedges: &[Hyperedge]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut a: usize) -> usize {
        while parent[a] != a {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        a
    }
    for h in hyperedges {
        let first = find(&mut parent, h.slots[0].vertex);
        for s in &h.slots[1..] {
            let r = find(&mut parent, s.vertex);
            if r != first {
                parent[r.max(first)] = r.min(first);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

/// Whether some nonempty sub-multiset of `parts` sums to zero.
fn has_zero_subsum(parts: &[Chain]) -> bool {
    let Some(first) = parts.first() else { return false };
    let m = parts.len();
    let sums_to_zero = |mask: u64| {
        let mut s = Chain::zero(first.dim(), first.ring());
        for (j, p) in parts.iter().enumerate() {
            if mask >> j & 1 == 1 {
                s += p;
            }
        }
        s.is_zero()
    };
    if m <= EXHAUSTIVE_SUBSETS {
        return (1u64..1 << m).any(sums_to_zero);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    (0..SAMPLED_SUBSETS).any(|_| {
        let mut s = Chain::zero(first.dim(), first.ring());
        let mut any = false;
        for p in parts {
            if rng.gen_bool(0.5) {
                s += p;
                any = true;
            }
        }
        any && s.is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{gen_family, multisquare, square};

    fn named(g: &Digraph, ring: Ring, terms: &[(i64, &[&str])]) -> Chain {
        Chain::from_named(g, ring, terms).unwrap()
    }

    /// `e(u,v1)` and `-e(u,v2)` joined at `u`.
    fn square_graph(g: &Digraph, ring: Ring) -> FaceMultihypergraph {
        let mut f = FaceMultihypergraph::new(Direction::Upper, 1, ring);
        f.add_vertex(named(g, ring, &[(1, &["u", "v1"])]), None);
        f.add_vertex(named(g, ring, &[(-1, &["u", "v2"])]), None);
        f.add_hyperedge(g.vertex("u").unwrap(), &[(0, 0), (1, 0)]);
        f
    }

    #[test]
    fn directed_square_is_complete() {
        let g = square();
        let f = square_graph(&g, Ring::Rationals);
        f.validate().unwrap();
        let w = g.vertex("w").unwrap();
        assert!(f.is_proper(w, &g).unwrap());
        assert!(f.is_complete(w, &g).unwrap());
        let expected = named(&g, Ring::Rationals, &[(1, &["u", "v1", "w"]), (-1, &["u", "v2", "w"])]);
        assert_eq!(f.extend_over(w, &g).unwrap(), expected);
    }

    #[test]
    fn adjacency_breaks_properness() {
        let mut g = square();
        g.add_named_edge("u", "w").unwrap();
        let f = square_graph(&g, Ring::Rationals);
        let w = g.vertex("w").unwrap();
        assert!(!f.is_proper(w, &g).unwrap());
        assert!(!f.is_complete(w, &g).unwrap());
        assert_eq!(f.extend_over(w, &g), Err(ExtensionError::Incomplete { vertex: w }));
    }

    #[test]
    fn missing_edge_is_incomplete_and_undefined_extension_errors() {
        let g = square();
        let mut f = FaceMultihypergraph::new(Direction::Upper, 1, Ring::Integers);
        f.add_vertex(named(&g, Ring::Integers, &[(1, &["u", "v1"])]), None);
        f.add_vertex(named(&g, Ring::Integers, &[(-1, &["u", "v2"])]), None);
        let w = g.vertex("w").unwrap();
        assert!(f.is_proper(w, &g).unwrap());
        assert!(!f.is_complete(w, &g).unwrap());
        let u = g.vertex("u").unwrap();
        assert_eq!(f.is_complete(u, &g), Err(ExtensionError::Undefined { vertex: u }));
    }

    #[test]
    fn single_vertex_over_adjacent_anchors() {
        // e(a,b,c) with (a,c) an edge extends by d without any hyperedge
        let g = Digraph::from_edges([("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("b", "d")]).unwrap();
        let mut f = FaceMultihypergraph::new(Direction::Upper, 2, Ring::Rationals);
        f.add_vertex(named(&g, Ring::Rationals, &[(1, &["a", "b", "c"])]), None);
        let d = g.vertex("d").unwrap();
        assert!(f.is_complete(d, &g).unwrap());
        let y = f.extend_over(d, &g).unwrap();
        assert_eq!(y, named(&g, Ring::Rationals, &[(1, &["a", "b", "c", "d"])]));
    }

    #[test]
    fn hyperedges_need_odd_characteristic() {
        let g = multisquare();
        let u = g.vertex("u").unwrap();
        let w = g.vertex("w").unwrap();
        for (ring, ok) in [
            (Ring::prime_field(3).unwrap(), true),
            (Ring::prime_field(2).unwrap(), false),
            (Ring::prime_field(5).unwrap(), false),
            (Ring::Integers, false),
        ] {
            let mut f = FaceMultihypergraph::new(Direction::Upper, 1, ring);
            for v in ["v1", "v2", "v3"] {
                f.add_vertex(named(&g, ring, &[(1, &["u", v])]), None);
            }
            f.add_hyperedge(u, &[(0, 0), (1, 0), (2, 0)]);
            assert_eq!(f.validate().is_ok(), ok, "{ring}");
            if ok {
                let y = f.extend_over(w, &g).unwrap();
                assert_eq!(y.len(), 3);
            }
        }
    }

    #[test]
    fn validation_failures() {
        let g = square();
        let q = Ring::Rationals;
        let u = g.vertex("u").unwrap();
        let mut f = FaceMultihypergraph::new(Direction::Upper, 1, q);
        f.add_vertex(named(&g, q, &[(1, &["u", "v1"])]), None);
        f.add_vertex(named(&g, q, &[(-1, &["u", "v1"])]), None);
        assert!(f.validate().is_err());

        let mut f = FaceMultihypergraph::new(Direction::Upper, 1, q);
        f.add_vertex(named(&g, q, &[(1, &["u", "v1"])]), None);
        f.add_vertex(named(&g, q, &[(1, &["u", "v2"])]), None);
        f.add_hyperedge(u, &[(0, 0), (1, 0)]);
        assert!(f.validate().is_err(), "labels are not negatives");

        let mut f = square_graph(&g, q);
        f.add_hyperedge(u, &[(0, 0), (1, 0)]);
        assert!(f.validate().is_err(), "slot used twice");

        let mut f = square_graph(&g, q);
        let eu = named(&g, q, &[(1, &["u"])]);
        f.set_decomposition(0, u, vec![eu.clone(), eu.clone(), -eu]);
        assert!(f.validate().is_err(), "vanishing sub-sum");
    }

    #[test]
    fn zero_subsums() {
        let g = square();
        let q = Ring::Rationals;
        let a = named(&g, q, &[(1, &["u", "v1"])]);
        let b = named(&g, q, &[(1, &["u", "v2"])]);
        assert!(!has_zero_subsum(&[a.clone(), b.clone(), a.clone()]));
        assert!(has_zero_subsum(&[a.clone(), b.clone(), -&a]));
        let many: Vec<Chain> = (0..14).map(|_| a.clone()).chain([-&a]).collect();
        assert!(has_zero_subsum(&many));
    }

    #[test]
    fn components_and_restriction() {
        let g = gen_family(crate::digraph::Family::Trapezohedron, 2).unwrap();
        let q = Ring::Integers;
        let s1 = named(&g, q, &[(1, &["T", "u1", "v1"]), (-1, &["T", "u2", "v1"])]);
        let s2 = named(&g, q, &[(-1, &["T", "u1", "v2"]), (1, &["T", "u2", "v2"])]);
        let (u1, u2) = (g.vertex("u1").unwrap(), g.vertex("u2").unwrap());
        let mut f = FaceMultihypergraph::new(Direction::Upper, 2, q);
        for _ in 0..2 {
            f.add_vertex(s1.clone(), None);
            f.add_vertex(s2.clone(), None);
        }
        f.add_hyperedge(u1, &[(0, 0), (1, 0)]);
        f.add_hyperedge(u2, &[(0, 0), (1, 0)]);
        f.add_hyperedge(u1, &[(2, 0), (3, 0)]);
        f.add_hyperedge(u2, &[(2, 0), (3, 0)]);
        f.validate().unwrap();
        let parts = f.components();
        assert_eq!(parts.len(), 2);
        let h = g.vertex("H").unwrap();
        let total = f.extend_over(h, &g).unwrap();
        let piece = parts[0].extend_over(h, &g).unwrap();
        assert_eq!(total, &piece + &piece);
    }
}
