use std::collections::{BTreeMap, HashMap};

use super::{Direction, FaceMultihypergraph, FaceSlot, Hyperedge};
use crate::chains::Chain;
use crate::digraph::VertexId;

/// Beyond this many orderings of tied vertices, ties are broken by index.
const PERMUTATION_BUDGET: usize = 5040;

/// Hyperedges as sorted `(anchor, sorted (position, part id))` lists.
pub(crate) type Code = Vec<(VertexId, Vec<(usize, usize)>)>;

/// Isomorphism invariant of a face multihypergraph: vertex keys in canonical
/// order and hyperedges over canonical positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub direction: Direction,
    pub vertices: Vec<(Chain, Vec<(VertexId, Vec<Chain>)>)>,
    pub hyperedges: Vec<(VertexId, Vec<(usize, Chain)>)>,
}

/// Face parts interned to ids ordered by chain value, plus the vertex colors
/// that only depend on labels and decompositions. Mutations keep both fixed,
/// so one table serves a whole mutation class.
pub(crate) struct SlotTable {
    n: usize,
    characteristic: u64,
    parts: Vec<Chain>,
    ids: HashMap<(usize, VertexId), Vec<usize>>,
    neg: Vec<Option<usize>>,
    initial: Vec<usize>,
}

impl SlotTable {
    pub(crate) fn new(f: &FaceMultihypergraph) -> Self {
        let mut distinct: Vec<&Chain> = f.decompositions().flat_map(|(_, parts)| parts.iter()).collect();
        distinct.sort();
        distinct.dedup();
        let index: BTreeMap<&Chain, usize> = distinct.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let neg = distinct.iter().map(|c| index.get(&-*c).copied()).collect();
        let ids: HashMap<(usize, VertexId), Vec<usize>> =
            f.decompositions().map(|(key, parts)| (key, parts.iter().map(|c| index[c]).collect())).collect();
        let keys: Vec<(&Chain, Vec<(VertexId, Vec<usize>)>)> = (0..f.len())
            .map(|i| {
                let sig = f
                    .decompositions()
                    .filter(|((j, _), _)| *j == i)
                    .map(|((_, u), _)| {
                        let mut p = ids[&(i, u)].clone();
                        p.sort_unstable();
                        (u, p)
                    })
                    .collect();
                (&f.vertices()[i].label, sig)
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        let initial = keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect();
        SlotTable {
            n: f.len(),
            characteristic: f.ring().characteristic(),
            parts: distinct.into_iter().cloned().collect(),
            ids,
            neg,
            initial,
        }
    }

    pub(crate) fn id(&self, anchor: VertexId, s: FaceSlot) -> usize {
        self.ids[&(s.vertex, anchor)][s.k]
    }

    /// Same admissibility rule as validation, on interned ids.
    pub(crate) fn valid(&self, h: &Hyperedge) -> bool {
        let ids: Vec<usize> = h.slots.iter().map(|&s| self.id(h.anchor, s)).collect();
        match h.size() {
            2 => h.slots[0].vertex != h.slots[1].vertex && self.neg[ids[1]] == Some(ids[0]),
            t if t >= 3 => {
                let p = self.characteristic;
                p >= 3
                    && t as u64 % p == 0
                    && ids.iter().all(|&i| i == ids[0])
                    && h.slots.iter().any(|s| s.vertex != h.slots[0].vertex)
            }
            _ => false,
        }
    }

    /// Whether hyperedges of size `t >= 3` are admissible at all.
    pub(crate) fn valid_size(&self, t: usize) -> bool {
        self.characteristic >= 3 && t as u64 % self.characteristic == 0
    }

    pub(crate) fn is_negation(&self, a: usize, b: usize) -> bool {
        self.neg[b] == Some(a)
    }

    fn refine(&self, hyperedges: &[Hyperedge]) -> Vec<usize> {
        let mut colors = self.initial.clone();
        let mut classes = usize::MAX;
        loop {
            type Sig = (usize, Vec<(VertexId, usize, Vec<(usize, usize)>)>);
            let mut sigs: Vec<Sig> = colors.iter().map(|&c| (c, Vec::new())).collect();
            for h in hyperedges {
                let mut members: Vec<(usize, usize)> =
                    h.slots.iter().map(|&s| (colors[s.vertex], self.id(h.anchor, s))).collect();
                members.sort_unstable();
                for &s in &h.slots {
                    sigs[s.vertex].1.push((h.anchor, self.id(h.anchor, s), members.clone()));
                }
            }
            for s in &mut sigs {
                s.1.sort_unstable();
            }
            let mut distinct = sigs.clone();
            distinct.sort_unstable();
            distinct.dedup();
            colors = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
            if distinct.len() == classes {
                return colors;
            }
            classes = distinct.len();
        }
    }

    fn encode(&self, hyperedges: &[Hyperedge], pos: &[usize]) -> Code {
        let mut out: Code = hyperedges
            .iter()
            .map(|h| {
                let mut s: Vec<(usize, usize)> =
                    h.slots.iter().map(|&s| (pos[s.vertex], self.id(h.anchor, s))).collect();
                s.sort_unstable();
                (h.anchor, s)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Canonical code of a hyperedge configuration on this table's vertices.
    pub(crate) fn code(&self, hyperedges: &[Hyperedge]) -> Code {
        self.code_with_positions(hyperedges).0
    }

    fn code_with_positions(&self, hyperedges: &[Hyperedge]) -> (Code, Vec<usize>) {
        let colors = self.refine(hyperedges);
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| (colors[i], i));
        let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
        for (p, &i) in order.iter().enumerate() {
            match groups.last_mut() {
                Some((_, g)) if colors[g[0]] == colors[i] => g.push(i),
                _ => groups.push((p, vec![i])),
            }
        }
        let mut pos = vec![0; self.n];
        for (p, &i) in order.iter().enumerate() {
            pos[i] = p;
        }
        let ties: Vec<&(usize, Vec<usize>)> = groups.iter().filter(|(_, g)| g.len() > 1).collect();
        let budget = ties.iter().try_fold(1usize, |acc, (_, g)| {
            let f = (1..=g.len()).try_fold(1usize, |a, k| a.checked_mul(k))?;
            acc.checked_mul(f).filter(|&x| x <= PERMUTATION_BUDGET)
        });
        if ties.is_empty() || budget.is_none() {
            return (self.encode(hyperedges, &pos), pos);
        }
        let perms: Vec<Vec<Vec<usize>>> = ties.iter().map(|(_, g)| permutations(g)).collect();
        let mut choice = vec![0usize; ties.len()];
        let mut best: Option<(Code, Vec<usize>)> = None;
        loop {
            for (t, (start, _)) in ties.iter().enumerate() {
                for (offset, &i) in perms[t][choice[t]].iter().enumerate() {
                    pos[i] = start + offset;
                }
            }
            let code = self.encode(hyperedges, &pos);
            if best.as_ref().map_or(true, |(b, _)| code < *b) {
                best = Some((code, pos.clone()));
            }
            let mut t = 0;
            loop {
                if t == ties.len() {
                    return best.unwrap();
                }
                choice[t] += 1;
                if choice[t] < perms[t].len() {
                    break;
                }
                choice[t] = 0;
                t += 1;
            }
        }
    }

    pub(crate) fn canonical_form(&self, f: &FaceMultihypergraph) -> CanonicalForm {
        let (code, pos) = self.code_with_positions(f.hyperedges());
        let mut by_pos: Vec<usize> = vec![0; self.n];
        for (i, &p) in pos.iter().enumerate() {
            by_pos[p] = i;
        }
        let vertices = by_pos
            .iter()
            .map(|&i| {
                let decomps = f
                    .decompositions()
                    .filter(|((j, _), _)| *j == i)
                    .map(|((_, u), parts)| {
                        let mut p = parts.to_vec();
                        p.sort();
                        (u, p)
                    })
                    .collect();
                (f.vertices()[i].label.clone(), decomps)
            })
            .collect();
        let hyperedges = code
            .into_iter()
            .map(|(u, slots)| (u, slots.into_iter().map(|(p, id)| (p, self.parts[id].clone())).collect()))
            .collect();
        CanonicalForm { direction: f.direction(), vertices, hyperedges }
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

impl FaceMultihypergraph {
    pub fn canonical_form(&self) -> CanonicalForm {
        SlotTable::new(self).canonical_form(self)
    }

    /// Label-preserving isomorphism, decided by comparing canonical forms.
    pub fn is_isomorphic(&self, other: &FaceMultihypergraph) -> bool {
        self.canonical_form() == other.canonical_form()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{gen_family, Family};
    use crate::linalg::Ring;

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(&[1, 2, 3]).len(), 6);
        assert_eq!(permutations(&[]).len(), 1);
    }

    #[test]
    fn relabeling_vertices_is_invisible() {
        let g = gen_family(Family::Trapezohedron, 2).unwrap();
        let q = Ring::Integers;
        let s1 = Chain::from_named(&g, q, &[(1, &["T", "u1", "v1"]), (-1, &["T", "u2", "v1"])]).unwrap();
        let s2 = Chain::from_named(&g, q, &[(-1, &["T", "u1", "v2"]), (1, &["T", "u2", "v2"])]).unwrap();
        let (u1, u2) = (g.vertex("u1").unwrap(), g.vertex("u2").unwrap());
        let build = |order: [usize; 4], pairs: [[(usize, usize); 2]; 4]| {
            let mut f = FaceMultihypergraph::new(Direction::Upper, 2, q);
            for &o in &order {
                f.add_vertex(if o % 2 == 0 { s1.clone() } else { s2.clone() }, None);
            }
            for (j, p) in pairs.iter().enumerate() {
                f.add_hyperedge(if j < 2 { u1 } else { u2 }, p);
            }
            f
        };
        // cycle S1 - S2 - S1' - S2' - S1 with anchors alternating
        let a = build([0, 1, 2, 3], [[(0, 0), (1, 0)], [(2, 0), (3, 0)], [(2, 0), (1, 0)], [(0, 0), (3, 0)]]);
        let b = build([1, 0, 3, 2], [[(1, 0), (0, 0)], [(3, 0), (2, 0)], [(3, 0), (0, 0)], [(1, 0), (2, 0)]]);
        a.validate().unwrap();
        assert!(a.is_isomorphic(&b));
        // two disjoint digons
        let c = build([0, 1, 2, 3], [[(0, 0), (1, 0)], [(2, 0), (3, 0)], [(0, 0), (1, 0)], [(2, 0), (3, 0)]]);
        assert!(!a.is_isomorphic(&c));
    }
}
