use std::collections::{BTreeMap, HashSet, VecDeque};

use thiserror::Error;

use super::canonical::SlotTable;
use super::multihypergraph::components_of;
use super::{FaceMultihypergraph, Hyperedge};

pub const DEFAULT_MUTATION_CAP: usize = 1_000_000;

/// The mutation closure grew past the configured number of canonical forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("mutation closure exceeded {cap} canonical forms")]
pub struct ResourceLimit {
    pub cap: usize,
}

impl FaceMultihypergraph {
    /// Every graph one mutation move away, up to isomorphism.
    pub fn mutations(&self) -> Vec<FaceMultihypergraph> {
        let table = SlotTable::new(self);
        let mut seen = HashSet::new();
        moves(&table, self.hyperedges())
            .into_iter()
            .filter(|h| seen.insert(table.code(h)))
            .map(|h| self.with_hyperedges(h))
            .collect()
    }

    /// Breadth-first search of the mutation class for a member that is
    /// disconnected as a multihypergraph.
    pub fn find_disconnected_member(&self, cap: usize) -> Result<Option<FaceMultihypergraph>, ResourceLimit> {
        let n = self.len();
        if components_of(n, self.hyperedges()).len() > 1 {
            return Ok(Some(self.clone()));
        }
        let table = SlotTable::new(self);
        let mut seen = HashSet::from([table.code(self.hyperedges())]);
        let mut queue = VecDeque::from([self.hyperedges().to_vec()]);
        while let Some(state) = queue.pop_front() {
            for next in moves(&table, &state) {
                let code = table.code(&next);
                if seen.contains(&code) {
                    continue;
                }
                if seen.len() >= cap {
                    return Err(ResourceLimit { cap });
                }
                seen.insert(code);
                if components_of(n, &next).len() > 1 {
                    return Ok(Some(self.with_hyperedges(next)));
                }
                queue.push_back(next);
            }
        }
        Ok(None)
    }

    /// Connected, and so is everything in its mutation class.
    pub fn is_strongly_connected(&self, cap: usize) -> Result<bool, ResourceLimit> {
        Ok(self.find_disconnected_member(cap)?.is_none())
    }

    /// One representative per isomorphism class of the mutation closure.
    pub fn mutation_class(&self, cap: usize) -> Result<Vec<FaceMultihypergraph>, ResourceLimit> {
        let table = SlotTable::new(self);
        let mut seen = HashSet::from([table.code(self.hyperedges())]);
        let mut out = vec![self.clone()];
        let mut queue = VecDeque::from([self.hyperedges().to_vec()]);
        while let Some(state) = queue.pop_front() {
            for next in moves(&table, &state) {
                if seen.insert(table.code(&next)) {
                    if seen.len() > cap {
                        return Err(ResourceLimit { cap });
                    }
                    out.push(self.with_hyperedges(next.clone()));
                    queue.push_back(next);
                }
            }
        }
        Ok(out)
    }
}

/// All hyperedge lists obtained by one move, without deduplication.
fn moves(table: &SlotTable, hyperedges: &[Hyperedge]) -> Vec<Vec<Hyperedge>> {
    let mut out = Vec::new();
    let replace = |drop: &[usize], add: Vec<Hyperedge>| {
        let mut next: Vec<Hyperedge> =
            hyperedges.iter().enumerate().filter(|(i, _)| !drop.contains(i)).map(|(_, h)| h.clone()).collect();
        next.extend(add);
        next.sort();
        next
    };
    for a in 0..hyperedges.len() {
        for b in a + 1..hyperedges.len() {
            let (x, y) = (&hyperedges[a], &hyperedges[b]);
            if x.anchor != y.anchor || x.size() != y.size() {
                continue;
            }
            let u = x.anchor;
            if x.size() == 2 {
                let (s1, s2, s3, s4) = (x.slots[0], x.slots[1], y.slots[0], y.slots[1]);
                for [p, q] in [[[s1, s4], [s2, s3]], [[s1, s3], [s2, s4]]] {
                    let (e, f) = (Hyperedge::new(u, p.to_vec()), Hyperedge::new(u, q.to_vec()));
                    if table.valid(&e) && table.valid(&f) {
                        out.push(replace(&[a, b], vec![e, f]));
                    }
                }
                continue;
            }
            let t = x.size();
            // content exchange between two hyperedges of equal size
            let all: Vec<_> = x.slots.iter().chain(&y.slots).copied().collect();
            for mask in 0u64..1 << (2 * t) {
                if mask & 1 == 0 || mask.count_ones() as usize != t {
                    continue;
                }
                let (p, q): (Vec<_>, Vec<_>) = all.iter().enumerate().partition(|(i, _)| mask >> i & 1 == 1);
                let e = Hyperedge::new(u, p.into_iter().map(|(_, s)| *s).collect());
                let f = Hyperedge::new(u, q.into_iter().map(|(_, s)| *s).collect());
                if e != *x && table.valid(&e) && table.valid(&f) {
                    out.push(replace(&[a, b], vec![e, f]));
                }
            }
            // two opposite hyperedges become t edges
            if table.is_negation(table.id(u, x.slots[0]), table.id(u, y.slots[0])) {
                for sigma in permutations_of(t) {
                    let edges: Vec<Hyperedge> =
                        (0..t).map(|j| Hyperedge::new(u, vec![x.slots[j], y.slots[sigma[j]]])).collect();
                    if edges.iter().all(|e| table.valid(e)) {
                        out.push(replace(&[a, b], edges));
                    }
                }
            }
        }
    }
    // t edges sharing an anchor and a label pair become two hyperedges
    let mut groups: BTreeMap<(usize, usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, h) in hyperedges.iter().enumerate() {
        if h.size() == 2 {
            let (p, q) = (table.id(h.anchor, h.slots[0]), table.id(h.anchor, h.slots[1]));
            groups.entry((h.anchor, p.min(q), p.max(q))).or_default().push(i);
        }
    }
    for ((u, lo, hi), members) in groups {
        if lo == hi {
            continue;
        }
        for t in (3..=members.len()).filter(|&t| table.valid_size(t)) {
            for subset in combinations(&members, t) {
                let side = |want: usize| -> Hyperedge {
                    let slots = subset
                        .iter()
                        .map(|&i| {
                            let h = &hyperedges[i];
                            if table.id(u, h.slots[0]) == want {
                                h.slots[0]
                            } else {
                                h.slots[1]
                            }
                        })
                        .collect();
                    Hyperedge::new(u, slots)
                };
                let (e, f) = (side(lo), side(hi));
                if table.valid(&e) && table.valid(&f) {
                    out.push(replace(&subset, vec![e, f]));
                }
            }
        }
    }
    out
}

fn permutations_of(t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..t).collect();
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            let j = if k % 2 == 0 { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    heap(t, &mut current, &mut out);
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out: Vec<Vec<usize>> = combinations(&items[1..], k - 1)
        .into_iter()
        .map(|mut c| {
            c.insert(0, items[0]);
            c
        })
        .collect();
    out.extend(combinations(&items[1..], k));
    out
}
