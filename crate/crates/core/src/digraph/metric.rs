use std::collections::VecDeque;
use std::fmt;
use std::ops::Add;

use super::{Digraph, VertexId};

/// Shortest-path length, with an absorbing infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Add for Distance {
    type Output = Distance;

    fn add(self, rhs: Distance) -> Distance {
        match (self, rhs) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a + b),
            _ => Distance::Infinite,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn get(&self, u: VertexId, v: VertexId) -> Distance {
        self.entries[u * self.n + v]
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

/// All-pairs directed distances by breadth-first search from every vertex.
pub fn quasi_metric(g: &Digraph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut entries = vec![Distance::Infinite; n * n];
    for s in g.vertices() {
        let row = &mut entries[s * n..(s + 1) * n];
        row[s] = Distance::Finite(0);
        let mut queue = VecDeque::from([(s, 0usize)]);
        while let Some((v, d)) = queue.pop_front() {
            for w in g.successors(v) {
                if row[w] == Distance::Infinite {
                    row[w] = Distance::Finite(d + 1);
                    queue.push_back((w, d + 1));
                }
            }
        }
    }
    DistanceMatrix { n, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{gen_family, Family};

    #[test]
    fn single_edge() {
        let g = Digraph::from_edges([("a", "b")]).unwrap();
        let d = quasi_metric(&g);
        assert_eq!(d.get(0, 1), Distance::Finite(1));
        assert_eq!(d.get(1, 0), Distance::Infinite);
        assert_eq!(d.get(1, 1), Distance::Finite(0));
    }

    #[test]
    fn infinity_absorbs() {
        assert_eq!(Distance::Finite(2) + Distance::Infinite, Distance::Infinite);
        assert!(Distance::Finite(1_000_000) < Distance::Infinite);
    }

    /// Length of the shortest walk found by enumerating every vertex sequence.
    fn brute_force_distance(g: &Digraph, u: VertexId, v: VertexId) -> Distance {
        if u == v {
            return Distance::Finite(0);
        }
        let mut frontier = vec![vec![u]];
        for len in 1..g.vertex_count() {
            let mut next = Vec::new();
            for walk in &frontier {
                for w in g.vertices() {
                    if g.has_edge(*walk.last().unwrap(), w) {
                        if w == v {
                            return Distance::Finite(len);
                        }
                        let mut ext = walk.clone();
                        ext.push(w);
                        next.push(ext);
                    }
                }
            }
            frontier = next;
        }
        Distance::Infinite
    }

    #[test]
    fn trapezohedron_distances_match_enumeration() {
        let g = gen_family(Family::Trapezohedron, 2).unwrap();
        let d = quasi_metric(&g);
        let (t, h) = (g.vertex("T").unwrap(), g.vertex("H").unwrap());
        assert_eq!(brute_force_distance(&g, t, h), Distance::Finite(3));
        assert_eq!(d.get(t, h), Distance::Finite(3));
        for u in g.vertices() {
            for v in g.vertices() {
                assert_eq!(d.get(u, v), brute_force_distance(&g, u, v));
            }
        }
    }
}
