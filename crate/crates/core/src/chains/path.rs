use std::fmt;
use std::ops::Deref;

use smallvec::SmallVec;

use crate::digraph::{Digraph, VertexId};

/// Vertex sequence `v_0, …, v_n` of an elementary `n`-path.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementaryPath(SmallVec<[VertexId; 6]>);

impl ElementaryPath {
    pub fn new(vertices: &[VertexId]) -> Self {
        assert!(!vertices.is_empty(), "a path has at least one vertex");
        ElementaryPath(SmallVec::from_slice(vertices))
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    pub fn tail(&self) -> VertexId {
        self.0[0]
    }

    pub fn head(&self) -> VertexId {
        self.0[self.0.len() - 1]
    }

    /// No two consecutive vertices coincide.
    pub fn is_regular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// Every consecutive pair is an edge.
    pub fn is_allowed(&self, g: &Digraph) -> bool {
        self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    /// The path with vertex `i` deleted.
    pub fn without(&self, i: usize) -> ElementaryPath {
        let mut v = self.0.clone();
        v.remove(i);
        ElementaryPath(v)
    }

    pub fn appended(&self, v: VertexId) -> ElementaryPath {
        let mut p = self.0.clone();
        p.push(v);
        ElementaryPath(p)
    }

    pub fn prepended(&self, u: VertexId) -> ElementaryPath {
        let mut p = self.0.clone();
        p.insert(0, u);
        ElementaryPath(p)
    }

    pub fn display<'a>(&'a self, g: &'a Digraph) -> impl fmt::Display + 'a {
        PathDisplay(self, g)
    }
}

impl Deref for ElementaryPath {
    type Target = [VertexId];

    fn deref(&self) -> &[VertexId] {
        &self.0
    }
}

impl fmt::Debug for ElementaryPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{:?}", self.0.as_slice())
    }
}

struct PathDisplay<'a>(&'a ElementaryPath, &'a Digraph);

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|&v| self.1.name(v)).collect();
        write!(f, "e({})", names.join(","))
    }
}

/// All allowed `n`-paths in lexicographic order of their index sequences.
pub fn allowed_paths(g: &Digraph, n: usize) -> Vec<ElementaryPath> {
    let mut out = Vec::new();
    let mut stack: Vec<VertexId> = Vec::with_capacity(n + 1);
    fn extend(g: &Digraph, n: usize, stack: &mut Vec<VertexId>, out: &mut Vec<ElementaryPath>) {
        if stack.len() == n + 1 {
            out.push(ElementaryPath::new(stack));
            return;
        }
        let last = *stack.last().unwrap();
        for w in g.successors(last) {
            stack.push(w);
            extend(g, n, stack, out);
            stack.pop();
        }
    }
    for v in g.vertices() {
        stack.push(v);
        extend(g, n, &mut stack, &mut out);
        stack.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{gen_family, Family};

    /// Filter every vertex sequence of the right length.
    fn brute_force(g: &Digraph, n: usize) -> Vec<Vec<VertexId>> {
        let k = g.vertex_count();
        let mut out = Vec::new();
        for code in 0..k.pow(n as u32 + 1) {
            let seq: Vec<VertexId> = (0..=n).rev().map(|i| code / k.pow(i as u32) % k).collect();
            if seq.windows(2).all(|w| g.has_edge(w[0], w[1])) {
                out.push(seq);
            }
        }
        out
    }

    #[test]
    fn trapezohedron_three_paths() {
        let g = gen_family(Family::Trapezohedron, 2).unwrap();
        let paths = allowed_paths(&g, 3);
        let oracle = brute_force(&g, 3);
        assert_eq!(oracle.len(), 4);
        assert_eq!(paths.iter().map(|p| p.to_vec()).collect::<Vec<_>>(), oracle);
        let (t, h) = (g.vertex("T").unwrap(), g.vertex("H").unwrap());
        assert!(paths.iter().all(|p| p.tail() == t && p.head() == h));
    }

    #[test]
    fn low_dimensions() {
        let g = gen_family(Family::Euler, 2).unwrap();
        assert_eq!(allowed_paths(&g, 0).len(), g.vertex_count());
        let edges: Vec<Vec<VertexId>> = g.edges().map(|(u, v)| vec![u, v]).collect();
        assert_eq!(allowed_paths(&g, 1).iter().map(|p| p.to_vec()).collect::<Vec<_>>(), edges);
        assert!(allowed_paths(&g, 5).is_empty());
    }

    #[test]
    fn path_surgery() {
        let p = ElementaryPath::new(&[0, 1, 0]);
        assert!(p.is_regular());
        assert!(!p.without(1).is_regular());
        assert_eq!(p.appended(2).to_vec(), vec![0, 1, 0, 2]);
        assert_eq!(p.prepended(2).dimension(), 3);
    }
}
