//! Finite simple digraphs with named vertices.

mod families;
mod io;
mod metric;
mod random;

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

pub use families::{gen_family, multisquare, square, Family};
pub use io::{parse_digraph, serialize};
pub use metric::{quasi_metric, Distance, DistanceMatrix};
pub use random::random_digraph;

/// Dense vertex index, assigned in insertion order.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("loop at vertex `{0}`: edges must join distinct vertices")]
    Loop(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("family `{family}` needs t >= {min}, got {t}")]
    Domain { family: String, t: usize, min: usize },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Digraph {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    out: Vec<BTreeSet<VertexId>>,
    inc: Vec<BTreeSet<VertexId>>,
}

impl Digraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add a vertex, or return the existing index for that name.
    pub fn add_vertex(&mut self, name: &str) -> VertexId {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), v);
        self.out.push(BTreeSet::new());
        self.inc.push(BTreeSet::new());
        v
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), DigraphError> {
        if u == v {
            return Err(DigraphError::Loop(self.names[u].clone()));
        }
        self.out[u].insert(v);
        self.inc[v].insert(u);
        Ok(())
    }

    /// Add an edge between named vertices, declaring them if needed.
    pub fn add_named_edge(&mut self, u: &str, v: &str) -> Result<(), DigraphError> {
        if u == v {
            return Err(DigraphError::Loop(u.to_string()));
        }
        let a = self.add_vertex(u);
        let b = self.add_vertex(v);
        self.add_edge(a, b)
    }

    pub fn from_edges<'a>(edges: impl IntoIterator<Item = (&'a str, &'a str)>) -> Result<Self, DigraphError> {
        let mut g = Digraph::new();
        for (u, v) in edges {
            g.add_named_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(BTreeSet::len).sum()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.names.len()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId, DigraphError> {
        self.index.get(name).copied().ok_or_else(|| DigraphError::UnknownVertex(name.to_string()))
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.out[u].contains(&v)
    }

    pub fn successors(&self, u: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out[u].iter().copied()
    }

    pub fn predecessors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.inc[v].iter().copied()
    }

    /// Edges ordered by (tail index, head index).
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.out.iter().enumerate().flat_map(|(u, s)| s.iter().map(move |&v| (u, v)))
    }

    /// Length of the longest allowed path, or `None` when a directed cycle
    /// makes path lengths unbounded. The empty digraph gives `Some(0)`.
    pub fn longest_path_length(&self) -> Option<usize> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Open,
            Done(usize),
        }
        let n = self.vertex_count();
        let mut mark = vec![Mark::New; n];
        let mut best = 0;
        for root in 0..n {
            if mark[root] != Mark::New {
                continue;
            }
            // iterative post-order DFS
            let mut stack: Vec<(VertexId, Vec<VertexId>)> = vec![(root, self.successors(root).collect())];
            mark[root] = Mark::Open;
            while let Some((v, pending)) = stack.last_mut() {
                let v = *v;
                if let Some(w) = pending.pop() {
                    match mark[w] {
                        Mark::Open => return None,
                        Mark::New => {
                            mark[w] = Mark::Open;
                            stack.push((w, self.successors(w).collect()));
                        }
                        Mark::Done(_) => {}
                    }
                } else {
                    let len = self
                        .successors(v)
                        .map(|w| match mark[w] {
                            Mark::Done(l) => l + 1,
                            _ => unreachable!("successor finished before parent"),
                        })
                        .max()
                        .unwrap_or(0);
                    mark[v] = Mark::Done(len);
                    best = best.max(len);
                    stack.pop();
                }
            }
        }
        Some(best)
    }
}
