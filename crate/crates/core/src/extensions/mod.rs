//! Upper and lower extensions, face multihypergraphs, and their mutations.

mod canonical;
mod multihypergraph;
mod mutation;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::chains::{face_head, face_tail, head_set, tail_set, Chain, ChainError};
use crate::digraph::{Digraph, VertexId};

pub use canonical::CanonicalForm;
pub use multihypergraph::{FaceMultihypergraph, FaceSlot, GraphVertex, Hyperedge};
pub use mutation::{ResourceLimit, DEFAULT_MUTATION_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("extension by vertex {vertex} is undefined: some endpoint is not adjacent to it")]
    Undefined { vertex: VertexId },
    #[error("face multihypergraph is not complete for vertex {vertex}")]
    Incomplete { vertex: VertexId },
    #[error("invalid face multihypergraph: {0}")]
    Invalid(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

/// Which end of the paths an extension grows from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Upper,
    Lower,
}

impl Direction {
    /// `δ^h_{n,u}` for upper, `δ^t_{n,u}` for lower.
    pub fn face(self, x: &Chain, u: VertexId) -> Chain {
        match self {
            Direction::Upper => face_head(x, u),
            Direction::Lower => face_tail(x, u),
        }
    }

    /// All nonzero faces of `x`, keyed by the selecting vertex.
    pub fn faces(self, x: &Chain) -> BTreeMap<VertexId, Chain> {
        let n = x.dim();
        if n == 0 {
            return BTreeMap::new();
        }
        let idx = match self {
            Direction::Upper => n - 1,
            Direction::Lower => 1,
        };
        let mut anchors: Vec<VertexId> = x.paths().map(|p| p[idx]).collect();
        anchors.sort_unstable();
        anchors.dedup();
        anchors.into_iter().map(|u| (u, self.face(x, u))).filter(|(_, f)| !f.is_zero()).collect()
    }

    pub fn extend(self, x: &Chain, v: VertexId, g: &Digraph) -> Chain {
        match self {
            Direction::Upper => upper_extension(x, v, g),
            Direction::Lower => lower_extension(x, v, g),
        }
    }

    /// `(u, v) ∈ E` for upper, `(v, u) ∈ E` for lower.
    pub fn adjacent(self, g: &Digraph, u: VertexId, v: VertexId) -> bool {
        match self {
            Direction::Upper => g.has_edge(u, v),
            Direction::Lower => g.has_edge(v, u),
        }
    }

    /// The vertex an extension of `x` is built on: `h(x)` or `t(x)`.
    pub fn endpoint(self, x: &Chain) -> Result<VertexId, ChainError> {
        let ends = match self {
            Direction::Upper => head_set(x)?,
            Direction::Lower => tail_set(x)?,
        };
        match ends.len() {
            1 => Ok(*ends.first().unwrap()),
            _ => Err(ChainError::Disconnected),
        }
    }

    /// Head set (upper) or tail set (lower) of `x`.
    pub fn ends(self, x: &Chain) -> Result<std::collections::BTreeSet<VertexId>, ChainError> {
        match self {
            Direction::Upper => head_set(x),
            Direction::Lower => tail_set(x),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
        })
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "upper" => Ok(Direction::Upper),
            "lower" => Ok(Direction::Lower),
            _ => Err(format!("unknown direction '{s}' (expected upper or lower)")),
        }
    }
}

/// `[x]^v`: append `v` to every term whose head has an edge to `v`.
pub fn upper_extension(x: &Chain, v: VertexId, g: &Digraph) -> Chain {
    x.filter_map_paths(x.dim() + 1, |p| g.has_edge(p.head(), v).then(|| p.appended(v)))
}

/// `[x]_u`: prepend `u` to every term whose tail has an edge from `u`.
pub fn lower_extension(x: &Chain, u: VertexId, g: &Digraph) -> Chain {
    x.filter_map_paths(x.dim() + 1, |p| g.has_edge(u, p.tail()).then(|| p.prepended(u)))
}
