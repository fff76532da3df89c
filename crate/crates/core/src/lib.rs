//! Path chain modules `Ω_n(G; R)` of finite digraphs over `Q`, `Z` and `Z/p`,
//! computed exactly as the kernel of the diagonal magnitude differential, with
//! face multihypergraph extensions, inductive generating sets and path
//! homology on top.

pub mod chains;
pub mod digraph;
pub mod extensions;
pub mod homology;
pub mod inductive;
pub mod linalg;
pub mod verify;

use thiserror::Error;

pub use chains::{omega_basis, path_boundary, Chain, ElementaryPath, OmegaBasis};
pub use digraph::{gen_family, parse_digraph, random_digraph, serialize, Digraph, Family, VertexId};
pub use extensions::{Direction, FaceMultihypergraph, ResourceLimit, DEFAULT_MUTATION_CAP};
pub use homology::{boundary_matrix, homology_report, HomologyReport};
pub use inductive::{inductive_generators, inductive_structure, inductive_tower, GeneratingSet, InductiveElement};
pub use linalg::{ExactMatrix, Ring, Scalar, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Digraph(#[from] digraph::DigraphError),
    #[error(transparent)]
    Linalg(#[from] linalg::LinalgError),
    #[error(transparent)]
    Chain(#[from] chains::ChainError),
    #[error(transparent)]
    Extension(#[from] extensions::ExtensionError),
    #[error(transparent)]
    Inductive(#[from] inductive::InductiveError),
    #[error(transparent)]
    Homology(#[from] homology::HomologyError),
}

impl Error {
    /// Whether the failure is the mutation closure outgrowing its cap.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::Inductive(inductive::InductiveError::Resource(_)))
    }
}
