//! Inductive elements: chains built by repeated complete, strongly connected
//! extensions starting from vertex chains, and generating sets made of them.

mod generators;
mod structure;

use thiserror::Error;

use crate::chains::ChainError;
use crate::extensions::{ExtensionError, ResourceLimit};
use crate::linalg::LinalgError;

pub use generators::{
    dimension_two_elements, inductive_generators, inductive_tower, BlockCertificate, GeneratingSet, InductiveLevel,
};
pub use structure::{inductive_structure, InductiveElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InductiveError {
    #[error("a face of the {dim}-chain is not in the span of the given basis")]
    NotInSpan { dim: usize },
    #[error("face coordinates are not integral; use a lattice basis")]
    NonIntegral,
    #[error(transparent)]
    Resource(#[from] ResourceLimit),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
