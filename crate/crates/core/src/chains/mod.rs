//! Allowed paths, chains, the path differential, and `Ω_n` as a bigraded kernel.
//!
//! Sign convention: `∂ = Σ_i (-1)^i ∂_i`, so `∂(e_{u,v}) = e_v - e_u`.

mod chain;
mod omega;
mod ops;
mod path;

use thiserror::Error;

use crate::linalg::{LinalgError, Ring};

pub use chain::Chain;
pub use omega::{omega_basis, Block, OmegaBasis};
pub use ops::{
    endpoints, face_head, face_tail, head_set, in_omega, is_connected, magnitude_partial, path_boundary, tail_set,
};
pub use path::{allowed_paths, ElementaryPath};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("the zero chain has no endpoints")]
    ZeroChain,
    #[error("chain is not connected")]
    Disconnected,
    #[error("chain does not lie in Omega")]
    NotInOmega,
    #[error("unexpected {dim}-chain over {ring}")]
    Mismatch { dim: usize, ring: Ring },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
