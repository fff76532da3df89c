use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Digraph;

/// Erdős–Rényi style digraph: each ordered pair `(u, v)`, `u ≠ v`, is an edge
/// with probability `numerator / denominator`. Vertices are named `0..n`.
pub fn random_digraph(n_vertices: usize, numerator: u64, denominator: u64, seed: u64) -> Digraph {
    assert!(denominator > 0 && numerator <= denominator, "probability must lie in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Digraph::new();
    for v in 0..n_vertices {
        g.add_vertex(&v.to_string());
    }
    for u in 0..n_vertices {
        for v in 0..n_vertices {
            if u != v && rng.gen_range(0..denominator) < numerator {
                g.add_edge(u, v).expect("distinct endpoints");
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        let g = random_digraph(5, 0, 1, 7);
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 0));
        assert_eq!(random_digraph(4, 1, 1, 7).edge_count(), 12);
    }

    #[test]
    fn deterministic() {
        assert_eq!(random_digraph(6, 1, 2, 42), random_digraph(6, 1, 2, 42));
        assert_ne!(random_digraph(8, 1, 2, 42), random_digraph(8, 1, 2, 43));
    }
}
