use std::collections::BTreeSet;

use super::{Chain, ChainError};
use crate::digraph::{Digraph, Distance, DistanceMatrix, VertexId};

/// The `i`-th magnitude partial `∂^M_{n,n,i}` on the diagonal: drops `v_i` from
/// each term when `d(v_{i-1}, v_{i+1}) = 2` and kills the term otherwise.
/// The output is a combination of (not necessarily allowed) tuples.
///
/// # Panics
/// Unless `1 ≤ i ≤ n-1`.
pub fn magnitude_partial(x: &Chain, i: usize, d: &DistanceMatrix) -> Chain {
    let n = x.dim();
    assert!(i >= 1 && i < n, "magnitude partial index {i} outside 1..{n}");
    x.filter_map_paths(n - 1, |p| (d.get(p[i - 1], p[i + 1]) == Distance::Finite(2)).then(|| p.without(i)))
}

/// Whether `u → v → w` shortcuts to distance exactly two.
pub(crate) fn jumps(g: &Digraph, u: VertexId, w: VertexId) -> bool {
    u != w && !g.has_edge(u, w)
}

/// Whether every magnitude partial of the allowed chain `x` vanishes.
pub fn in_omega(x: &Chain, g: &Digraph) -> bool {
    if !x.is_allowed(g) {
        return false;
    }
    let n = x.dim();
    (1..n).all(|i| x.filter_map_paths(n - 1, |p| jumps(g, p[i - 1], p[i + 1]).then(|| p.without(i))).is_zero())
}

/// `∂^P = Σ_i (-1)^i ∂_i`, dropping irregular terms; `∂(e_{u,v}) = e_v - e_u`.
///
/// Fails with [`ChainError::NotInOmega`] if the result is not allowed, which
/// happens exactly when `x ∉ Ω_n`.
pub fn path_boundary(x: &Chain, g: &Digraph) -> Result<Chain, ChainError> {
    let n = x.dim();
    if n == 0 {
        return Ok(Chain::zero(0, x.ring()));
    }
    let mut out = Chain::zero(n - 1, x.ring());
    for i in 0..=n {
        let part = x.filter_map_paths(n - 1, |p| {
            let q = p.without(i);
            q.is_regular().then_some(q)
        });
        if i % 2 == 0 {
            out += &part;
        } else {
            out -= &part;
        }
    }
    if !out.is_allowed(g) {
        return Err(ChainError::NotInOmega);
    }
    Ok(out)
}

/// `δ^h_{n,v}`: terms whose second-to-last vertex is `v`, last vertex removed.
pub fn face_head(x: &Chain, v: VertexId) -> Chain {
    let n = x.dim();
    assert!(n >= 1, "faces of 0-chains vanish");
    x.filter_map_paths(n - 1, |p| (p[n - 1] == v).then(|| p.without(n)))
}

/// `δ^t_{n,v}`: terms whose second vertex is `v`, first vertex removed.
pub fn face_tail(x: &Chain, v: VertexId) -> Chain {
    let n = x.dim();
    assert!(n >= 1, "faces of 0-chains vanish");
    x.filter_map_paths(n - 1, |p| (p[1] == v).then(|| p.without(0)))
}

pub fn head_set(x: &Chain) -> Result<BTreeSet<VertexId>, ChainError> {
    if x.is_zero() {
        return Err(ChainError::ZeroChain);
    }
    Ok(x.paths().map(|p| p.head()).collect())
}

pub fn tail_set(x: &Chain) -> Result<BTreeSet<VertexId>, ChainError> {
    if x.is_zero() {
        return Err(ChainError::ZeroChain);
    }
    Ok(x.paths().map(|p| p.tail()).collect())
}

pub fn is_connected(x: &Chain) -> Result<bool, ChainError> {
    Ok(head_set(x)?.len() == 1 && tail_set(x)?.len() == 1)
}

/// `(t(x), h(x))` of a connected chain.
pub fn endpoints(x: &Chain) -> Result<(VertexId, VertexId), ChainError> {
    let (t, h) = (tail_set(x)?, head_set(x)?);
    if t.len() != 1 || h.len() != 1 {
        return Err(ChainError::Disconnected);
    }
    Ok((*t.first().unwrap(), *h.first().unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{quasi_metric, square};
    use crate::linalg::Ring;

    fn q() -> Ring {
        Ring::Rationals
    }

    #[test]
    fn partials_on_two_paths() {
        let g = Digraph::from_edges([("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("b", "d")]).unwrap();
        let d = quasi_metric(&g);
        let abc = Chain::from_named(&g, q(), &[(1, &["a", "b", "c"])]).unwrap();
        assert!(magnitude_partial(&abc, 1, &d).is_zero());
        let bcd = Chain::from_named(&g, q(), &[(3, &["b", "c", "d"])]).unwrap();
        assert!(magnitude_partial(&bcd, 1, &d).is_zero());
        let h = Digraph::from_edges([("a", "b"), ("b", "c")]).unwrap();
        let x = Chain::from_named(&h, q(), &[(3, &["a", "b", "c"])]).unwrap();
        let dh = quasi_metric(&h);
        assert_eq!(magnitude_partial(&x, 1, &dh), Chain::from_named(&h, q(), &[(3, &["a", "c"])]).unwrap());
        let sq = square();
        let s = Chain::from_named(&sq, q(), &[(1, &["u", "v1", "w"]), (-1, &["u", "v2", "w"])]).unwrap();
        assert!(magnitude_partial(&s, 1, &quasi_metric(&sq)).is_zero());
    }

    #[test]
    fn boundaries() {
        let g = Digraph::from_edges([("u", "v"), ("v", "u")]).unwrap();
        let e = Chain::from_named(&g, q(), &[(1, &["u", "v"])]).unwrap();
        let expected = Chain::from_named(&g, q(), &[(1, &["v"]), (-1, &["u"])]).unwrap();
        assert_eq!(path_boundary(&e, &g).unwrap(), expected);
        let v = Chain::from_named(&g, q(), &[(1, &["v"])]).unwrap();
        assert!(path_boundary(&v, &g).unwrap().is_zero());
        // e_{v,u} - e_{u,u} + e_{u,v} with the middle term irregular
        let uvu = Chain::from_named(&g, q(), &[(1, &["u", "v", "u"])]).unwrap();
        let expected = Chain::from_named(&g, q(), &[(1, &["v", "u"]), (1, &["u", "v"])]).unwrap();
        assert_eq!(path_boundary(&uvu, &g).unwrap(), expected);
        assert!(path_boundary(&path_boundary(&uvu, &g).unwrap(), &g).unwrap().is_zero());
    }

    #[test]
    fn boundary_rejects_non_omega() {
        let g = Digraph::from_edges([("a", "b"), ("b", "c")]).unwrap();
        let x = Chain::from_named(&g, q(), &[(1, &["a", "b", "c"])]).unwrap();
        assert!(!in_omega(&x, &g));
        assert_eq!(path_boundary(&x, &g), Err(ChainError::NotInOmega));
    }

    #[test]
    fn faces_and_endpoints() {
        let g = Digraph::from_edges([("u", "v"), ("v", "w"), ("a", "b")]).unwrap();
        let uvw = Chain::from_named(&g, q(), &[(1, &["u", "v", "w"])]).unwrap();
        let (u, v, w) = (g.vertex("u").unwrap(), g.vertex("v").unwrap(), g.vertex("w").unwrap());
        assert_eq!(face_head(&uvw, v), Chain::from_named(&g, q(), &[(1, &["u", "v"])]).unwrap());
        assert!(face_head(&uvw, u).is_zero());
        assert_eq!(face_tail(&uvw, v), Chain::from_named(&g, q(), &[(1, &["v", "w"])]).unwrap());
        assert_eq!(head_set(&uvw).unwrap(), BTreeSet::from([w]));
        assert_eq!(tail_set(&uvw).unwrap(), BTreeSet::from([u]));
        assert!(is_connected(&uvw).unwrap());
        let split = Chain::from_named(&g, q(), &[(1, &["u", "v"]), (1, &["a", "b"])]).unwrap();
        assert_eq!(head_set(&split).unwrap().len(), 2);
        assert!(!is_connected(&split).unwrap());
        assert_eq!(is_connected(&Chain::zero(1, q())), Err(ChainError::ZeroChain));
        let sq = square();
        let s = Chain::from_named(&sq, q(), &[(1, &["u", "v1", "w"]), (-1, &["u", "v2", "w"])]).unwrap();
        assert_eq!(endpoints(&s).unwrap(), (sq.vertex("u").unwrap(), sq.vertex("w").unwrap()));
    }
}
